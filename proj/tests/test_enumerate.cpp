#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "qo/checks.hpp"
#include "qo/enumerate.hpp"

using namespace qo;

TEST_SUITE("enumerate") {
  TEST_CASE("surfaces over a label set") {
    const auto one = make_labels("", 0);
    CHECK(enumerate_surfaces(make_labels("l", 1), 0).size() == 1);
    const auto two = enumerate_surfaces(make_labels("l", 2), 0);
    REQUIRE(two.size() == 2);
    CHECK(to_string(two[0]) == "{ ( l0 ) ( l1 ) }^0");
    CHECK(to_string(two[1]) == "{ ( l0 l1 ) }^0");
    const auto none = enumerate_surfaces(one, 1);
    REQUIRE(none.size() == 2);
    CHECK(to_string(none[0]) == "{ ( ) }^0");
    CHECK(to_string(none[1]) == "{ ( ) }^1");
  }

  TEST_CASE("surface counts and uniqueness") {
    // Permutations of n labels, counted by cycle type, times genera.
    const std::size_t perms[] = {1, 1, 2, 6, 24, 120};
    for (int n = 0; n <= 5; ++n) {
      const auto all = enumerate_surfaces(make_labels("l", n), 2);
      CHECK(all.size() == perms[n] * 3);
      std::set<std::string> texts;
      for (const auto& q : all) texts.insert(to_string(q));
      CHECK(texts.size() == all.size());
      CHECK(std::is_sorted(all.begin(), all.end(),
                           [](const Surface& a, const Surface& b) { return to_string(a) < to_string(b); }));
    }
  }

  TEST_CASE("double factorials") {
    const std::uint64_t expected[] = {1, 1, 3, 15, 105, 945, 10395};
    for (int n = 0; n <= 6; ++n) CHECK(double_factorial_odd(n) == expected[n]);
  }

  TEST_CASE("matchings") {
    CHECK(enumerate_matchings(0).size() == 1);
    CHECK(enumerate_matchings(1).size() == 1);
    CHECK(enumerate_matchings(2).size() == 3);
    CHECK(enumerate_matchings(3).size() == 15);
    for (int n = 0; n <= 5; ++n) {
      const auto all = enumerate_matchings(n);
      REQUIRE(all.size() == double_factorial_odd(n));
      std::set<std::string> texts;
      for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(matching_from_index(n, i) == all[i]);
        texts.insert(to_string(all[i]));
      }
      CHECK(texts.size() == all.size());
    }
  }

  TEST_CASE("genus tables") {
    CHECK(genus_distribution(1) == GenusTable{{0, 1}});
    CHECK(genus_distribution(2) == GenusTable{{0, 2}, {1, 1}});
    CHECK(genus_distribution(3) == GenusTable{{0, 5}, {1, 10}});
    CHECK(genus_distribution(4) == GenusTable{{0, 14}, {1, 70}, {2, 21}});
    CHECK(genus_distribution(5) == GenusTable{{0, 42}, {1, 420}, {2, 483}});
  }

  TEST_CASE("genus tables agree with the oracle and the serial reference") {
    for (int n = 0; n <= 6; ++n) {
      const auto table = genus_distribution(n);
      CHECK(table == oracle::genus_table(n));
      CHECK(table == genus_distribution_serial(n));
      std::uint64_t total = 0;
      for (const auto& [g, c] : table) total += c;
      CHECK(total == double_factorial_odd(n));
      CHECK(table.at(0) == oracle::catalan(n));
    }
  }

  TEST_CASE("table text and json") {
    CHECK(format_genus_table(genus_distribution(2)) == "g=0: 2\ng=1: 1\ntotal: 3\n");
    CHECK(genus_table_json(2, genus_distribution(2)).dump() ==
          R"({"chords":2,"genus":{"0":2,"1":1},"total":3})");
  }
}

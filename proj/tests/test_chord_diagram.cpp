#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "generators.hpp"
#include "oracles.hpp"
#include "qo/chord_diagram.hpp"
#include "qo/enumerate.hpp"
#include "qo/error.hpp"

using namespace qo;

namespace {

ChordDiagram D(std::string_view text) { return parse_diagram(text); }
Surface S(std::string_view text) { return parse_surface(text); }

oracle::Word names(const ChordDiagram& d) {
  oracle::Word out;
  for (const auto& l : d.base().items()) out.push_back(l.name());
  return out;
}

std::vector<std::pair<std::string, std::string>> arc_names(const ChordDiagram& d) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& a : d.arcs()) out.emplace_back(a.first.name(), a.second.name());
  return out;
}

}  // namespace

TEST_SUITE("chord_diagram") {
  TEST_CASE("evaluation examples") {
    CHECK(evaluate(D("[ 1 2 3 ; ]")) == S("{ ( 1 2 3 ) }^0"));
    CHECK(evaluate(D("[ #1 #2 #3 #4 ; (#1 #3) (#2 #4) ]")) == S("{ ( ) }^1"));
    CHECK(evaluate(D("[ A #1 B #2 ; (#1 #2) ]")) == S("{ ( A ) ( B ) }^0"));
    CHECK(evaluate(D("[ ; ]")) == S("{ ( ) }^0"));
    CHECK(evaluate(D("[ #1 #2 #3 #4 ; (#1 #2) (#3 #4) ]")) == S("{ ( ) ( ) ( ) }^0"));
  }

  TEST_CASE("parsing") {
    const auto d = D("[ a #1 b #2 ; (#1 #2) ]");
    CHECK(d.base().size() == 4);
    CHECK(d.arc_count() == 1);
    CHECK(d.partner(Label::glue(1)) == Label::glue(2));
    CHECK(to_string(d) == "[ a #1 b #2 ; (#1 #2) ]");
    CHECK(D("[ #1 #2 ; (#1 #2) ]").arc_count() == 1);
    CHECK(to_string(D("[ #2 b #1 a ; (#2 #1) ]")) == "[ a #2 b #1 ; (#1 #2) ]");
    CHECK(D("[ a ; ]").user_labels() == std::vector<Label>{Label::user("a")});
  }

  TEST_CASE("malformed diagrams are rejected with a position") {
    auto rejects = [](std::string_view text, std::string_view needle) {
      try {
        parse_diagram(text);
        return false;
      } catch (const ParseError& e) {
        return std::string(e.what()).find(needle) != std::string::npos &&
               std::string(e.what()).find("line ") == 0;
      }
    };
    CHECK(rejects("[ a #1 ; ]", "#1 unmatched"));
    CHECK(rejects("[ #1 #2 #3 ; (#1 #2) (#2 #3) ]", "#2"));
    CHECK(rejects("[ #1 #2 ; (#1 #3) ]", "#3"));
    CHECK(rejects("[ a #1 #2 ; (a #1) ]", "a"));
    CHECK(rejects("[ a a ; ]", "a"));
    CHECK(rejects("[ #1 #1 ; (#1 #1) ]", "#1"));
    CHECK(rejects("[ a #1 #2 ; (#1 #2)", "end of input"));
    CHECK(rejects("[ a #x ; ]", "malformed glue token"));
  }

  TEST_CASE("printed text parses back") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
      const auto d = testgen::random_diagram(static_cast<int>(rng() % 5), static_cast<int>(rng() % 5), rng);
      CHECK(D(to_string(d)) == d);
    }
  }

  TEST_CASE("evaluation agrees with the boundary-cycle oracle") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 3000; ++i) {
      const auto d = testgen::random_diagram(static_cast<int>(rng() % 7), static_cast<int>(rng() % 7), rng);
      const auto q = evaluate(d);
      CHECK(to_string(q) == oracle::evaluate(names(d), arc_names(d)));
      CHECK(q.grade() == static_cast<int>(d.arc_count()));
    }
  }

  TEST_CASE("every arc order gives the same surface") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
      const auto d = testgen::random_diagram(static_cast<int>(rng() % 5), static_cast<int>(rng() % 4), rng);
      std::vector<std::size_t> order(d.arc_count());
      std::iota(order.begin(), order.end(), 0);
      const auto reference = evaluate(d);
      do {
        CHECK(evaluate_in_order(d, order) == reference);
      } while (std::next_permutation(order.begin(), order.end()));
    }
    const auto d = D("[ #1 #2 ; (#1 #2) ]");
    const std::vector<std::size_t> bad{1};
    CHECK_THROWS_AS(evaluate_in_order(d, bad), PreconditionError);
  }

  TEST_CASE("renaming tokens keeps the value") {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 200; ++i) {
      const auto d = testgen::random_diagram(static_cast<int>(rng() % 5) + 1, static_cast<int>(rng() % 4), rng);
      std::vector<int> fresh(2 * d.arc_count());
      std::iota(fresh.begin(), fresh.end(), 20);
      std::shuffle(fresh.begin(), fresh.end(), rng);
      std::vector<std::pair<Label, Label>> pairs;
      for (const auto& l : d.base().items()) {
        pairs.emplace_back(l, l.is_glue() ? Label::glue(fresh[static_cast<std::size_t>(l.glue_index() - 1)]) : l);
      }
      const auto renamed = rename_diagram(d, Renaming(pairs));
      CHECK(evaluate(renamed) == evaluate(d));
    }
    const auto d = D("[ a #1 #2 ; (#1 #2) ]");
    const Renaming to_user({{Label::user("a"), Label::user("b")},
                            {Label::glue(1), Label::user("c")},
                            {Label::glue(2), Label::glue(3)}});
    CHECK_THROWS_AS(rename_diagram(d, to_user), PreconditionError);
  }

  TEST_CASE("dot rendering") {
    const auto d = D("[ 1 #1 2 #2 #3 3 #4 4 #5 #6 ; (#1 #5) (#2 #6) (#3 #4) ]");
    const auto dot = render_dot(d);
    CHECK(dot.rfind("graph chord_diagram {", 0) == 0);
    for (int i = 0; i < 10; ++i) CHECK(dot.find("n" + std::to_string(i) + " [label=") != std::string::npos);
    auto count = [&](std::string_view needle) {
      std::size_t n = 0;
      for (auto p = dot.find(needle); p != std::string::npos; p = dot.find(needle, p + 1)) ++n;
      return n;
    };
    CHECK(count("style=dashed") == 3);
    CHECK(count("style=bold") == 10);
    CHECK(render_dot(d) == dot);
    CHECK(render_dot(D("[ ; ]")) == "graph chord_diagram {\n}\n");
  }

  TEST_CASE("the eight-label example renders a circle with three chords") {
    // Labels 2, 5 and 3, 8 and 6, 7 become tokens joined by chords.
    const auto d = D("[ 1 #1 #2 4 #3 #4 #5 #6 ; (#1 #3) (#2 #6) (#4 #5) ]");
    const auto dot = render_dot(d);
    std::size_t nodes = 0, chords = 0;
    for (auto p = dot.find(" [label="); p != std::string::npos; p = dot.find(" [label=", p + 1)) ++nodes;
    for (auto p = dot.find("style=dashed"); p != std::string::npos; p = dot.find("style=dashed", p + 1)) ++chords;
    CHECK(nodes == 8);
    CHECK(chords == 3);
  }
}

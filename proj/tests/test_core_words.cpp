#include <doctest.h>

#include <algorithm>
#include <random>

#include "qo/core_words.hpp"
#include "qo/error.hpp"

using namespace qo;

namespace {

std::vector<Label> labels(std::initializer_list<const char*> names) {
  std::vector<Label> out;
  for (const char* n : names) out.push_back(Label::user(n));
  return out;
}

Renaming renaming(std::initializer_list<std::pair<const char*, const char*>> pairs) {
  std::vector<std::pair<Label, Label>> out;
  for (auto [a, b] : pairs) out.emplace_back(Label::user(a), Label::user(b));
  return Renaming(std::move(out));
}

}  // namespace

TEST_SUITE("core_words") {
  TEST_CASE("labels reject reserved characters and user glue names") {
    CHECK_NOTHROW(Label::user("a_1'"));
    CHECK_THROWS_AS(Label::user(""), PreconditionError);
    CHECK_THROWS_AS(Label::user("a b"), PreconditionError);
    for (const char* bad : {"a(", "b)", "{", "}", "x^2", "a#", "p;q", "u,v"}) {
      CHECK_THROWS_AS(Label::user(bad), PreconditionError);
    }
    CHECK_THROWS_AS(Label::user("#3"), PreconditionError);
    CHECK(Label::glue(3).name() == "#3");
    CHECK(Label::glue(3).is_glue());
    CHECK(Label::glue(12).glue_index() == 12);
    CHECK_THROWS_AS(Label::glue(0), PreconditionError);
    CHECK_THROWS_AS(Label("#0"), PreconditionError);
    CHECK_THROWS_AS(Label("#x"), PreconditionError);
  }

  TEST_CASE("canonical rotation") {
    CHECK(canonical_rotation(labels({"b", "a", "c"})).items() == labels({"a", "c", "b"}));
    CHECK(canonical_rotation({}).empty());
    CHECK(canonical_rotation(labels({"x"})).items() == labels({"x"}));
    CHECK_THROWS_AS(canonical_rotation(labels({"a", "b", "a"})), PreconditionError);
  }

  TEST_CASE("canonical rotation is invariant under rotation") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = static_cast<int>(rng() % 8);
      std::vector<Label> items;
      for (int i = 0; i < n; ++i) items.push_back(Label::user("l" + std::to_string(rng() % 1000) + "_" + std::to_string(i)));
      const auto reference = canonical_rotation(items);
      for (int r = 0; r < n; ++r) {
        auto rotated = items;
        std::rotate(rotated.begin(), rotated.begin() + r, rotated.end());
        CHECK(canonical_rotation(rotated) == reference);
      }
    }
  }

  TEST_CASE("rename_word") {
    const auto ab = canonical_rotation(labels({"a", "b"}));
    CHECK(rename_word(ab, renaming({{"a", "x"}, {"b", "y"}})).items() == labels({"x", "y"}));
    CHECK(rename_word(ab, Renaming::identity(ab.items())) == ab);

    // (a b c) with a->c', b->a', c->b' gives (c' a' b'), i.e. (a' b' c').
    const auto abc = canonical_rotation(labels({"a", "b", "c"}));
    CHECK(rename_word(abc, renaming({{"a", "c'"}, {"b", "a'"}, {"c", "b'"}})).items() ==
          labels({"a'", "b'", "c'"}));

    CHECK_THROWS_AS(rename_word(abc, renaming({{"a", "x"}, {"b", "y"}})), PreconditionError);
  }

  TEST_CASE("renaming functoriality") {
    const auto w = canonical_rotation(labels({"a", "b", "c", "d"}));
    const auto sigma = renaming({{"a", "p"}, {"b", "r"}, {"c", "q"}, {"d", "s"}});
    const auto rho = renaming({{"p", "4"}, {"q", "2"}, {"r", "1"}, {"s", "3"}});
    CHECK(rename_word(rename_word(w, sigma), rho) == rename_word(w, rho * sigma));
    CHECK((sigma.inverse() * sigma) == Renaming::identity(w.items()));
  }

  TEST_CASE("renaming must be a bijection") {
    CHECK_THROWS_AS(renaming({{"a", "x"}, {"b", "x"}}), PreconditionError);
    CHECK_THROWS_AS(renaming({{"a", "x"}, {"a", "y"}}), PreconditionError);
    const auto cod = labels({"x", "z"});
    CHECK_THROWS_AS(Renaming({{Label::user("a"), Label::user("x")}, {Label::user("b"), Label::user("y")}}, cod),
                    PreconditionError);
  }

  TEST_CASE("word text form") {
    CHECK(to_string(parse_word("( b a c )")) == "( a c b )");
    CHECK(to_string(parse_word("()")) == "( )");
    CHECK_THROWS_AS(parse_word("( a #1 )"), ParseError);
    CHECK_THROWS_AS(parse_word("( a a )"), ParseError);
    CHECK_THROWS_AS(parse_word("( a"), ParseError);
    try {
      parse_word("( a\n  b ) x");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() == 7);
    }
  }

  TEST_CASE("renaming text form") {
    const auto rho = parse_renaming("a->x, b -> y");
    CHECK(rho(Label::user("a")).name() == "x");
    CHECK(rho(Label::user("b")).name() == "y");
    CHECK(to_string(rho) == "a->x, b->y");
    CHECK_THROWS_AS(parse_renaming("a x"), ParseError);
    CHECK_THROWS_AS(parse_renaming("a->x, b->x"), ParseError);
  }
}

#include <doctest.h>

#include "qo/checks.hpp"
#include "qo/enumerate.hpp"
#include "qo/error.hpp"
#include "qo/surface.hpp"

using namespace qo;

namespace {

Surface S(std::string_view text) { return parse_surface(text); }
Label L(const char* name) { return Label::user(name); }

}  // namespace

TEST_SUITE("surface") {
  TEST_CASE("construction and grade") {
    auto disc = make_surface({{L("1"), L("2")}}, 0);
    CHECK(to_string(disc) == "{ ( 1 2 ) }^0");
    CHECK(disc.grade() == 0);
    auto cylinder = make_surface({{}, {}}, 0);
    CHECK(to_string(cylinder) == "{ ( ) ( ) }^0");
    CHECK(cylinder.grade() == 1);
    auto torus = make_surface({{L("1")}}, 1);
    CHECK(torus.grade() == 2);
  }

  TEST_CASE("construction errors") {
    CHECK_THROWS_AS(make_surface({}, 0), PreconditionError);
    CHECK_THROWS_AS(make_surface({{L("a")}}, -1), PreconditionError);
    CHECK_THROWS_AS(make_surface({{L("a")}, {L("b"), L("a")}}, 0), PreconditionError);
  }

  TEST_CASE("renaming") {
    const auto q = S("{ ( a b ) }");
    CHECK(qo_rename(q, Renaming::identity(q.labels())) == q);
    CHECK(qo_rename(q, parse_renaming("a->x, b->y")) == S("{ ( x y ) }^0"));
    const auto two = S("{ ( a ) ( b ) }^1");
    CHECK(qo_rename(two, parse_renaming("a->b, b->a")) == two);
    CHECK_THROWS_AS(qo_rename(two, parse_renaming("a->x")), PreconditionError);
  }

  TEST_CASE("gluing") {
    CHECK(qo_compose(S("{ ( c 1 2 ) }"), L("c"), S("{ ( 3 c' ) }"), L("c'")) == S("{ ( 3 1 2 ) }^0"));
    CHECK(qo_compose(S("{ ( c 1 ) }"), L("c"), S("{ ( c' ) }"), L("c'")) == S("{ ( 1 ) }^0"));
    const auto glued = qo_compose(S("{ ( c ) ( 5 ) }^1"), L("c"), S("{ ( c' ) }^2"), L("c'"));
    CHECK(glued == S("{ ( ) ( 5 ) }^3"));
    CHECK(glued.grade() == 7);
    CHECK(glued.grade() == S("{ ( c ) ( 5 ) }^1").grade() + S("{ ( c' ) }^2").grade());
  }

  TEST_CASE("gluing errors") {
    CHECK_THROWS_AS(qo_compose(S("{ ( a ) }"), L("z"), S("{ ( b ) }"), L("b")), PreconditionError);
    CHECK_THROWS_AS(qo_compose(S("{ ( a ) }"), L("a"), S("{ ( b ) }"), L("z")), PreconditionError);
    CHECK_THROWS_AS(qo_compose(S("{ ( a x ) }"), L("a"), S("{ ( b x ) }"), L("b")), PreconditionError);
  }

  TEST_CASE("self-gluing") {
    CHECK(qo_self_glue(S("{ ( a 1 b 2 ) }"), L("a"), L("b")) == S("{ ( 2 ) ( 1 ) }^0"));
    CHECK(qo_self_glue(S("{ ( a 1 ) ( b 2 ) }"), L("a"), L("b")) == S("{ ( 2 1 ) }^1"));
    CHECK(qo_self_glue(S("{ ( a b ) }"), L("a"), L("b")) == S("{ ( ) ( ) }^0"));
    CHECK(qo_self_glue(S("{ ( a 1 2 b 3 ) ( 4 ) }^2"), L("b"), L("a")) == S("{ ( 3 ) ( 4 ) ( 1 2 ) }^2"));
    CHECK_THROWS_AS(qo_self_glue(S("{ ( a b ) }"), L("a"), L("a")), PreconditionError);
    CHECK_THROWS_AS(qo_self_glue(S("{ ( a b ) }"), L("a"), L("z")), PreconditionError);
  }

  TEST_CASE("self-gluing is symmetric and raises the grade by one") {
    for (int n = 2; n <= 5; ++n) {
      const auto labels = make_labels("v", n);
      for (const auto& q : enumerate_surfaces(labels, 1)) {
        for (const auto& a : labels) {
          for (const auto& b : labels) {
            if (a == b) continue;
            const auto r = qo_self_glue(q, a, b);
            CHECK(r == qo_self_glue(q, b, a));
            CHECK(r.grade() == q.grade() + 1);
          }
        }
      }
    }
  }

  TEST_CASE("equality") {
    CHECK(surfaces_equal(S("{ ( 1 2 ) }"), S("{ ( 2 1 ) }")));
    CHECK_FALSE(surfaces_equal(S("{ ( ) ( ) }^0"), S("{ ( ) }^1")));
    CHECK(surfaces_equal(S("{ ( a ) ( b ) }"), S("{ ( b ) ( a ) }")));
    CHECK_FALSE(surfaces_equal(S("{ ( 1 2 3 ) }"), S("{ ( 1 3 2 ) }")));
    CHECK_FALSE(surfaces_equal(S("{ ( ) ( ) }"), S("{ ( ) ( ) ( ) }")));
  }

  TEST_CASE("text form") {
    CHECK(to_string(S("{(b a)(c)()}^1")) == "{ ( ) ( c ) ( a b ) }^1");
    CHECK(to_string(S("  {\n ( x ) } ")) == "{ ( x ) }^0");
    CHECK_THROWS_AS(S("{ }"), ParseError);
    CHECK_THROWS_AS(S("{ ( a ) ( a ) }"), ParseError);
    CHECK_THROWS_AS(S("{ ( a ) }^"), ParseError);
    CHECK_THROWS_AS(S("{ ( a ) }^-1"), ParseError);
    CHECK_THROWS_AS(S("{ ( #1 ) }"), ParseError);
    CHECK_NOTHROW(parse_surface("{ ( #1 a ) }", true));
    try {
      S("{ ( a )\n ( b a ) }");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() == 6);
    }
  }

  TEST_CASE("printed text parses back") {
    for (const auto& q : envelope_family("w", 3, 1, 4)) CHECK(S(to_string(q)) == q);
  }

  TEST_CASE("json form") {
    const auto q = S("{ ( a b ) ( ) ( c ) }^1");
    const auto j = to_json(q);
    CHECK(j.dump() == R"({"cycles":[[],["c"],["a","b"]],"g":1})");
    CHECK(surface_from_json(j) == q);
    CHECK(surface_from_json(nlohmann::json::parse(R"({"cycles": [["b","a"]], "g": 0})")) == S("{ ( a b ) }"));
    CHECK_THROWS_AS(surface_from_json(nlohmann::json::parse(R"({"cycles": [], "g": 0})")), PreconditionError);
    CHECK_THROWS(surface_from_json(nlohmann::json::parse(R"({"g": 0})")));
  }

  TEST_CASE("mutation names") {
    for (auto m : {RuleMutation::none, RuleMutation::merge_drops_genus, RuleMutation::split_swaps_blocks,
                   RuleMutation::compose_drops_genus}) {
      CHECK(parse_mutation(to_string(m)) == m);
    }
    CHECK_THROWS_AS(parse_mutation("nope"), PreconditionError);
  }

  TEST_CASE("mutated rules") {
    const QoRules merge{RuleMutation::merge_drops_genus};
    CHECK(merge.self_glue(S("{ ( a 1 ) ( b 2 ) }"), L("a"), L("b")) == S("{ ( 2 1 ) }^0"));
    const QoRules compose{RuleMutation::compose_drops_genus};
    CHECK(compose.compose(S("{ ( c ) }^1"), L("c"), S("{ ( d ) }^2"), L("d")) == S("{ ( ) }^1"));
  }

  TEST_CASE("the block-swapping split agrees with the correct rule") {
    // <B>, <A> and <A>, <B> are the same multiset of cycles.
    const QoRules swapped{RuleMutation::split_swaps_blocks};
    const QoRules correct;
    for (int n = 2; n <= 5; ++n) {
      const auto labels = make_labels("v", n);
      for (const auto& q : enumerate_surfaces(labels, 1)) {
        for (std::size_t i = 0; i < labels.size(); ++i) {
          for (std::size_t j = i + 1; j < labels.size(); ++j) {
            CHECK(swapped.self_glue(q, labels[i], labels[j]) == correct.self_glue(q, labels[i], labels[j]));
          }
        }
      }
    }
  }
}

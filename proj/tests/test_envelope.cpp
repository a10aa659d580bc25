#include <doctest.h>

#include "qo/checks.hpp"
#include "qo/envelope.hpp"

using namespace qo;

namespace {

Surface S(std::string_view text) { return parse_surface(text); }

CheckConfig small() {
  CheckConfig c;
  c.max_labels = 3;
  c.max_g = 1;
  c.max_boundaries = 3;
  c.random_instances = 200;
  c.random_min_labels = 4;
  c.random_max_labels = 6;
  c.random_max_g = 2;
  return c;
}

const std::function<Surface(const Surface&)> identity = [](const Surface& q) { return q; };

}  // namespace

TEST_SUITE("envelope") {
  TEST_CASE("f~ on QO with the inclusion is the identity") {
    const QoTarget qo;
    const auto f = inclusion_morphism();
    CHECK(tilde_f(qo, f, S("{ ( 1 2 3 ) }")) == S("{ ( 1 2 3 ) }"));
    CHECK(tilde_f(qo, f, S("{ ( 1 ) ( 2 ) }^1")) == S("{ ( 1 ) ( 2 ) }^1"));
    CHECK(tilde_f(qo, f, S("{ ( ) ( ) ( ) }^2")) == S("{ ( ) ( ) ( ) }^2"));
  }

  TEST_CASE("f~ into the terminal operad") {
    const TerminalTarget terminal;
    const auto p = tilde_f(terminal, terminal_morphism(), S("{ ( b ) ( a ) }^1"));
    CHECK(p.labels == std::vector<Label>{Label::user("a"), Label::user("b")});
    CHECK(p.grade == 3);
    CHECK(terminal.describe(p) == "pt{a b; G=3}");
  }

  TEST_CASE("well-definedness on single surfaces") {
    const auto report = check_well_definedness(QoTarget{}, inclusion_morphism(), S("{ ( 1 ) ( 2 ) }^1"));
    CHECK(report.expressions == 2);
    CHECK(report.agree);
    CHECK(report.value == "{ ( 1 ) ( 2 ) }^1");
    const auto rotations = check_well_definedness(QoTarget{}, inclusion_morphism(), S("{ ( 1 2 3 ) }^2"));
    CHECK(rotations.expressions == 3);
    CHECK(rotations.agree);
    CHECK(check_well_definedness(TerminalTarget{}, terminal_morphism(), S("{ ( a b ) ( c ) }^1")).agree);
  }

  TEST_CASE("well-definedness over a family") {
    const auto family = envelope_family("x", 3, 1, 3);
    CHECK(check_well_definedness_family(QoTarget{}, inclusion_morphism(), family, identity, Execution::parallel)
              .passed());
    CHECK(check_well_definedness_family<TerminalTarget>(TerminalTarget{}, terminal_morphism(), family, {},
                                                        Execution::parallel)
              .passed());
  }

  TEST_CASE("envelope family") {
    const auto family = envelope_family("x", 1, 0, 2);
    std::vector<std::string> texts;
    for (const auto& q : family) texts.push_back(to_string(q));
    CHECK(texts == std::vector<std::string>{"{ ( ) }^0", "{ ( ) ( ) }^0", "{ ( x0 ) }^0", "{ ( ) ( x0 ) }^0"});
  }

  TEST_CASE("axioms hold on QO and on the terminal operad") {
    const auto config = small();
    const auto qo = check_axioms(QoTarget{}, qo_samples(config), config);
    CHECK(qo.passed());
    CHECK(qo.families.size() == 9);
    for (const auto& f : qo.families) CHECK(f.instances > 0);
    CHECK(check_axioms(TerminalTarget{}, terminal_samples(config), config).passed());
  }

  TEST_CASE("serial and parallel reports are identical") {
    auto config = small();
    config.random_instances = 50;
    auto serial = config;
    serial.execution = Execution::serial;
    CHECK(check_axioms(QoTarget{}, qo_samples(config), config) ==
          check_axioms(QoTarget{}, qo_samples(serial), serial));
    const QoTarget broken{{RuleMutation::merge_drops_genus}};
    CHECK(check_axioms(broken, qo_samples(config), config) == check_axioms(broken, qo_samples(serial), serial));
  }

  TEST_CASE("mutated rules are caught") {
    const auto config = small();
    const auto merge = check_axioms(QoTarget{{RuleMutation::merge_drops_genus}}, qo_samples(config), config);
    CHECK_FALSE(merge.passed());
    REQUIRE(merge.family("6 contract after compose"));
    CHECK_FALSE(merge.family("6 contract after compose")->passed());
    REQUIRE(merge.family("6 contract after compose")->first_failure);

    const auto compose = check_axioms(QoTarget{{RuleMutation::compose_drops_genus}}, qo_samples(config), config);
    CHECK_FALSE(compose.passed());
  }

  TEST_CASE("the block-swapping split is invisible to the checks") {
    const auto config = small();
    CHECK(check_axioms(QoTarget{{RuleMutation::split_swaps_blocks}}, qo_samples(config), config).passed());
    CHECK(check_well_definedness_family(QoTarget{{RuleMutation::split_swaps_blocks}}, inclusion_morphism(),
                                        envelope_family("x", 3, 1, 3), identity, Execution::parallel)
              .passed());
  }

  TEST_CASE("cyclic morphism checks") {
    const auto config = small();
    CHECK(check_cyclic_morphism(QoTarget{}, inclusion_morphism(), config).passed());
    CHECK(check_cyclic_morphism(TerminalTarget{}, terminal_morphism(), config).passed());
    const auto shifted = check_cyclic_morphism(QoTarget{}, shifted_inclusion_morphism(), config);
    CHECK_FALSE(shifted.passed());
    REQUIRE(shifted.family("rename equivariance"));
    CHECK_FALSE(shifted.family("rename equivariance")->passed());
  }

  TEST_CASE("modular morphism checks") {
    const auto config = small();
    const auto qo = check_modular_morphism(QoTarget{}, inclusion_morphism(), config, identity);
    CHECK(qo.passed());
    CHECK(qo.family("uniqueness (f~ equals the reference map)"));
    CHECK(check_modular_morphism(TerminalTarget{}, terminal_morphism(), config).passed());
    CHECK_FALSE(check_modular_morphism(QoTarget{}, shifted_inclusion_morphism(), config).passed());
  }

  TEST_CASE("run_family keeps the smallest failing index and counts exceptions") {
    const auto report = run_family(
        "demo", 100,
        [](std::uint64_t i) -> std::optional<Counterexample> {
          if (i == 70) throw PreconditionError("boom");
          if (i % 30 == 29) return Counterexample{0, "i=" + std::to_string(i), "l", "r"};
          return std::nullopt;
        },
        Execution::parallel);
    CHECK(report.instances == 100);
    CHECK(report.failures == 4);
    REQUIRE(report.first_failure);
    CHECK(report.first_failure->index == 29);
    CHECK(report.first_failure->instance == "i=29");
  }

  TEST_CASE("report serialization") {
    const auto report = check_cyclic_morphism(QoTarget{}, shifted_inclusion_morphism(), small());
    const auto j = to_json(report);
    CHECK(j["passed"] == false);
    CHECK(j["families"].size() == report.families.size());
    CHECK(to_string(report).find("FAIL") != std::string::npos);
  }

  TEST_CASE("seeded random instances are reproducible") {
    auto a = instance_rng(5, 2, 9);
    auto b = instance_rng(5, 2, 9);
    auto c = instance_rng(5, 2, 10);
    const auto x = a();
    CHECK(x == b());
    CHECK(x != c());
  }
}

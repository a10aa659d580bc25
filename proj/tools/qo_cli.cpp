#include <CLI11.hpp>

#include <iostream>
#include <iterator>
#include <string>

#include "qo/canonical.hpp"
#include "qo/checks.hpp"
#include "qo/enumerate.hpp"
#include "qo/envelope.hpp"
#include "qo/error.hpp"
#include "qo/rewrite.hpp"

using namespace qo;

namespace {

enum Exit { ok = 0, usage = 1, precondition = 2, check_failed = 3 };

/// A lone "-" reads the argument from standard input.
std::string input(const std::string& arg) {
  if (arg != "-") return arg;
  return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
}

Label label_arg(const std::string& name) {
  try {
    return Label::user(name);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what(), 1, 1);
  }
}

void print(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

void print_surface(const Surface& q, bool json) {
  if (json) std::cout << to_json(q).dump() << "\n";
  else std::cout << to_string(q) << "\n";
}

nlohmann::json expression_json(const CanonicalExpression& e) {
  nlohmann::json tuples = nlohmann::json::array();
  for (const auto& t : e.tuples) {
    nlohmann::json items = nlohmann::json::array();
    for (const auto& l : t) items.push_back(l.name());
    tuples.push_back(std::move(items));
  }
  auto arc = [](const Arc& a) { return nlohmann::json::array({a.first.name(), a.second.name()}); };
  nlohmann::json separating = nlohmann::json::array();
  for (const auto& a : e.separating) separating.push_back(arc(a));
  nlohmann::json handles = nlohmann::json::array();
  for (const auto& [a, b] : e.handles) handles.push_back({arc(a), arc(b)});
  return {{"diagram", to_string(e.diagram)}, {"tuples", tuples}, {"separating", separating}, {"handles", handles}};
}

int report_exit(const CheckReport& report, bool json) {
  if (json) print(to_json(report));
  else std::cout << to_string(report);
  return report.passed() ? ok : check_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Surfaces as a modular envelope of the associative operad"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Print JSON instead of text");

  std::string text, text2, a, b, map;
  int result = ok;

  auto* eval = app.add_subcommand("eval", "Evaluate a chord diagram to a surface");
  eval->add_option("diagram", text, "Diagram, e.g. \"[ a #1 b #2 ; (#1 #2) ]\"")->required();
  eval->callback([&] { print_surface(evaluate(parse_diagram(input(text))), json); });

  bool all = false;
  auto* canon = app.add_subcommand("canon", "Canonical expression of a surface");
  canon->add_option("surface", text, "Surface, e.g. \"{ ( a b ) ( c ) }^1\"")->required();
  canon->add_flag("--all", all, "Print every canonical expression");
  canon->callback([&] {
    const auto q = parse_surface(input(text));
    const auto expressions = all ? all_canonical_diagrams(q) : std::vector{canonical_diagram(q)};
    if (json) {
      nlohmann::json out = nlohmann::json::array();
      for (const auto& e : expressions) out.push_back(expression_json(e));
      print(all ? out : out[0]);
    } else {
      for (const auto& e : expressions) std::cout << to_string(e) << "\n";
    }
  });

  auto* compose = app.add_subcommand("compose", "Glue two surfaces along a and b");
  compose->add_option("s1", text)->required();
  compose->add_option("a", a)->required();
  compose->add_option("s2", text2)->required();
  compose->add_option("b", b)->required();
  compose->callback([&] {
    print_surface(qo_compose(parse_surface(text), label_arg(a), parse_surface(text2), label_arg(b)), json);
  });

  auto* glue = app.add_subcommand("glue", "Self-glue a surface along a and b");
  glue->add_option("surface", text)->required();
  glue->add_option("a", a)->required();
  glue->add_option("b", b)->required();
  glue->callback([&] { print_surface(qo_self_glue(parse_surface(input(text)), label_arg(a), label_arg(b)), json); });

  auto* rename = app.add_subcommand("rename", "Rename the labels of a surface");
  rename->add_option("surface", text)->required();
  rename->add_option("map", map, "Bijection, e.g. \"a->x, b->y\"")->required();
  rename->callback([&] { print_surface(qo_rename(parse_surface(input(text)), parse_renaming(map)), json); });

  bool certificate = false;
  int depth = 4;
  auto* equal = app.add_subcommand("equal", "Decide whether two diagrams evaluate to the same surface");
  equal->add_option("d1", text)->required();
  equal->add_option("d2", text2)->required();
  equal->add_flag("--certificate", certificate, "Search for a sequence of moves from d1 to d2");
  equal->add_option("--depth", depth, "Maximum certificate length")->check(CLI::NonNegativeNumber);
  equal->callback([&] {
    const auto d1 = parse_diagram(text), d2 = parse_diagram(text2);
    const auto q1 = evaluate(d1), q2 = evaluate(d2);
    const bool same = q1 == q2;
    nlohmann::json out = {{"equivalent", same}, {"left", to_string(q1)}, {"right", to_string(q2)}};
    std::optional<std::vector<Move>> moves;
    if (certificate) {
      moves = find_certificate(d1, d2, depth);
      if (moves) {
        out["certificate"] = nlohmann::json::array();
        for (const auto& m : *moves) out["certificate"].push_back(to_string(m));
      } else {
        out["certificate"] = nullptr;
      }
    }
    if (json) {
      print(out);
      return;
    }
    std::cout << (same ? "equivalent" : "not equivalent") << ": " << to_string(q1) << (same ? " = " : " != ")
              << to_string(q2) << "\n";
    if (certificate && moves) {
      std::cout << "certificate (" << moves->size() << (moves->size() == 1 ? " move" : " moves") << "):\n";
      for (const auto& m : *moves) std::cout << "  " << to_string(m) << "\n";
    } else if (certificate) {
      std::cout << "no certificate within " << depth << " moves\n";
    }
  });

  CheckConfig config;
  std::string target = "qo", mutation = "none";
  bool serial = false;
  auto add_check_options = [&](CLI::App* sub) {
    sub->add_option("--max-labels", config.max_labels, "Exhaustive label bound")->check(CLI::Range(0, 6));
    sub->add_option("--max-g", config.max_g, "Exhaustive genus bound")->check(CLI::Range(0, 4));
    sub->add_option("--mutation", mutation, "Check deliberately broken rules")
        ->check(CLI::IsMember({"none", "merge-drops-genus", "split-swaps-blocks", "compose-drops-genus"}));
    sub->add_flag("--serial", serial, "Run single-threaded");
  };

  auto* axioms = app.add_subcommand("check-axioms", "Check the modular operad axioms");
  add_check_options(axioms);
  axioms->add_option("--target", target)->check(CLI::IsMember({"qo", "terminal"}));
  axioms->add_option("--seed", config.seed, "Seed for random instances");
  axioms->add_option("--random", config.random_instances, "Random instances per family");
  axioms->callback([&] {
    config.execution = serial ? Execution::serial : Execution::parallel;
    if (target == "terminal") {
      result = report_exit(check_axioms(TerminalTarget{}, terminal_samples(config), config), json);
    } else {
      result = report_exit(check_axioms(QoTarget{{parse_mutation(mutation)}}, qo_samples(config), config), json);
    }
  });

  auto* envelope = app.add_subcommand("check-envelope",
                                      "Check that f~ is well defined, a morphism, and the identity on QO");
  add_check_options(envelope);
  envelope->add_option("--max-boundaries", config.max_boundaries, "Largest number of boundary cycles")
      ->check(CLI::Range(1, 6));
  envelope->callback([&] {
    config.execution = serial ? Execution::serial : Execution::parallel;
    const QoTarget qo{{parse_mutation(mutation)}};
    const std::function<Surface(const Surface&)> identity = [](const Surface& q) { return q; };
    CheckReport report{"modular envelope", {}};
    const auto family = envelope_family("x", config.max_labels, config.max_g, config.max_boundaries);
    report.families.push_back(
        check_well_definedness_family(qo, inclusion_morphism(), family, identity, config.execution));
    report.families.back().name = "QO: well-definedness and f~ = id";
    report.families.push_back(check_well_definedness_family<TerminalTarget>(
        TerminalTarget{}, terminal_morphism(), family, {}, config.execution));
    report.families.back().name = "terminal: well-definedness";
    auto append = [&](const std::string& prefix, const CheckReport& r) {
      for (auto f : r.families) {
        f.name = prefix + f.name;
        report.families.push_back(std::move(f));
      }
    };
    append("QO cyclic: ", check_cyclic_morphism(qo, inclusion_morphism(), config));
    append("QO: ", check_modular_morphism(qo, inclusion_morphism(), config, identity));
    append("terminal: ", check_modular_morphism(TerminalTarget{}, terminal_morphism(), config));
    result = report_exit(report, json);
  });

  int chords = 0;
  auto* hz = app.add_subcommand("hz-table", "Genus distribution of chord matchings");
  hz->add_option("--chords", chords, "Number of chords")->required()->check(CLI::Range(0, 8));
  hz->callback([&] {
    const auto table = genus_distribution(chords);
    if (json) print(genus_table_json(chords, table));
    else std::cout << format_genus_table(table);
  });

  std::string format = "dot";
  auto* render = app.add_subcommand("render", "Graph description of a diagram");
  render->add_option("diagram", text)->required();
  render->add_option("--format", format)->check(CLI::IsMember({"dot"}));
  render->callback([&] { std::cout << render_dot(parse_diagram(input(text))); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return usage;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return precondition;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return usage;
  }
  return result;
}

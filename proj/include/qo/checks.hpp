#pragma once

// Executable checks of the modular operad axioms and of the universal
// property: instances are generated exhaustively over small label sets (plus
// optional seeded random larger ones) and evaluated by a data-parallel kernel.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qo/ass_operad.hpp"
#include "qo/canonical.hpp"
#include "qo/enumerate.hpp"
#include "qo/envelope.hpp"
#include "qo/error.hpp"

namespace qo {

enum class Execution { parallel, serial };

struct Counterexample {
  std::uint64_t index = 0;  // position in the family's instance order
  std::string instance;
  std::string lhs;
  std::string rhs;
};

struct FamilyReport {
  std::string name;
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  /// The failing instance with the smallest index.
  std::optional<Counterexample> first_failure;

  bool passed() const { return failures == 0; }
  friend bool operator==(const FamilyReport&, const FamilyReport&) = default;
};

struct CheckReport {
  std::string title;
  std::vector<FamilyReport> families;

  bool passed() const;
  const FamilyReport* family(std::string_view name) const;
};

bool operator==(const Counterexample& a, const Counterexample& b);
bool operator==(const CheckReport& a, const CheckReport& b);

nlohmann::json to_json(const CheckReport& report);
std::string to_string(const CheckReport& report);

using InstanceCheck = std::function<std::optional<Counterexample>(std::uint64_t)>;

/// Runs check(0..count-1). The parallel path splits the index range across
/// OpenMP threads; both paths report the same counts and the same first
/// failure. An exception thrown by an instance counts as a failure.
FamilyReport run_family(std::string name, std::uint64_t count, const InstanceCheck& check,
                        Execution execution);

/// Per-instance generator, a pure function of (seed, family, index).
std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t family, std::uint64_t index);

struct CheckConfig {
  /// Exhaustive part: every operand ranges over all samples with at most
  /// max_labels labels and genus at most max_g.
  int max_labels = 4;
  int max_g = 2;
  /// Envelope checks only: surfaces may carry extra empty cycles up to this
  /// many boundary components.
  int max_boundaries = 4;
  /// Random part, per family: operands with random_min_labels..random_max_labels
  /// labels and genus up to random_max_g.
  std::uint64_t random_instances = 0;
  std::uint64_t seed = 1;
  int random_min_labels = 5;
  int random_max_labels = 8;
  int random_max_g = 3;
  /// For the two families whose exhaustive space is a triple product
  /// (compose equivariance and compose associativity) the marked labels of
  /// each operand are its first labels rather than every choice. Samples
  /// range over all surfaces, so every instance is covered up to renaming.
  bool pin_marks_in_large_families = true;
  Execution execution = Execution::parallel;
};

/// How to produce elements of a target over a given label set.
template <class Element>
struct SampleSource {
  std::function<std::vector<Element>(std::span<const Label>)> all_over;
  std::function<Element(std::span<const Label>, std::mt19937_64&)> random_over;
};

/// Surfaces from enumerate_surfaces; random ones may carry extra empty cycles.
SampleSource<Surface> qo_samples(const CheckConfig& config);
/// One point per grade 0..2*max_g+|labels|.
SampleSource<TerminalPoint> terminal_samples(const CheckConfig& config);

std::vector<Label> make_labels(std::string_view prefix, int n);
/// All n! bijections from `from` (sorted) onto prefix0..prefix(n-1).
std::vector<Renaming> all_renamings(std::span<const Label> from, std::string_view prefix);
Renaming random_renaming(std::span<const Label> from, std::string_view prefix, std::mt19937_64& rng);
Surface random_surface(std::span<const Label> labels, int max_g, std::mt19937_64& rng);
/// Every cyclic order on the label set ((n-1)! of them; one for n <= 1).
std::vector<AssElement> all_ass_elements(std::span<const Label> labels);

/// An element together with an ordered tuple of distinct marked labels.
template <class Element>
struct Pointed {
  Element element;
  std::vector<Label> marks;
};

namespace detail {

std::vector<std::vector<std::size_t>> ordered_selections(std::size_t n, std::size_t k);

template <class Element>
std::vector<Pointed<Element>> pointed_samples(const SampleSource<Element>& source,
                                              std::string_view prefix, int max_labels,
                                              std::size_t marks, bool pinned) {
  std::vector<Pointed<Element>> out;
  for (int n = static_cast<int>(marks); n <= max_labels; ++n) {
    const auto labels = make_labels(prefix, n);
    const auto selections =
        pinned ? std::vector<std::vector<std::size_t>>{[&] {
          std::vector<std::size_t> first(marks);
          for (std::size_t i = 0; i < marks; ++i) first[i] = i;
          return first;
        }()}
               : ordered_selections(labels.size(), marks);
    for (auto& e : source.all_over(labels)) {
      for (const auto& sel : selections) {
        std::vector<Label> chosen;
        chosen.reserve(sel.size());
        for (auto i : sel) chosen.push_back(labels[i]);
        out.push_back({e, std::move(chosen)});
      }
    }
  }
  return out;
}

template <class Element>
Pointed<Element> random_pointed(const SampleSource<Element>& source, std::string_view prefix,
                                const CheckConfig& config, std::size_t marks,
                                std::mt19937_64& rng) {
  const int lo = std::max<int>(config.random_min_labels, static_cast<int>(marks));
  const int hi = std::max(lo, config.random_max_labels);
  const int n = std::uniform_int_distribution<int>(lo, hi)(rng);
  auto labels = make_labels(prefix, n);
  Pointed<Element> out{source.random_over(labels, rng), {}};
  std::shuffle(labels.begin(), labels.end(), rng);
  out.marks.assign(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(marks));
  return out;
}

template <ModularOperad T>
std::optional<Counterexample> compare(const T& target, const typename T::Element& lhs,
                                      const typename T::Element& rhs,
                                      const std::function<std::string()>& instance) {
  if (target.equal(lhs, rhs)) return std::nullopt;
  return Counterexample{0, instance(), target.describe(lhs), target.describe(rhs)};
}

template <ModularOperad T>
std::optional<Counterexample> expect_grade(const T& target, const typename T::Element& e,
                                           int expected,
                                           const std::function<std::string()>& instance) {
  if (target.grade(e) == expected) return std::nullopt;
  return Counterexample{0, instance() + " [grade law]",
                        target.describe(e) + " has G=" + std::to_string(target.grade(e)),
                        "expected G=" + std::to_string(expected)};
}

std::string marks_text(std::span<const Label> marks);

/// Exhaustive instances first, then `random` seeded ones.
FamilyReport run_mixed(std::string name, std::uint64_t family_id, std::uint64_t exhaustive,
                       const InstanceCheck& exhaustive_check,
                       const std::function<std::optional<Counterexample>(std::mt19937_64&)>& random_check,
                       const CheckConfig& config);

}  // namespace detail

/// Evaluates the eight axiom families of a modular operad (axiom 7 together
/// with its mirror 7'), the symmetry of contraction and the grade law.
template <ModularOperad T>
CheckReport check_axioms(const T& target, const SampleSource<typename T::Element>& source,
                         const CheckConfig& config) {
  using E = typename T::Element;
  using P = Pointed<E>;
  using Check = std::optional<Counterexample>;
  const int k = config.max_labels;
  const bool pin = config.pin_marks_in_large_families;
  auto pointed = [&](std::string_view prefix, std::size_t marks, bool pinned = false) {
    return detail::pointed_samples(source, prefix, k, marks, pinned);
  };
  auto random = [&](std::string_view prefix, std::size_t marks, std::mt19937_64& rng) {
    return detail::random_pointed(source, prefix, config, marks, rng);
  };
  auto describe = [&](const char* name, const P& p) {
    return std::string(name) + " = " + target.describe(p.element) + " " + detail::marks_text(p.marks);
  };

  CheckReport report{"modular operad axioms", {}};

  // 1. x o_{a,b} y = y o_{b,a} x
  {
    const auto xs = pointed("x", 1);
    const auto ys = pointed("y", 1);
    auto check = [&](const P& x, const P& y) -> Check {
      auto inst = [&] { return describe("x", x) + ", " + describe("y", y); };
      const E lhs = target.compose(x.element, x.marks[0], y.element, y.marks[0]);
      const E rhs = target.compose(y.element, y.marks[0], x.element, x.marks[0]);
      if (auto c = detail::expect_grade(target, lhs, target.grade(x.element) + target.grade(y.element), inst)) return c;
      return detail::compare(target, lhs, rhs, inst);
    };
    report.families.push_back(detail::run_mixed(
        "1 compose symmetry", 1, xs.size() * ys.size(),
        [&](std::uint64_t i) { return check(xs[i / ys.size()], ys[i % ys.size()]); },
        [&](std::mt19937_64& rng) { return check(random("x", 1, rng), random("y", 1, rng)); },
        config));
  }

  // 2. P(1) = 1, P(rho sigma) = P(rho) P(sigma)
  {
    struct Instance {
      std::size_t element;
      std::size_t sigma;  // index into renamings, or npos for the identity check
      std::size_t rho;
    };
    const auto xs = pointed("x", 0);
    std::vector<std::vector<Renaming>> sigmas(xs.size());
    std::vector<std::vector<Renaming>> rhos(static_cast<std::size_t>(k) + 1);
    for (int n = 0; n <= k; ++n) rhos[n] = all_renamings(make_labels("r", n), "t");
    std::vector<Instance> instances;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const auto labels = target.labels(xs[i].element);
      sigmas[i] = all_renamings(labels, "r");
      instances.push_back({i, std::string::npos, 0});
      for (std::size_t s = 0; s < sigmas[i].size(); ++s)
        for (std::size_t r = 0; r < rhos[labels.size()].size(); ++r) instances.push_back({i, s, r});
    }
    auto check = [&](const E& x, const Renaming* sigma, const Renaming* rho) -> Check {
      auto inst = [&] {
        return "x = " + target.describe(x) +
               (sigma ? ", sigma = {" + to_string(*sigma) + "}, rho = {" + to_string(*rho) + "}"
                      : ", identity");
      };
      if (!sigma) {
        const auto labels = target.labels(x);
        return detail::compare(target, target.rename(x, Renaming::identity(labels)), x, inst);
      }
      const E lhs = target.rename(x, *rho * *sigma);
      const E rhs = target.rename(target.rename(x, *sigma), *rho);
      if (auto c = detail::expect_grade(target, lhs, target.grade(x), inst)) return c;
      return detail::compare(target, lhs, rhs, inst);
    };
    report.families.push_back(detail::run_mixed(
        "2 rename functoriality", 2, instances.size(),
        [&](std::uint64_t i) {
          const auto& in = instances[i];
          const E& x = xs[in.element].element;
          if (in.sigma == std::string::npos) return check(x, nullptr, nullptr);
          const auto n = target.labels(x).size();
          return check(x, &sigmas[in.element][in.sigma], &rhos[n][in.rho]);
        },
        [&](std::mt19937_64& rng) {
          const auto x = random("x", 0, rng);
          const auto labels = target.labels(x.element);
          const auto sigma = random_renaming(labels, "r", rng);
          const auto rho = random_renaming(make_labels("r", static_cast<int>(labels.size())), "t", rng);
          return check(x.element, &sigma, &rho);
        },
        config));
  }

  // 3. P(rho|C1 u sigma|C2) o_{a,b} = o_{rho(a),sigma(b)} (P(rho) x P(sigma))
  {
    const auto xs = pointed("x", 1, pin);
    const auto ys = pointed("y", 1, pin);
    std::vector<std::vector<Renaming>> rhos(xs.size());
    std::vector<std::vector<Renaming>> sigmas(ys.size());
    for (std::size_t i = 0; i < xs.size(); ++i) rhos[i] = all_renamings(target.labels(xs[i].element), "r");
    for (std::size_t i = 0; i < ys.size(); ++i) sigmas[i] = all_renamings(target.labels(ys[i].element), "s");
    struct Instance {
      std::uint32_t x, y, rho, sigma;
    };
    std::vector<Instance> instances;
    for (std::uint32_t i = 0; i < xs.size(); ++i)
      for (std::uint32_t j = 0; j < ys.size(); ++j)
        for (std::uint32_t r = 0; r < rhos[i].size(); ++r)
          for (std::uint32_t s = 0; s < sigmas[j].size(); ++s) instances.push_back({i, j, r, s});
    auto check = [&](const P& x, const P& y, const Renaming& rho, const Renaming& sigma) -> Check {
      auto inst = [&] {
        return describe("x", x) + ", " + describe("y", y) + ", rho = {" + to_string(rho) +
               "}, sigma = {" + to_string(sigma) + "}";
      };
      const auto& a = x.marks[0];
      const auto& b = y.marks[0];
      std::vector<std::pair<Label, Label>> joint;
      for (const auto& [from, to] : rho.pairs())
        if (from != a) joint.emplace_back(from, to);
      for (const auto& [from, to] : sigma.pairs())
        if (from != b) joint.emplace_back(from, to);
      const E lhs = target.rename(target.compose(x.element, a, y.element, b), Renaming(std::move(joint)));
      const E rhs = target.compose(target.rename(x.element, rho), rho(a), target.rename(y.element, sigma), sigma(b));
      if (auto c = detail::expect_grade(target, rhs, target.grade(x.element) + target.grade(y.element), inst)) return c;
      return detail::compare(target, lhs, rhs, inst);
    };
    report.families.push_back(detail::run_mixed(
        "3 compose equivariance", 3, instances.size(),
        [&](std::uint64_t i) {
          const auto& in = instances[i];
          return check(xs[in.x], ys[in.y], rhos[in.x][in.rho], sigmas[in.y][in.sigma]);
        },
        [&](std::mt19937_64& rng) {
          const auto x = random("x", 1, rng);
          const auto y = random("y", 1, rng);
          return check(x, y, random_renaming(target.labels(x.element), "r", rng),
                       random_renaming(target.labels(y.element), "s", rng));
        },
        config));
  }

  // 4. P(rho|C) xi_{ab} = xi_{rho(a) rho(b)} P(rho)
  {
    const auto xs = pointed("x", 2);
    std::vector<std::vector<Renaming>> rhos(xs.size());
    std::vector<std::pair<std::uint32_t, std::uint32_t>> instances;
    for (std::uint32_t i = 0; i < xs.size(); ++i) {
      rhos[i] = all_renamings(target.labels(xs[i].element), "r");
      for (std::uint32_t r = 0; r < rhos[i].size(); ++r) instances.emplace_back(i, r);
    }
    auto check = [&](const P& x, const Renaming& rho) -> Check {
      auto inst = [&] { return describe("x", x) + ", rho = {" + to_string(rho) + "}"; };
      const auto& a = x.marks[0];
      const auto& b = x.marks[1];
      const E glued = target.contract(x.element, a, b);
      if (auto c = detail::expect_grade(target, glued, target.grade(x.element) + 1, inst)) return c;
      const auto rest = target.labels(glued);
      const E lhs = target.rename(glued, rho.restricted_to(rest));
      const E rhs = target.contract(target.rename(x.element, rho), rho(a), rho(b));
      return detail::compare(target, lhs, rhs, inst);
    };
    report.families.push_back(detail::run_mixed(
        "4 contract equivariance", 4, instances.size(),
        [&](std::uint64_t i) { return check(xs[instances[i].first], rhos[instances[i].first][instances[i].second]); },
        [&](std::mt19937_64& rng) {
          const auto x = random("x", 2, rng);
          return check(x, random_renaming(target.labels(x.element), "r", rng));
        },
        config));
  }

  // 5. xi_{ab} xi_{cd} = xi_{cd} xi_{ab}
  {
    const auto xs = pointed("x", 4);
    auto check = [&](const P& x) -> Check {
      auto inst = [&] { return describe("x", x); };
      const auto& m = x.marks;
      const E lhs = target.contract(target.contract(x.element, m[2], m[3]), m[0], m[1]);
      const E rhs = target.contract(target.contract(x.element, m[0], m[1]), m[2], m[3]);
      if (auto c = detail::expect_grade(target, lhs, target.grade(x.element) + 2, inst)) return c;
      return detail::compare(target, lhs, rhs, inst);
    };
    report.families.push_back(detail::run_mixed(
        "5 contract commutativity", 5, xs.size(), [&](std::uint64_t i) { return check(xs[i]); },
        [&](std::mt19937_64& rng) { return check(random("x", 4, rng)); }, config));
  }

  // 6. xi_{ab} o_{c,d} = xi_{cd} o_{a,b}   with a, c in x and b, d in y
  {
    const auto xs = pointed("x", 2);
    const auto ys = pointed("y", 2);
    auto check = [&](const P& x, const P& y) -> Check {
      auto inst = [&] { return describe("x", x) + " [a c], " + describe("y", y) + " [b d]"; };
      const auto &a = x.marks[0], &c = x.marks[1];
      const auto &b = y.marks[0], &d = y.marks[1];
      const E lhs = target.contract(target.compose(x.element, c, y.element, d), a, b);
      const E rhs = target.contract(target.compose(x.element, a, y.element, b), c, d);
      if (auto g = detail::expect_grade(target, lhs, target.grade(x.element) + target.grade(y.element) + 1, inst)) return g;
      return detail::compare(target, lhs, rhs, inst);
    };
    report.families.push_back(detail::run_mixed(
        "6 contract after compose", 6, xs.size() * ys.size(),
        [&](std::uint64_t i) { return check(xs[i / ys.size()], ys[i % ys.size()]); },
        [&](std::mt19937_64& rng) { return check(random("x", 2, rng), random("y", 2, rng)); },
        config));
  }

  // 7. o_{a,b} (xi_{cd} x 1) = xi_{cd} o_{a,b}   and 7'. o_{a,b} (1 x xi_{cd}) = xi_{cd} o_{a,b}
  {
    const auto x3 = pointed("x", 3);
    const auto y1 = pointed("y", 1);
    const auto x1 = pointed("x", 1);
    const auto y3 = pointed("y", 3);
    auto check_left = [&](const P& x, const P& y) -> Check {
      auto inst = [&] { return describe("x", x) + " [a c d], " + describe("y", y) + " [b] (axiom 7)"; };
      const auto &a = x.marks[0], &c = x.marks[1], &d = x.marks[2];
      const auto& b = y.marks[0];
      const E lhs = target.compose(target.contract(x.element, c, d), a, y.element, b);
      const E rhs = target.contract(target.compose(x.element, a, y.element, b), c, d);
      if (auto g = detail::expect_grade(target, lhs, target.grade(x.element) + target.grade(y.element) + 1, inst)) return g;
      return detail::compare(target, lhs, rhs, inst);
    };
    auto check_right = [&](const P& x, const P& y) -> Check {
      auto inst = [&] { return describe("x", x) + " [a], " + describe("y", y) + " [b c d] (axiom 7')"; };
      const auto& a = x.marks[0];
      const auto &b = y.marks[0], &c = y.marks[1], &d = y.marks[2];
      const E lhs = target.compose(x.element, a, target.contract(y.element, c, d), b);
      const E rhs = target.contract(target.compose(x.element, a, y.element, b), c, d);
      if (auto g = detail::expect_grade(target, lhs, target.grade(x.element) + target.grade(y.element) + 1, inst)) return g;
      return detail::compare(target, lhs, rhs, inst);
    };
    const std::uint64_t left = x3.size() * y1.size();
    const std::uint64_t right = x1.size() * y3.size();
    report.families.push_back(detail::run_mixed(
        "7 compose after contract", 7, left + right,
        [&](std::uint64_t i) {
          if (i < left) return check_left(x3[i / y1.size()], y1[i % y1.size()]);
          i -= left;
          return check_right(x1[i / y3.size()], y3[i % y3.size()]);
        },
        [&](std::mt19937_64& rng) {
          if (std::bernoulli_distribution(0.5)(rng)) return check_left(random("x", 3, rng), random("y", 1, rng));
          return check_right(random("x", 1, rng), random("y", 3, rng));
        },
        config));
  }

  // 8. o_{a,b} (1 x o_{c,d}) = o_{c,d} (o_{a,b} x 1)   with a in x, b, c in y, d in z
  {
    const auto xs = pointed("x", 1, pin);
    const auto ys = pointed("y", 2, pin);
    const auto zs = pointed("z", 1, pin);
    auto check = [&](const P& x, const P& y, const P& z) -> Check {
      auto inst = [&] {
        return describe("x", x) + " [a], " + describe("y", y) + " [b c], " + describe("z", z) + " [d]";
      };
      const auto& a = x.marks[0];
      const auto &b = y.marks[0], &c = y.marks[1];
      const auto& d = z.marks[0];
      const E lhs = target.compose(x.element, a, target.compose(y.element, c, z.element, d), b);
      const E rhs = target.compose(target.compose(x.element, a, y.element, b), c, z.element, d);
      if (auto g = detail::expect_grade(target, lhs, target.grade(x.element) + target.grade(y.element) + target.grade(z.element), inst)) return g;
      return detail::compare(target, lhs, rhs, inst);
    };
    const std::uint64_t yz = ys.size() * zs.size();
    report.families.push_back(detail::run_mixed(
        "8 compose associativity", 8, xs.size() * yz,
        [&](std::uint64_t i) {
          return check(xs[i / yz], ys[(i % yz) / zs.size()], zs[i % zs.size()]);
        },
        [&](std::mt19937_64& rng) {
          const auto x = random("x", 1, rng);
          const auto y = random("y", 2, rng);
          return check(x, y, random("z", 1, rng));
        },
        config));
  }

  // xi_{ab} = xi_{ba}
  {
    const auto xs = pointed("x", 2);
    auto check = [&](const P& x) -> Check {
      auto inst = [&] { return describe("x", x); };
      const E lhs = target.contract(x.element, x.marks[0], x.marks[1]);
      const E rhs = target.contract(x.element, x.marks[1], x.marks[0]);
      if (auto g = detail::expect_grade(target, lhs, target.grade(x.element) + 1, inst)) return g;
      return detail::compare(target, lhs, rhs, inst);
    };
    report.families.push_back(detail::run_mixed(
        "contract symmetry", 9, xs.size(), [&](std::uint64_t i) { return check(xs[i]); },
        [&](std::mt19937_64& rng) { return check(random("x", 2, rng)); }, config));
  }
  return report;
}

/// Checks that f is a morphism of cyclic operads on cyclic words with at most
/// max_labels labels: label sets and grade 0 are kept, f commutes with
/// renaming and with splicing.
template <ModularOperad T>
CheckReport check_cyclic_morphism(const T& target, const AssMorphism<T>& f, const CheckConfig& config) {
  using Check = std::optional<Counterexample>;
  using P = Pointed<AssElement>;
  const SampleSource<AssElement> source{
      [](std::span<const Label> labels) { return all_ass_elements(labels); },
      [](std::span<const Label> labels, std::mt19937_64& rng) {
        std::vector<Label> items(labels.begin(), labels.end());
        std::shuffle(items.begin(), items.end(), rng);
        return AssElement(canonical_rotation(std::move(items)));
      }};
  auto pointed = [&](std::string_view prefix, std::size_t marks) {
    return detail::pointed_samples(source, prefix, config.max_labels, marks, false);
  };
  auto random = [&](std::string_view prefix, std::size_t marks, std::mt19937_64& rng) {
    return detail::random_pointed(source, prefix, config, marks, rng);
  };
  auto word = [](const AssElement& x) { return to_string(x.word()); };

  CheckReport report{"cyclic operad morphism", {}};
  {
    const auto xs = pointed("x", 0);
    auto check = [&](const AssElement& x) -> Check {
      auto inst = [&] { return "x = " + word(x); };
      const auto image = f(x);
      auto labels = x.word().items();
      std::sort(labels.begin(), labels.end());
      if (target.labels(image) != labels) {
        return Counterexample{0, inst(), target.describe(image), "labels of " + word(x)};
      }
      return detail::expect_grade(target, image, 0, inst);
    };
    report.families.push_back(detail::run_mixed(
        "label sets and grade", 20, xs.size(), [&](std::uint64_t i) { return check(xs[i].element); },
        [&](std::mt19937_64& rng) { return check(random("x", 0, rng).element); }, config));
  }
  {
    const auto xs = pointed("x", 0);
    std::vector<std::pair<std::uint32_t, Renaming>> instances;
    for (std::uint32_t i = 0; i < xs.size(); ++i)
      for (auto& rho : all_renamings(xs[i].element.word().items(), "r")) instances.emplace_back(i, std::move(rho));
    auto check = [&](const AssElement& x, const Renaming& rho) -> Check {
      auto inst = [&] { return "x = " + word(x) + ", rho = {" + to_string(rho) + "}"; };
      return detail::compare(target, f(ass_rename(x, rho)), target.rename(f(x), rho), inst);
    };
    report.families.push_back(detail::run_mixed(
        "rename equivariance", 21, instances.size(),
        [&](std::uint64_t i) { return check(xs[instances[i].first].element, instances[i].second); },
        [&](std::mt19937_64& rng) {
          const auto x = random("x", 0, rng);
          return check(x.element, random_renaming(x.element.word().items(), "r", rng));
        },
        config));
  }
  {
    const auto xs = pointed("x", 1);
    const auto ys = pointed("y", 1);
    auto check = [&](const P& x, const P& y) -> Check {
      auto inst = [&] {
        return "x = " + word(x.element) + " " + detail::marks_text(x.marks) + ", y = " + word(y.element) +
               " " + detail::marks_text(y.marks);
      };
      const auto& a = x.marks[0];
      const auto& b = y.marks[0];
      return detail::compare(target, f(ass_compose(x.element, a, y.element, b)),
                             target.compose(f(x.element), a, f(y.element), b), inst);
    };
    report.families.push_back(detail::run_mixed(
        "compose", 22, xs.size() * ys.size(),
        [&](std::uint64_t i) { return check(xs[i / ys.size()], ys[i % ys.size()]); },
        [&](std::mt19937_64& rng) { return check(random("x", 1, rng), random("y", 1, rng)); },
        config));
  }
  return report;
}

struct WellDefinednessReport {
  std::size_t expressions = 0;
  bool agree = true;
  std::string value;
  /// First expression whose value differs from the first one.
  std::optional<std::pair<std::string, std::string>> disagreement;
};

/// Computes f~(q) along every member of all_canonical_diagrams(q).
template <ModularOperad T>
WellDefinednessReport check_well_definedness(const T& target, const AssMorphism<T>& f, const Surface& q) {
  WellDefinednessReport out;
  const auto expressions = all_canonical_diagrams(q);
  out.expressions = expressions.size();
  const auto first = tilde_f(target, f, expressions.front());
  out.value = target.describe(first);
  for (std::size_t i = 1; i < expressions.size(); ++i) {
    const auto v = tilde_f(target, f, expressions[i]);
    if (!target.equal(v, first)) {
      out.agree = false;
      out.disagreement = {to_string(expressions[i].diagram), target.describe(v)};
      break;
    }
  }
  return out;
}

/// The surfaces the envelope checks run over: every surface on a label set
/// prefix0..prefix(n-1), n <= max_labels, with genus <= max_g, together with
/// its variants carrying extra empty cycles up to max_boundaries cycles.
std::vector<Surface> envelope_family(std::string_view prefix, int max_labels, int max_g,
                                     int max_boundaries);

/// Well-definedness over a family of surfaces. With `reference`, the common
/// value must also equal reference(q).
template <ModularOperad T>
FamilyReport check_well_definedness_family(
    const T& target, const AssMorphism<T>& f, const std::vector<Surface>& family,
    const std::function<typename T::Element(const Surface&)>& reference, Execution execution) {
  return run_family(
      "well-definedness", family.size(),
      [&](std::uint64_t i) -> std::optional<Counterexample> {
        const Surface& q = family[i];
        const auto expressions = all_canonical_diagrams(q);
        const auto first = tilde_f(target, f, expressions.front());
        for (std::size_t e = 1; e < expressions.size(); ++e) {
          const auto v = tilde_f(target, f, expressions[e]);
          if (!target.equal(v, first)) {
            return Counterexample{0, "q = " + to_string(q) + " along " + to_string(expressions[e].diagram),
                                  target.describe(v), target.describe(first)};
          }
        }
        if (target.grade(first) != q.grade()) {
          return Counterexample{0, "q = " + to_string(q) + " [grade law]", target.describe(first),
                                "expected G=" + std::to_string(q.grade())};
        }
        if (reference) {
          const auto expected = reference(q);
          if (!target.equal(first, expected)) {
            return Counterexample{0, "q = " + to_string(q) + " [reference value]",
                                  target.describe(first), target.describe(expected)};
          }
        }
        return std::nullopt;
      },
      execution);
}

/// Checks that f~ is a morphism of modular operads QO -> target on the
/// exhaustive family: it commutes with renaming, with gluing and with both
/// kinds of contraction; it extends f (genus-0 single-cycle surfaces) and
/// preserves grades. With `reference`, also f~(q) = reference(q) pointwise.
template <ModularOperad T>
CheckReport check_modular_morphism(const T& target, const AssMorphism<T>& f, const CheckConfig& config,
                                   const std::function<typename T::Element(const Surface&)>& reference = {}) {
  using E = typename T::Element;
  using Check = std::optional<Counterexample>;
  const QoRules source_rules;
  const auto xs = envelope_family("x", config.max_labels, config.max_g, config.max_boundaries);
  const auto ys = envelope_family("y", config.max_labels, config.max_g, config.max_boundaries);

  auto tilde_all = [&](const std::vector<Surface>& qs) {
    std::vector<std::optional<E>> values(qs.size());
    const auto computed = run_family("f~", qs.size(), [&](std::uint64_t i) -> Check {
      values[i] = tilde_f(target, f, qs[i]);
      return std::nullopt;
    }, config.execution);
    if (!computed.passed()) throw Error("f~ failed on " + computed.first_failure->instance + ": " + computed.first_failure->lhs);
    return values;
  };
  const auto fx = tilde_all(xs);
  const auto fy = tilde_all(ys);

  CheckReport report{"f~ is a modular operad morphism", {}};
  {
    std::vector<std::pair<std::uint32_t, Renaming>> instances;
    for (std::uint32_t i = 0; i < xs.size(); ++i)
      for (auto& sigma : all_renamings(xs[i].labels(), "r")) instances.emplace_back(i, std::move(sigma));
    report.families.push_back(run_family(
        "rename", instances.size(),
        [&](std::uint64_t i) -> Check {
          const auto& [qi, sigma] = instances[i];
          return detail::compare(target, tilde_f(target, f, source_rules.rename(xs[qi], sigma)),
                                 target.rename(*fx[qi], sigma), [&] {
                                   return "q = " + to_string(xs[qi]) + ", sigma = {" + to_string(sigma) + "}";
                                 });
        },
        config.execution));
  }
  {
    struct Instance {
      std::uint32_t x, y;
      Label a, b;
    };
    std::vector<Instance> instances;
    for (std::uint32_t i = 0; i < xs.size(); ++i)
      for (const auto& a : xs[i].labels())
        for (std::uint32_t j = 0; j < ys.size(); ++j)
          for (const auto& b : ys[j].labels()) instances.push_back({i, j, a, b});
    report.families.push_back(run_family(
        "compose", instances.size(),
        [&](std::uint64_t i) -> Check {
          const auto& in = instances[i];
          auto inst = [&] {
            return "q = " + to_string(xs[in.x]) + ", a = " + in.a.name() + ", q' = " + to_string(ys[in.y]) +
                   ", b = " + in.b.name();
          };
          const E lhs = tilde_f(target, f, source_rules.compose(xs[in.x], in.a, ys[in.y], in.b));
          const E rhs = target.compose(*fx[in.x], in.a, *fy[in.y], in.b);
          if (auto g = detail::expect_grade(target, rhs, xs[in.x].grade() + ys[in.y].grade(), inst)) return g;
          return detail::compare(target, lhs, rhs, inst);
        },
        config.execution));
  }
  for (const bool same_cycle : {true, false}) {
    struct Instance {
      std::uint32_t x;
      Label a, b;
    };
    std::vector<Instance> instances;
    for (std::uint32_t i = 0; i < xs.size(); ++i) {
      const auto labels = xs[i].labels();
      for (const auto& a : labels)
        for (const auto& b : labels)
          if (a != b && (xs[i].cycle_of(a) == xs[i].cycle_of(b)) == same_cycle) instances.push_back({i, a, b});
    }
    report.families.push_back(run_family(
        same_cycle ? "contract, same cycle" : "contract, different cycles", instances.size(),
        [&](std::uint64_t i) -> Check {
          const auto& in = instances[i];
          auto inst = [&] { return "q = " + to_string(xs[in.x]) + ", a = " + in.a.name() + ", b = " + in.b.name(); };
          const E lhs = tilde_f(target, f, source_rules.self_glue(xs[in.x], in.a, in.b));
          const E rhs = target.contract(*fx[in.x], in.a, in.b);
          if (auto g = detail::expect_grade(target, rhs, xs[in.x].grade() + 1, inst)) return g;
          return detail::compare(target, lhs, rhs, inst);
        },
        config.execution));
  }
  report.families.push_back(run_family(
      "extends f and keeps grades", xs.size(),
      [&](std::uint64_t i) -> Check {
        const Surface& q = xs[i];
        auto inst = [&] { return "q = " + to_string(q); };
        if (auto g = detail::expect_grade(target, *fx[i], q.grade(), inst)) return g;
        if (q.genus() == 0 && q.boundary_count() == 1) {
          return detail::compare(target, *fx[i], f(AssElement(q.cycles()[0])), inst);
        }
        return std::nullopt;
      },
      config.execution));
  if (reference) {
    report.families.push_back(run_family(
        "uniqueness (f~ equals the reference map)", xs.size(),
        [&](std::uint64_t i) -> Check {
          return detail::compare(target, *fx[i], reference(xs[i]), [&] { return "q = " + to_string(xs[i]); });
        },
        config.execution));
  }
  return report;
}

}  // namespace qo

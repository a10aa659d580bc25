#include "qo/checks.hpp"

#include <algorithm>
#include <numeric>

#include <omp.h>

namespace qo {

bool CheckReport::passed() const {
  return std::all_of(families.begin(), families.end(), [](const auto& f) { return f.passed(); });
}

const FamilyReport* CheckReport::family(std::string_view name) const {
  for (const auto& f : families)
    if (f.name == name) return &f;
  return nullptr;
}

bool operator==(const Counterexample& a, const Counterexample& b) {
  return a.index == b.index && a.instance == b.instance && a.lhs == b.lhs && a.rhs == b.rhs;
}

bool operator==(const CheckReport& a, const CheckReport& b) {
  return a.title == b.title && a.families == b.families;
}

nlohmann::json to_json(const CheckReport& report) {
  nlohmann::json families = nlohmann::json::array();
  for (const auto& f : report.families) {
    nlohmann::json entry = {{"family", f.name},
                            {"instances", f.instances},
                            {"failures", f.failures},
                            {"passed", f.passed()}};
    if (f.first_failure) {
      entry["counterexample"] = {{"index", f.first_failure->index},
                                 {"instance", f.first_failure->instance},
                                 {"lhs", f.first_failure->lhs},
                                 {"rhs", f.first_failure->rhs}};
    }
    families.push_back(std::move(entry));
  }
  return {{"check", report.title}, {"passed", report.passed()}, {"families", std::move(families)}};
}

std::string to_string(const CheckReport& report) {
  std::string out = report.title + ": " + (report.passed() ? "PASS" : "FAIL") + "\n";
  for (const auto& f : report.families) {
    out += "  " + std::string(f.passed() ? "pass " : "FAIL ") + f.name + "  (" +
           std::to_string(f.instances) + " instances, " + std::to_string(f.failures) + " failures)\n";
    if (f.first_failure) {
      out += "    instance: " + f.first_failure->instance + "\n";
      out += "    lhs:      " + f.first_failure->lhs + "\n";
      out += "    rhs:      " + f.first_failure->rhs + "\n";
    }
  }
  return out;
}

namespace {

std::optional<Counterexample> guarded(const InstanceCheck& check, std::uint64_t i) {
  try {
    return check(i);
  } catch (const std::exception& e) {
    return Counterexample{i, "instance #" + std::to_string(i), std::string("threw: ") + e.what(), "a value"};
  }
}

}  // namespace

FamilyReport run_family(std::string name, std::uint64_t count, const InstanceCheck& check,
                        Execution execution) {
  FamilyReport report{std::move(name), count, 0, std::nullopt};
  if (execution == Execution::serial) {
    for (std::uint64_t i = 0; i < count; ++i) {
      if (auto c = guarded(check, i)) {
        ++report.failures;
        if (!report.first_failure) {
          c->index = i;
          report.first_failure = std::move(c);
        }
      }
    }
    return report;
  }

  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel
  {
    std::uint64_t failures = 0;
    std::optional<Counterexample> first;
#pragma omp for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < n; ++i) {
      const auto index = static_cast<std::uint64_t>(i);
      if (auto c = guarded(check, index)) {
        ++failures;
        if (!first || index < first->index) {
          c->index = index;
          first = std::move(c);
        }
      }
    }
#pragma omp critical
    {
      report.failures += failures;
      if (first && (!report.first_failure || first->index < report.first_failure->index)) {
        report.first_failure = std::move(first);
      }
    }
  }
  return report;
}

std::mt19937_64 instance_rng(std::uint64_t seed, std::uint64_t family, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(family), static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

std::vector<Label> make_labels(std::string_view prefix, int n) {
  std::vector<Label> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(Label::user(std::string(prefix) + std::to_string(i)));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Renaming> all_renamings(std::span<const Label> from, std::string_view prefix) {
  std::vector<Label> sorted(from.begin(), from.end());
  std::sort(sorted.begin(), sorted.end());
  const auto to = make_labels(prefix, static_cast<int>(sorted.size()));
  std::vector<std::size_t> perm(sorted.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<Renaming> out;
  do {
    std::vector<std::pair<Label, Label>> pairs;
    pairs.reserve(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) pairs.emplace_back(sorted[i], to[perm[i]]);
    out.emplace_back(std::move(pairs));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Renaming random_renaming(std::span<const Label> from, std::string_view prefix, std::mt19937_64& rng) {
  auto to = make_labels(prefix, static_cast<int>(from.size()));
  std::shuffle(to.begin(), to.end(), rng);
  std::vector<std::pair<Label, Label>> pairs;
  pairs.reserve(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) pairs.emplace_back(from[i], to[i]);
  return Renaming(std::move(pairs));
}

Surface random_surface(std::span<const Label> labels, int max_g, std::mt19937_64& rng) {
  const std::size_t n = labels.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::vector<Label>> cycles;
  std::vector<bool> done(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (done[i]) continue;
    std::vector<Label> cycle;
    for (std::size_t j = i; !done[j]; j = perm[j]) {
      done[j] = true;
      cycle.push_back(labels[j]);
    }
    std::shuffle(cycle.begin(), cycle.end(), rng);
    cycles.push_back(std::move(cycle));
  }
  if (cycles.empty()) cycles.emplace_back();
  // Occasionally add boundary components without marked points.
  const int extra = std::discrete_distribution<int>({6, 2, 1})(rng);
  for (int e = 0; e < extra; ++e) cycles.emplace_back();
  const int genus = std::uniform_int_distribution<int>(0, max_g)(rng);
  return make_surface(std::move(cycles), genus);
}

std::vector<AssElement> all_ass_elements(std::span<const Label> labels) {
  std::vector<Label> sorted(labels.begin(), labels.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.size() <= 1) return {AssElement(canonical_rotation(std::move(sorted)))};
  std::vector<AssElement> out;
  // Fix the smallest label first and permute the rest.
  do {
    out.emplace_back(canonical_rotation(sorted));
  } while (std::next_permutation(sorted.begin() + 1, sorted.end()));
  return out;
}

SampleSource<Surface> qo_samples(const CheckConfig& config) {
  const int max_g = config.max_g;
  const int random_max_g = config.random_max_g;
  return {[max_g](std::span<const Label> labels) { return enumerate_surfaces(labels, max_g); },
          [random_max_g](std::span<const Label> labels, std::mt19937_64& rng) {
            return random_surface(labels, random_max_g, rng);
          }};
}

SampleSource<TerminalPoint> terminal_samples(const CheckConfig& config) {
  const int max_g = config.max_g;
  const int random_max_g = config.random_max_g;
  return {[max_g](std::span<const Label> labels) {
            std::vector<Label> sorted(labels.begin(), labels.end());
            std::sort(sorted.begin(), sorted.end());
            std::vector<TerminalPoint> out;
            for (int g = 0; g <= 2 * max_g + static_cast<int>(sorted.size()); ++g) out.push_back({sorted, g});
            return out;
          },
          [random_max_g](std::span<const Label> labels, std::mt19937_64& rng) {
            std::vector<Label> sorted(labels.begin(), labels.end());
            std::sort(sorted.begin(), sorted.end());
            const int top = 2 * random_max_g + static_cast<int>(sorted.size());
            return TerminalPoint{std::move(sorted), std::uniform_int_distribution<int>(0, top)(rng)};
          }};
}

std::vector<Surface> envelope_family(std::string_view prefix, int max_labels, int max_g,
                                     int max_boundaries) {
  std::vector<Surface> out;
  for (int n = 0; n <= max_labels; ++n) {
    for (const auto& q : enumerate_surfaces(make_labels(prefix, n), max_g)) {
      // enumerate_surfaces already supplies one empty cycle when n = 0.
      for (int extra = 0; q.boundary_count() + extra <= max_boundaries; ++extra) {
        auto cycles = q.cycles();
        cycles.resize(cycles.size() + static_cast<std::size_t>(extra));
        out.emplace_back(std::move(cycles), q.genus());
      }
    }
  }
  return out;
}

namespace detail {

std::vector<std::vector<std::size_t>> ordered_selections(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self) -> void {
    if (current.size() == k) {
      out.push_back(current);
      return;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      used[i] = true;
      current.push_back(i);
      self(self);
      current.pop_back();
      used[i] = false;
    }
  };
  extend(extend);
  return out;
}

std::string marks_text(std::span<const Label> marks) {
  std::string out = "[";
  for (std::size_t i = 0; i < marks.size(); ++i) out += (i ? " " : "") + marks[i].name();
  return out + "]";
}

FamilyReport run_mixed(std::string name, std::uint64_t family_id, std::uint64_t exhaustive,
                       const InstanceCheck& exhaustive_check,
                       const std::function<std::optional<Counterexample>(std::mt19937_64&)>& random_check,
                       const CheckConfig& config) {
  return run_family(
      std::move(name), exhaustive + config.random_instances,
      [&](std::uint64_t i) -> std::optional<Counterexample> {
        if (i < exhaustive) return exhaustive_check(i);
        auto rng = instance_rng(config.seed, family_id, i - exhaustive);
        auto c = random_check(rng);
        if (c) c->instance = "random #" + std::to_string(i - exhaustive) + ": " + c->instance;
        return c;
      },
      config.execution);
}

}  // namespace detail

}  // namespace qo

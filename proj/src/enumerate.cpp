#include "qo/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include <omp.h>

#include "qo/error.hpp"

namespace qo {

std::vector<Surface> enumerate_surfaces(std::span<const Label> labels, int max_g) {
  std::vector<Label> sorted(labels.begin(), labels.end());
  std::sort(sorted.begin(), sorted.end());
  if (!all_distinct(sorted)) throw PreconditionError("repeated label in label set");

  // Permutations of the label set are in bijection with partitions into
  // cyclically ordered blocks: take the cycle decomposition.
  std::vector<std::vector<std::vector<Label>>> structures;
  std::vector<std::size_t> perm(sorted.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    std::vector<std::vector<Label>> cycles;
    std::vector<bool> done(perm.size(), false);
    for (std::size_t i = 0; i < perm.size(); ++i) {
      if (done[i]) continue;
      std::vector<Label> cycle;
      for (std::size_t j = i; !done[j]; j = perm[j]) {
        done[j] = true;
        cycle.push_back(sorted[j]);
      }
      cycles.push_back(std::move(cycle));
    }
    if (cycles.empty()) cycles.emplace_back();
    structures.push_back(std::move(cycles));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<std::pair<std::string, Surface>> keyed;
  keyed.reserve(structures.size() * static_cast<std::size_t>(max_g + 1));
  for (int g = 0; g <= max_g; ++g) {
    for (const auto& s : structures) {
      Surface q = make_surface(s, g);
      keyed.emplace_back(to_string(q), std::move(q));
    }
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Surface> out;
  out.reserve(keyed.size());
  for (auto& [key, q] : keyed) out.push_back(std::move(q));
  return out;
}

std::uint64_t double_factorial_odd(int n) {
  std::uint64_t out = 1;
  for (int k = 2 * n - 1; k > 1; k -= 2) out *= static_cast<std::uint64_t>(k);
  return out;
}

namespace {

std::vector<Label> bare_circle(int n) {
  std::vector<Label> base;
  base.reserve(static_cast<std::size_t>(2 * n));
  for (int i = 1; i <= 2 * n; ++i) base.push_back(Label::glue(i));
  return base;
}

}  // namespace

ChordDiagram matching_from_index(int n, std::uint64_t index) {
  if (n < 0) throw PreconditionError("number of chords must be nonnegative");
  if (index >= double_factorial_odd(n)) throw PreconditionError("matching rank out of range");
  std::vector<int> free(static_cast<std::size_t>(2 * n));
  std::iota(free.begin(), free.end(), 1);
  std::vector<std::pair<Label, Label>> arcs;
  while (!free.empty()) {
    // Mixed radix, first pairing most significant.
    const std::uint64_t below = double_factorial_odd(static_cast<int>(free.size() / 2) - 1);
    const auto pick = static_cast<std::size_t>(index / below) + 1;
    index %= below;
    arcs.emplace_back(Label::glue(free[0]), Label::glue(free[pick]));
    free.erase(free.begin() + static_cast<std::ptrdiff_t>(pick));
    free.erase(free.begin());
  }
  return ChordDiagram(bare_circle(n), std::move(arcs));
}

std::vector<ChordDiagram> enumerate_matchings(int n) {
  if (n < 0) throw PreconditionError("number of chords must be nonnegative");
  std::vector<ChordDiagram> out;
  std::vector<std::pair<Label, Label>> arcs;
  std::vector<bool> used(static_cast<std::size_t>(2 * n) + 1, false);
  const auto base = bare_circle(n);

  std::function<void()> extend = [&] {
    int lowest = 1;
    while (lowest <= 2 * n && used[lowest]) ++lowest;
    if (lowest > 2 * n) {
      out.emplace_back(base, arcs);
      return;
    }
    used[lowest] = true;
    for (int j = lowest + 1; j <= 2 * n; ++j) {
      if (used[j]) continue;
      used[j] = true;
      arcs.emplace_back(Label::glue(lowest), Label::glue(j));
      extend();
      arcs.pop_back();
      used[j] = false;
    }
    used[lowest] = false;
  };
  extend();
  return out;
}

GenusTable genus_distribution(int n, const QoRules& rules) {
  if (n < 0) throw PreconditionError("number of chords must be nonnegative");
  const auto total = static_cast<std::int64_t>(double_factorial_odd(n));
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);

#pragma omp parallel
  {
    std::vector<std::uint64_t> local(counts.size(), 0);
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < total; ++i) {
      const Surface q = evaluate(matching_from_index(n, static_cast<std::uint64_t>(i)), rules);
      local[static_cast<std::size_t>(q.genus())] += 1;
    }
#pragma omp critical
    for (std::size_t g = 0; g < counts.size(); ++g) counts[g] += local[g];
  }

  GenusTable table;
  for (std::size_t g = 0; g < counts.size(); ++g)
    if (counts[g] != 0) table[static_cast<int>(g)] = counts[g];
  return table;
}

GenusTable genus_distribution_serial(int n, const QoRules& rules) {
  GenusTable table;
  for (const auto& d : enumerate_matchings(n)) table[evaluate(d, rules).genus()] += 1;
  return table;
}

std::string format_genus_table(const GenusTable& table) {
  std::string out;
  std::uint64_t total = 0;
  for (const auto& [g, count] : table) {
    out += "g=" + std::to_string(g) + ": " + std::to_string(count) + "\n";
    total += count;
  }
  out += "total: " + std::to_string(total) + "\n";
  return out;
}

nlohmann::json genus_table_json(int n, const GenusTable& table) {
  nlohmann::json by_genus = nlohmann::json::object();
  std::uint64_t total = 0;
  for (const auto& [g, count] : table) {
    by_genus[std::to_string(g)] = count;
    total += count;
  }
  return {{"chords", n}, {"genus", std::move(by_genus)}, {"total", total}};
}

}  // namespace qo

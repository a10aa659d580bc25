#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "qo/chord_diagram.hpp"
#include "qo/surface.hpp"

namespace qo {

/// All surfaces whose cycles partition exactly `labels` (no extra empty
/// cycles), for every genus 0..max_g, sorted by canonical text. For an empty
/// label set this is {( )}^0 .. {( )}^max_g.
std::vector<Surface> enumerate_surfaces(std::span<const Label> labels, int max_g);

/// (2n-1)!!; 1 for n = 0.
std::uint64_t double_factorial_odd(int n);

/// The matching with rank `index` on the bare circle ( #1 ... #(2n) ), read as
/// a mixed-radix number whose most significant digit picks the partner of #1
/// among the free tokens. Ranks 0..(2n-1)!!-1 enumerate every perfect matching
/// once, in the order of enumerate_matchings.
ChordDiagram matching_from_index(int n, std::uint64_t index);

/// All (2n-1)!! perfect matchings on the bare circle, lexicographic order.
std::vector<ChordDiagram> enumerate_matchings(int n);

/// Genus -> number of matchings on 2n points whose evaluation has that genus.
using GenusTable = std::map<int, std::uint64_t>;

/// OpenMP-parallel over matching ranks; deterministic merge.
GenusTable genus_distribution(int n, const QoRules& rules = {});
/// Single-threaded recursive reference.
GenusTable genus_distribution_serial(int n, const QoRules& rules = {});

/// `g=0: 2` lines followed by `total: 3`.
std::string format_genus_table(const GenusTable& table);
nlohmann::json genus_table_json(int n, const GenusTable& table);

}  // namespace qo

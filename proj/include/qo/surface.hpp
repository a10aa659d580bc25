#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qo/core_words.hpp"

namespace qo {

/// Homeomorphism class of a compact surface with marked boundary points:
/// a multiset of boundary cycles plus the geometric genus g.
///
/// Invariants: at least one cycle; labels pairwise distinct across cycles;
/// g >= 0. Cycles are kept sorted (shorter first, then lexicographic), so
/// equality of canonical forms is plain member-wise equality.
class Surface {
 public:
  /// Throws PreconditionError on an empty cycle list, a repeated label, or g < 0.
  Surface(std::vector<CyclicWord> cycles, int genus);

  const std::vector<CyclicWord>& cycles() const { return cycles_; }
  int genus() const { return genus_; }
  int boundary_count() const { return static_cast<int>(cycles_.size()); }
  /// G = 2g + b - 1.
  int grade() const { return 2 * genus_ + boundary_count() - 1; }

  /// All labels, sorted.
  std::vector<Label> labels() const;
  std::size_t label_count() const;
  bool contains(const Label& x) const;
  /// Index of the cycle holding `x`, or -1.
  int cycle_of(const Label& x) const;

  friend bool operator==(const Surface&, const Surface&) = default;
  friend std::strong_ordering operator<=>(const Surface&, const Surface&);

 private:
  std::vector<CyclicWord> cycles_;
  int genus_;
};

Surface make_surface(std::vector<std::vector<Label>> cycles, int genus);

/// Rule variants used to check that the test suites detect broken rules.
enum class RuleMutation {
  none,
  merge_drops_genus,    // cross-cycle contraction forgets g + 1
  split_swaps_blocks,   // same-cycle contraction emits <A>, <B> in swapped order
  compose_drops_genus,  // gluing keeps only the first operand's genus
};

std::string_view to_string(RuleMutation m);
RuleMutation parse_mutation(std::string_view name);

/// The renaming, gluing and self-gluing rules of QO, optionally mutated.
struct QoRules {
  RuleMutation mutation = RuleMutation::none;

  Surface rename(const Surface& q, const Renaming& rho) const;
  /// a in cycle (a P) of q, b in cycle (b Q) of other; both replaced by (P Q);
  /// genus g + g'. Label sets must be disjoint.
  Surface compose(const Surface& q, const Label& a, const Surface& other, const Label& b) const;
  /// Same cycle <a A b B> -> <B>, <A>, genus kept.
  /// Cycles <a A>, <b B> -> <B A>, genus + 1.
  Surface self_glue(const Surface& q, const Label& a, const Label& b) const;
};

Surface qo_rename(const Surface& q, const Renaming& rho);
Surface qo_compose(const Surface& q, const Label& a, const Surface& other, const Label& b);
Surface qo_self_glue(const Surface& q, const Label& a, const Label& b);
bool surfaces_equal(const Surface& q1, const Surface& q2);

/// `{ ( a b ) ( ) ( c ) }^1`
std::string to_string(const Surface& q);
/// Whitespace-insensitive; the `^g` suffix defaults to 0. Glue tokens are
/// rejected unless `allow_glue` is set.
Surface parse_surface(std::string_view text, bool allow_glue = false);

nlohmann::json to_json(const Surface& q);
Surface surface_from_json(const nlohmann::json& j);

}  // namespace qo

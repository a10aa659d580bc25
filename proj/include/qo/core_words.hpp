#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qo {

/// Name of a marked point.
///
/// Any nonempty token without whitespace and without the reserved characters
/// `( ) { } ^ # ; ,` is a user label. The only other accepted form is a glue
/// token `#k` with k a positive integer; those are generated by the library
/// and rejected wherever user input is parsed.
class Label {
 public:
  explicit Label(std::string name);

  /// Accepts user labels only; `#k` is rejected.
  static Label user(std::string name);
  /// The glue token `#k`, k >= 1.
  static Label glue(int index);

  const std::string& name() const { return name_; }
  bool is_glue() const { return !name_.empty() && name_[0] == '#'; }
  /// k for `#k`, 0 for user labels.
  int glue_index() const;

  friend bool operator==(const Label&, const Label&) = default;
  friend auto operator<=>(const Label& a, const Label& b) {
    return a.name_ <=> b.name_;
  }

 private:
  struct Unchecked {};
  Label(Unchecked, std::string name) : name_(std::move(name)) {}

  std::string name_;
};

/// True if `c` may not appear inside a label.
bool is_reserved_char(char c);

/// A bijection between two finite label sets.
class Renaming {
 public:
  Renaming() = default;
  /// Domain and codomain are the left and right sides of `pairs`.
  explicit Renaming(std::vector<std::pair<Label, Label>> pairs);
  /// As above, additionally checking that the image is exactly `codomain`.
  Renaming(std::vector<std::pair<Label, Label>> pairs,
           std::span<const Label> codomain);

  static Renaming identity(std::span<const Label> labels);

  std::optional<Label> find(const Label& x) const;
  /// Throws PreconditionError when `x` is outside the domain.
  const Label& operator()(const Label& x) const;
  bool contains(const Label& x) const { return find(x).has_value(); }

  std::vector<Label> domain() const;
  std::vector<Label> codomain() const;
  std::size_t size() const { return pairs_.size(); }

  /// Sorted by source label.
  const std::vector<std::pair<Label, Label>>& pairs() const { return pairs_; }

  Renaming inverse() const;
  /// This map on its domain, identity on the extra labels (which must be
  /// outside both domain and codomain).
  Renaming extended_by_identity(std::span<const Label> extra) const;
  /// Restriction to `labels`, each of which must lie in the domain.
  Renaming restricted_to(std::span<const Label> labels) const;

  friend bool operator==(const Renaming&, const Renaming&) = default;

 private:
  std::vector<std::pair<Label, Label>> pairs_;
};

/// (rho * sigma)(x) = rho(sigma(x)). The codomain of sigma must be contained
/// in the domain of rho.
Renaming operator*(const Renaming& rho, const Renaming& sigma);

/// A word of pairwise distinct labels up to cyclic rotation, stored as its
/// lexicographically minimal rotation.
class CyclicWord {
 public:
  CyclicWord() = default;

  const std::vector<Label>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }

  /// Index of `x` in the stored rotation.
  std::optional<std::size_t> position(const Label& x) const;
  bool contains(const Label& x) const { return position(x).has_value(); }

  /// The word read cyclically starting at `x` (which is included).
  std::vector<Label> read_from(const Label& x) const;

  friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
  /// Shorter words first, then lexicographic.
  friend std::strong_ordering operator<=>(const CyclicWord& a,
                                          const CyclicWord& b);

 private:
  friend CyclicWord canonical_rotation(std::vector<Label> items);
  explicit CyclicWord(std::vector<Label> items) : items_(std::move(items)) {}

  std::vector<Label> items_;
};

/// Throws PreconditionError on a repeated label.
CyclicWord canonical_rotation(std::vector<Label> items);

/// Throws PreconditionError if a label of `w` is outside the domain of `rho`.
CyclicWord rename_word(const CyclicWord& w, const Renaming& rho);

/// True if `labels` has no repeated element.
bool all_distinct(std::span<const Label> labels);

/// `( a b c )`; the empty word prints as `( )`.
std::string to_string(const CyclicWord& w);

/// Parses `( a b c )`. Glue tokens are rejected.
CyclicWord parse_word(std::string_view text);

/// Parses `a->x, b->y`.
Renaming parse_renaming(std::string_view text);
std::string to_string(const Renaming& rho);

}  // namespace qo

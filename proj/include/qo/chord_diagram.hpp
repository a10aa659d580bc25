#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qo/core_words.hpp"
#include "qo/surface.hpp"

namespace qo {

/// A chord between two glue tokens; `first` has the smaller token index.
struct Arc {
  Label first;
  Label second;

  Arc(Label a, Label b);

  bool touches(const Label& x) const { return first == x || second == x; }
  friend bool operator==(const Arc&, const Arc&) = default;
};

/// A circle of labels and glue tokens with a perfect matching on the tokens.
///
/// This is syntax for an iterated self-gluing of a single cyclic word; no
/// operad structure is defined on diagrams themselves.
class ChordDiagram {
 public:
  ChordDiagram() = default;
  /// Throws PreconditionError unless every glue token of `base` lies on
  /// exactly one arc and every arc endpoint is a glue token of `base`.
  ChordDiagram(std::vector<Label> base, std::vector<std::pair<Label, Label>> arcs);

  const CyclicWord& base() const { return base_; }
  /// Sorted by the index of the smaller token.
  const std::vector<Arc>& arcs() const { return arcs_; }
  std::size_t arc_count() const { return arcs_.size(); }

  std::optional<Label> partner(const Label& token) const;
  /// Index into arcs() of the arc joining x and y, in either orientation.
  std::optional<std::size_t> find_arc(const Label& x, const Label& y) const;
  /// The user labels (non-token items), sorted.
  std::vector<Label> user_labels() const;

  friend bool operator==(const ChordDiagram&, const ChordDiagram&) = default;

 private:
  CyclicWord base_;
  std::vector<Arc> arcs_;
};

/// Starts from {base}^0 and self-glues along every arc in arcs() order.
Surface evaluate(const ChordDiagram& d, const QoRules& rules = {});
/// As evaluate, gluing arcs()[order[0]], arcs()[order[1]], ... in turn.
/// `order` must be a permutation of the arc indices.
Surface evaluate_in_order(const ChordDiagram& d, std::span<const std::size_t> order,
                          const QoRules& rules = {});

/// Applies `rho` to every item (tokens included) and rebuilds the diagram.
/// Glue tokens must map to glue tokens.
ChordDiagram rename_diagram(const ChordDiagram& d, const Renaming& rho);

/// `[ a #1 b #2 ; (#1 #2) ]`: the circle read from its smallest user label
/// (smallest token if it has none), arcs in order.
std::string to_string(const ChordDiagram& d);
ChordDiagram parse_diagram(std::string_view text);

/// Graphviz text: the base circle as a cycle of nodes, arcs as chords.
std::string render_dot(const ChordDiagram& d);

}  // namespace qo

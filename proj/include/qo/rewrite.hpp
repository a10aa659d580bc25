#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qo/chord_diagram.hpp"

namespace qo {

/// Reading the circle as x S1 y S2 for the arc {x, y}, rotate S1 left by k1
/// and S2 left by k2.
struct MainLemmaMove {
  Label x;
  Label y;
  int k1 = 0;
  int k2 = 0;
  friend bool operator==(const MainLemmaMove&, const MainLemmaMove&) = default;
};

/// Cut the segment running forward from `from` to its arc partner `to` and
/// reinsert it right after the item `after`.
struct BoundaryMove {
  Label from;
  Label to;
  Label after;
  friend bool operator==(const BoundaryMove&, const BoundaryMove&) = default;
};

/// Cut four consecutive tokens a b c d joined by arcs {a,c}, {b,d} and
/// reinsert them right after `after`.
struct HandleMove {
  std::array<Label, 4> block;
  Label after;
  friend bool operator==(const HandleMove&, const HandleMove&) = default;
};

using Move = std::variant<MainLemmaMove, BoundaryMove, HandleMove>;

ChordDiagram main_lemma_move(const ChordDiagram& d, const Label& x, const Label& y, int k1, int k2);
ChordDiagram boundary_move(const ChordDiagram& d, const Label& from, const Label& to,
                           const Label& after);
ChordDiagram handle_move(const ChordDiagram& d, const std::array<Label, 4>& block,
                         const Label& after);

ChordDiagram apply_move(const ChordDiagram& d, const Move& m);
ChordDiagram replay(ChordDiagram d, const std::vector<Move>& moves);

/// `main(#i,#j; k1,k2)`, `boundary(#i..#j -> after x)`, `handle(#a#b#c#d -> after x)`.
std::string to_string(const Move& m);

/// Every non-identity single move applicable to `d`, in a fixed order.
std::vector<Move> candidate_moves(const ChordDiagram& d);

/// True iff both diagrams evaluate to the same surface.
bool equivalent(const ChordDiagram& d1, const ChordDiagram& d2);

/// Breadth-first search from d1 over candidate_moves, at most `max_depth`
/// moves. Frontiers are expanded in canonical-text order, so the result is
/// reproducible. Returns nullopt when d2 is not reached; in particular when
/// the diagrams are not equivalent, since every move preserves evaluation.
std::optional<std::vector<Move>> find_certificate(const ChordDiagram& d1, const ChordDiagram& d2,
                                                  int max_depth);

}  // namespace qo

#include "qo/rewrite.hpp"

#include <algorithm>
#include <map>

#include "qo/error.hpp"

namespace qo {

namespace {

std::vector<std::pair<Label, Label>> arc_pairs(const ChordDiagram& d) {
  std::vector<std::pair<Label, Label>> out;
  out.reserve(d.arc_count());
  for (const auto& a : d.arcs()) out.emplace_back(a.first, a.second);
  return out;
}

void rotate_left(std::vector<Label>::iterator first, std::vector<Label>::iterator last, int k) {
  const auto n = static_cast<int>(last - first);
  if (n == 0) return;
  const int shift = ((k % n) + n) % n;
  std::rotate(first, first + shift, last);
}

std::ptrdiff_t index_of(const std::vector<Label>& seq, const Label& x) {
  return std::find(seq.begin(), seq.end(), x) - seq.begin();
}

// Moves `segment` (a prefix of `seq`) to sit right after `after`.
ChordDiagram reinsert(const ChordDiagram& d, std::vector<Label> seq, std::size_t segment_len,
                      const Label& after) {
  std::vector<Label> segment(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(segment_len));
  std::vector<Label> rest(seq.begin() + static_cast<std::ptrdiff_t>(segment_len), seq.end());
  if (rest.empty()) {
    if (!d.base().contains(after)) {
      throw PreconditionError("'" + after.name() + "' does not occur on the circle");
    }
    return d;
  }
  const auto at = index_of(rest, after);
  if (at == static_cast<std::ptrdiff_t>(rest.size())) {
    throw PreconditionError(d.base().contains(after)
                                ? "insertion point '" + after.name() + "' lies inside the moved block"
                                : "'" + after.name() + "' does not occur on the circle");
  }
  rest.insert(rest.begin() + at + 1, segment.begin(), segment.end());
  return ChordDiagram(std::move(rest), arc_pairs(d));
}

}  // namespace

ChordDiagram main_lemma_move(const ChordDiagram& d, const Label& x, const Label& y, int k1, int k2) {
  if (!d.find_arc(x, y)) {
    throw PreconditionError("(" + x.name() + " " + y.name() + ") is not an arc of the diagram");
  }
  auto seq = d.base().read_from(x);
  const auto at_y = seq.begin() + index_of(seq, y);
  rotate_left(seq.begin() + 1, at_y, k1);
  rotate_left(at_y + 1, seq.end(), k2);
  return ChordDiagram(std::move(seq), arc_pairs(d));
}

ChordDiagram boundary_move(const ChordDiagram& d, const Label& from, const Label& to,
                           const Label& after) {
  if (!d.find_arc(from, to)) {
    throw PreconditionError("boundary ends " + from.name() + ".." + to.name() +
                            " are not joined by an arc");
  }
  auto seq = d.base().read_from(from);
  const auto len = static_cast<std::size_t>(index_of(seq, to)) + 1;
  return reinsert(d, std::move(seq), len, after);
}

ChordDiagram handle_move(const ChordDiagram& d, const std::array<Label, 4>& block,
                         const Label& after) {
  if (!d.base().contains(block[0])) {
    throw PreconditionError("'" + block[0].name() + "' does not occur on the circle");
  }
  auto seq = d.base().read_from(block[0]);
  const bool consecutive =
      seq.size() >= 4 && std::equal(block.begin(), block.end(), seq.begin());
  if (!consecutive || !d.find_arc(block[0], block[2]) || !d.find_arc(block[1], block[3])) {
    throw PreconditionError("not a handle: expected four consecutive tokens a b c d with arcs "
                            "{a,c} and {b,d}");
  }
  return reinsert(d, std::move(seq), 4, after);
}

ChordDiagram apply_move(const ChordDiagram& d, const Move& m) {
  return std::visit(
      [&](const auto& mv) -> ChordDiagram {
        using T = std::decay_t<decltype(mv)>;
        if constexpr (std::is_same_v<T, MainLemmaMove>) {
          return main_lemma_move(d, mv.x, mv.y, mv.k1, mv.k2);
        } else if constexpr (std::is_same_v<T, BoundaryMove>) {
          return boundary_move(d, mv.from, mv.to, mv.after);
        } else {
          return handle_move(d, mv.block, mv.after);
        }
      },
      m);
}

ChordDiagram replay(ChordDiagram d, const std::vector<Move>& moves) {
  for (const auto& m : moves) d = apply_move(d, m);
  return d;
}

std::string to_string(const Move& m) {
  return std::visit(
      [](const auto& mv) -> std::string {
        using T = std::decay_t<decltype(mv)>;
        if constexpr (std::is_same_v<T, MainLemmaMove>) {
          return "main(" + mv.x.name() + "," + mv.y.name() + "; " + std::to_string(mv.k1) + "," +
                 std::to_string(mv.k2) + ")";
        } else if constexpr (std::is_same_v<T, BoundaryMove>) {
          return "boundary(" + mv.from.name() + ".." + mv.to.name() + " -> after " +
                 mv.after.name() + ")";
        } else {
          return "handle(" + mv.block[0].name() + mv.block[1].name() + mv.block[2].name() +
                 mv.block[3].name() + " -> after " + mv.after.name() + ")";
        }
      },
      m);
}

std::vector<Move> candidate_moves(const ChordDiagram& d) {
  std::vector<Move> out;
  for (const auto& arc : d.arcs()) {
    const auto seq = d.base().read_from(arc.first);
    const auto at_y = index_of(seq, arc.second);
    const int n1 = static_cast<int>(at_y) - 1;
    const int n2 = static_cast<int>(seq.size()) - static_cast<int>(at_y) - 1;
    for (int k1 = 0; k1 < std::max(n1, 1); ++k1)
      for (int k2 = 0; k2 < std::max(n2, 1); ++k2)
        if (k1 != 0 || k2 != 0) out.push_back(MainLemmaMove{arc.first, arc.second, k1, k2});
  }
  for (const auto& arc : d.arcs()) {
    for (const auto& [from, to] : {std::pair{arc.first, arc.second}, std::pair{arc.second, arc.first}}) {
      const auto seq = d.base().read_from(from);
      const auto len = index_of(seq, to) + 1;
      // The last item precedes the segment already; inserting after it is the identity.
      for (auto it = seq.begin() + len; it + 1 < seq.end(); ++it) {
        out.push_back(BoundaryMove{from, to, *it});
      }
    }
  }
  for (const auto& start : d.base().items()) {
    if (!start.is_glue()) continue;
    const auto seq = d.base().read_from(start);
    if (seq.size() < 5) continue;
    if (!std::all_of(seq.begin(), seq.begin() + 4, [](const Label& l) { return l.is_glue(); })) continue;
    if (!d.find_arc(seq[0], seq[2]) || !d.find_arc(seq[1], seq[3])) continue;
    const std::array<Label, 4> block{seq[0], seq[1], seq[2], seq[3]};
    for (auto it = seq.begin() + 4; it + 1 < seq.end(); ++it) out.push_back(HandleMove{block, *it});
  }
  return out;
}

bool equivalent(const ChordDiagram& d1, const ChordDiagram& d2) {
  return evaluate(d1) == evaluate(d2);
}

std::optional<std::vector<Move>> find_certificate(const ChordDiagram& d1, const ChordDiagram& d2,
                                                  int max_depth) {
  if (d1 == d2) return std::vector<Move>{};
  // Moves keep the arcs and the item set, and preserve evaluation.
  if (d1.arcs() != d2.arcs() || d1.base().size() != d2.base().size()) return std::nullopt;
  if (!equivalent(d1, d2)) return std::nullopt;

  struct Visit {
    std::string parent;
    std::optional<Move> via;
  };
  std::map<std::string, Visit> seen;
  const std::string start_key = to_string(d1);
  const std::string goal_key = to_string(d2);
  seen.emplace(start_key, Visit{"", std::nullopt});

  auto path_to = [&](std::string key) {
    std::vector<Move> moves;
    while (key != start_key) {
      const auto& v = seen.at(key);
      moves.push_back(*v.via);
      key = v.parent;
    }
    std::reverse(moves.begin(), moves.end());
    return moves;
  };

  std::map<std::string, ChordDiagram> frontier{{start_key, d1}};
  for (int depth = 0; depth < max_depth && !frontier.empty(); ++depth) {
    std::map<std::string, ChordDiagram> next;
    for (const auto& [key, d] : frontier) {
      for (auto& m : candidate_moves(d)) {
        ChordDiagram out = apply_move(d, m);
        std::string out_key = to_string(out);
        if (seen.contains(out_key)) continue;
        seen.emplace(out_key, Visit{key, std::move(m)});
        if (out_key == goal_key) return path_to(out_key);
        next.emplace(std::move(out_key), std::move(out));
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

}  // namespace qo

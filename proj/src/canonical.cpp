#include "qo/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "qo/error.hpp"

namespace qo {

CanonicalExpression canonical_expression(std::vector<std::vector<Label>> tuples, int genus) {
  if (tuples.empty()) throw PreconditionError("a canonical expression needs at least one cycle");
  if (genus < 0) throw PreconditionError("geometric genus must be nonnegative");

  CanonicalExpression out;
  std::vector<Label> base = tuples[0];
  std::vector<std::pair<Label, Label>> arcs;
  int next = 1;
  for (std::size_t i = 1; i < tuples.size(); ++i) {
    const Label open = Label::glue(next++);
    const Label close = Label::glue(next++);
    base.push_back(open);
    base.insert(base.end(), tuples[i].begin(), tuples[i].end());
    base.push_back(close);
    arcs.emplace_back(open, close);
    out.separating.emplace_back(open, close);
  }
  for (int h = 0; h < genus; ++h) {
    const int k = next;
    next += 4;
    for (int j = 0; j < 4; ++j) base.push_back(Label::glue(k + j));
    Arc left(Label::glue(k), Label::glue(k + 2));
    Arc right(Label::glue(k + 1), Label::glue(k + 3));
    arcs.emplace_back(left.first, left.second);
    arcs.emplace_back(right.first, right.second);
    out.handles.emplace_back(std::move(left), std::move(right));
  }
  out.diagram = ChordDiagram(std::move(base), std::move(arcs));
  out.tuples = std::move(tuples);
  return out;
}

CanonicalExpression canonical_diagram(const Surface& q) {
  std::vector<std::vector<Label>> tuples;
  tuples.reserve(q.cycles().size());
  for (const auto& c : q.cycles()) tuples.push_back(c.items());
  return canonical_expression(std::move(tuples), q.genus());
}

std::vector<CanonicalExpression> all_canonical_diagrams(const Surface& q) {
  const auto& cycles = q.cycles();
  std::vector<std::size_t> order(cycles.size());
  std::iota(order.begin(), order.end(), std::size_t{0});

  std::vector<CanonicalExpression> out;
  do {
    // Odometer over one rotation offset per cycle.
    std::vector<std::size_t> shift(cycles.size(), 0);
    while (true) {
      std::vector<std::vector<Label>> tuples;
      tuples.reserve(cycles.size());
      for (std::size_t i = 0; i < order.size(); ++i) {
        auto items = cycles[order[i]].items();
        std::rotate(items.begin(), items.begin() + static_cast<std::ptrdiff_t>(shift[i]), items.end());
        tuples.push_back(std::move(items));
      }
      out.push_back(canonical_expression(std::move(tuples), q.genus()));

      std::size_t pos = 0;
      while (pos < shift.size()) {
        const std::size_t len = std::max<std::size_t>(1, cycles[order[pos]].size());
        if (++shift[pos] < len) break;
        shift[pos] = 0;
        ++pos;
      }
      if (pos == shift.size()) break;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

std::string to_string(const CanonicalExpression& e) {
  std::string out = to_string(e.diagram) + "\n";
  out += "structure: b=" + std::to_string(e.tuples.size()) +
         " g=" + std::to_string(e.handles.size()) + " tuples=";
  for (const auto& t : e.tuples) {
    out += "(";
    for (const auto& l : t) out += " " + l.name();
    out += " )";
  }
  out += " separating=";
  for (const auto& a : e.separating) out += "(" + a.first.name() + " " + a.second.name() + ")";
  out += " handles=";
  for (const auto& [l, r] : e.handles) {
    out += "[(" + l.first.name() + " " + l.second.name() + ")(" + r.first.name() + " " +
           r.second.name() + ")]";
  }
  return out;
}

}  // namespace qo

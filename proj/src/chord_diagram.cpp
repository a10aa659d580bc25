#include "qo/chord_diagram.hpp"

#include <algorithm>
#include <numeric>

#include "lexer.hpp"
#include "qo/error.hpp"

namespace qo {

Arc::Arc(Label a, Label b) : first(std::move(a)), second(std::move(b)) {
  if (!first.is_glue() || !second.is_glue()) {
    throw PreconditionError("arc endpoints must be glue tokens");
  }
  if (first == second) throw PreconditionError("arc joins '" + first.name() + "' to itself");
  if (second.glue_index() < first.glue_index()) std::swap(first, second);
}

ChordDiagram::ChordDiagram(std::vector<Label> base, std::vector<std::pair<Label, Label>> arcs) {
  std::vector<int> base_tokens;
  for (const auto& l : base)
    if (l.is_glue()) base_tokens.push_back(l.glue_index());
  base_ = canonical_rotation(std::move(base));

  arcs_.reserve(arcs.size());
  std::vector<int> arc_tokens;
  for (auto& [x, y] : arcs) {
    arcs_.emplace_back(std::move(x), std::move(y));
    arc_tokens.push_back(arcs_.back().first.glue_index());
    arc_tokens.push_back(arcs_.back().second.glue_index());
  }
  std::sort(arc_tokens.begin(), arc_tokens.end());
  if (auto it = std::adjacent_find(arc_tokens.begin(), arc_tokens.end()); it != arc_tokens.end()) {
    throw PreconditionError("token #" + std::to_string(*it) + " lies on more than one arc");
  }
  std::sort(base_tokens.begin(), base_tokens.end());
  for (int t : base_tokens) {
    if (!std::binary_search(arc_tokens.begin(), arc_tokens.end(), t)) {
      throw PreconditionError("token #" + std::to_string(t) + " unmatched");
    }
  }
  for (int t : arc_tokens) {
    if (!std::binary_search(base_tokens.begin(), base_tokens.end(), t)) {
      throw PreconditionError("arc endpoint #" + std::to_string(t) + " is not on the circle");
    }
  }
  std::sort(arcs_.begin(), arcs_.end(), [](const Arc& a, const Arc& b) {
    return a.first.glue_index() < b.first.glue_index();
  });
}

std::optional<Label> ChordDiagram::partner(const Label& token) const {
  for (const auto& arc : arcs_) {
    if (arc.first == token) return arc.second;
    if (arc.second == token) return arc.first;
  }
  return std::nullopt;
}

std::optional<std::size_t> ChordDiagram::find_arc(const Label& x, const Label& y) const {
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const auto& arc = arcs_[i];
    if ((arc.first == x && arc.second == y) || (arc.first == y && arc.second == x)) return i;
  }
  return std::nullopt;
}

std::vector<Label> ChordDiagram::user_labels() const {
  std::vector<Label> out;
  for (const auto& l : base_.items())
    if (!l.is_glue()) out.push_back(l);
  std::sort(out.begin(), out.end());
  return out;
}

Surface evaluate(const ChordDiagram& d, const QoRules& rules) {
  Surface q({d.base()}, 0);
  for (const auto& arc : d.arcs()) q = rules.self_glue(q, arc.first, arc.second);
  return q;
}

Surface evaluate_in_order(const ChordDiagram& d, std::span<const std::size_t> order,
                          const QoRules& rules) {
  std::vector<std::size_t> check(order.begin(), order.end());
  std::sort(check.begin(), check.end());
  std::vector<std::size_t> expected(d.arc_count());
  std::iota(expected.begin(), expected.end(), std::size_t{0});
  if (check != expected) throw PreconditionError("arc order is not a permutation of the arcs");
  Surface q({d.base()}, 0);
  for (std::size_t i : order) q = rules.self_glue(q, d.arcs()[i].first, d.arcs()[i].second);
  return q;
}

ChordDiagram rename_diagram(const ChordDiagram& d, const Renaming& rho) {
  std::vector<Label> base;
  base.reserve(d.base().size());
  for (const auto& l : d.base().items()) {
    base.push_back(rho(l));
    if (l.is_glue() != base.back().is_glue()) {
      throw PreconditionError("renaming must map glue tokens to glue tokens and labels to labels");
    }
  }
  std::vector<std::pair<Label, Label>> arcs;
  for (const auto& arc : d.arcs()) arcs.emplace_back(rho(arc.first), rho(arc.second));
  return ChordDiagram(std::move(base), std::move(arcs));
}

std::string to_string(const ChordDiagram& d) {
  // Read from the smallest user label when there is one.
  const auto& items = d.base().items();
  std::size_t start = 0;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (!items[i].is_glue() && (items[start].is_glue() || items[i] < items[start])) start = i;
  }
  std::string out = "[";
  for (std::size_t k = 0; k < items.size(); ++k) out += " " + items[(start + k) % items.size()].name();
  out += " ;";
  for (const auto& arc : d.arcs()) out += " (" + arc.first.name() + " " + arc.second.name() + ")";
  out += " ]";
  return out;
}

ChordDiagram parse_diagram(std::string_view text) {
  detail::Lexer lex(text, /*brackets=*/true);
  lex.expect('[');
  std::vector<Label> base;
  std::vector<detail::Token> base_tokens;
  while (!lex.accept(';')) {
    const auto tok = lex.next();
    if (tok.kind == detail::TokenKind::end) lex.fail_at(tok, "expected ';' after the circle items");
    if (tok.kind == detail::TokenKind::punct) lex.fail_at(tok, "unexpected '" + tok.text + "'");
    for (const auto& seen : base_tokens) {
      if (seen.text == tok.text) lex.fail_at(tok, "repeated item '" + tok.text + "'");
    }
    base_tokens.push_back(tok);
    base.push_back(Label(tok.text));
  }

  std::vector<std::pair<Label, Label>> arcs;
  std::vector<detail::Token> arc_tokens;
  while (!lex.accept(']')) {
    lex.expect('(');
    detail::Token ends[2];
    for (auto& end : ends) {
      end = lex.next();
      if (end.kind != detail::TokenKind::glue) lex.fail_at(end, "arc endpoints must be glue tokens #k");
      const bool on_circle = std::any_of(base_tokens.begin(), base_tokens.end(),
                                         [&](const auto& t) { return t.text == end.text; });
      if (!on_circle) lex.fail_at(end, "arc endpoint " + end.text + " is not on the circle");
      for (const auto& seen : arc_tokens) {
        if (seen.text == end.text) lex.fail_at(end, "token " + end.text + " lies on more than one arc");
      }
      arc_tokens.push_back(end);
    }
    lex.expect(')');
    arcs.emplace_back(Label(ends[0].text), Label(ends[1].text));
  }
  if (!lex.at_end()) lex.fail("trailing input after diagram");
  for (const auto& t : base_tokens) {
    if (t.kind != detail::TokenKind::glue) continue;
    const bool matched = std::any_of(arc_tokens.begin(), arc_tokens.end(),
                                     [&](const auto& a) { return a.text == t.text; });
    if (!matched) lex.fail_at(t, "token " + t.text + " unmatched");
  }
  return ChordDiagram(std::move(base), std::move(arcs));
}

std::string render_dot(const ChordDiagram& d) {
  const auto& items = d.base().items();
  std::string out = "graph chord_diagram {\n";
  if (items.empty()) return out + "}\n";
  out += "  layout=circo;\n  node [shape=circle];\n";
  auto node = [](std::size_t i) { return "n" + std::to_string(i); };
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto& l = items[i];
    out += "  " + node(i) + " [label=\"" + (l.is_glue() ? std::string() : l.name()) + "\"" +
           (l.is_glue() ? ", shape=point" : "") + "];\n";
  }
  if (items.size() > 1) {
    for (std::size_t i = 0; i < items.size(); ++i) {
      const std::size_t j = (i + 1) % items.size();
      if (items.size() == 2 && j == 0) break;
      out += "  " + node(i) + " -- " + node(j) + " [style=bold];\n";
    }
  }
  for (const auto& arc : d.arcs()) {
    out += "  " + node(*d.base().position(arc.first)) + " -- " +
           node(*d.base().position(arc.second)) + " [style=dashed, color=red];\n";
  }
  return out + "}\n";
}

}  // namespace qo

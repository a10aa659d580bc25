#include "qo/surface.hpp"

#include <algorithm>

#include "lexer.hpp"
#include "qo/error.hpp"

namespace qo {

Surface::Surface(std::vector<CyclicWord> cycles, int genus)
    : cycles_(std::move(cycles)), genus_(genus) {
  if (cycles_.empty()) throw PreconditionError("a surface needs at least one boundary cycle");
  if (genus_ < 0) throw PreconditionError("geometric genus must be nonnegative");
  std::sort(cycles_.begin(), cycles_.end());
  std::vector<Label> all;
  all.reserve(label_count());
  for (const auto& c : cycles_) all.insert(all.end(), c.items().begin(), c.items().end());
  if (!all_distinct(all)) throw PreconditionError("repeated label across boundary cycles");
}

std::vector<Label> Surface::labels() const {
  std::vector<Label> all;
  all.reserve(label_count());
  for (const auto& c : cycles_) all.insert(all.end(), c.items().begin(), c.items().end());
  std::sort(all.begin(), all.end());
  return all;
}

std::size_t Surface::label_count() const {
  std::size_t n = 0;
  for (const auto& c : cycles_) n += c.size();
  return n;
}

bool Surface::contains(const Label& x) const { return cycle_of(x) >= 0; }

int Surface::cycle_of(const Label& x) const {
  for (std::size_t i = 0; i < cycles_.size(); ++i) {
    if (cycles_[i].contains(x)) return static_cast<int>(i);
  }
  return -1;
}

std::strong_ordering operator<=>(const Surface& a, const Surface& b) {
  if (auto c = a.genus_ <=> b.genus_; c != 0) return c;
  if (auto c = a.cycles_.size() <=> b.cycles_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.cycles_.begin(), a.cycles_.end(),
                                                b.cycles_.begin(), b.cycles_.end());
}

Surface make_surface(std::vector<std::vector<Label>> cycles, int genus) {
  std::vector<CyclicWord> words;
  words.reserve(cycles.size());
  for (auto& c : cycles) words.push_back(canonical_rotation(std::move(c)));
  return Surface(std::move(words), genus);
}

std::string_view to_string(RuleMutation m) {
  switch (m) {
    case RuleMutation::none:
      return "none";
    case RuleMutation::merge_drops_genus:
      return "merge-drops-genus";
    case RuleMutation::split_swaps_blocks:
      return "split-swaps-blocks";
    case RuleMutation::compose_drops_genus:
      return "compose-drops-genus";
  }
  return "none";
}

RuleMutation parse_mutation(std::string_view name) {
  for (auto m : {RuleMutation::none, RuleMutation::merge_drops_genus,
                 RuleMutation::split_swaps_blocks, RuleMutation::compose_drops_genus}) {
    if (to_string(m) == name) return m;
  }
  throw PreconditionError("unknown rule mutation '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------

namespace {

std::string missing(const Label& x, const Surface& q) {
  return "'" + x.name() + "' does not occur in " + to_string(q);
}

}  // namespace

Surface QoRules::rename(const Surface& q, const Renaming& rho) const {
  std::vector<CyclicWord> cycles;
  cycles.reserve(q.cycles().size());
  for (const auto& c : q.cycles()) cycles.push_back(rename_word(c, rho));
  return Surface(std::move(cycles), q.genus());
}

Surface QoRules::compose(const Surface& q, const Label& a, const Surface& other,
                         const Label& b) const {
  const int ia = q.cycle_of(a);
  if (ia < 0) throw PreconditionError(missing(a, q));
  const int ib = other.cycle_of(b);
  if (ib < 0) throw PreconditionError(missing(b, other));
  for (const auto& c : q.cycles()) {
    for (const auto& l : c.items()) {
      if (other.contains(l)) throw PreconditionError("label collision on '" + l.name() + "'");
    }
  }

  std::vector<CyclicWord> cycles;
  cycles.reserve(q.cycles().size() + other.cycles().size() - 1);
  std::vector<Label> joined = q.cycles()[ia].read_from(a);
  joined.erase(joined.begin());
  const auto tail = other.cycles()[ib].read_from(b);
  joined.insert(joined.end(), tail.begin() + 1, tail.end());
  cycles.push_back(canonical_rotation(std::move(joined)));
  for (int i = 0; i < q.boundary_count(); ++i)
    if (i != ia) cycles.push_back(q.cycles()[i]);
  for (int i = 0; i < other.boundary_count(); ++i)
    if (i != ib) cycles.push_back(other.cycles()[i]);

  const int genus = mutation == RuleMutation::compose_drops_genus ? q.genus()
                                                                  : q.genus() + other.genus();
  return Surface(std::move(cycles), genus);
}

Surface QoRules::self_glue(const Surface& q, const Label& a, const Label& b) const {
  if (a == b) throw PreconditionError("cannot self-glue '" + a.name() + "' to itself");
  const int ia = q.cycle_of(a);
  if (ia < 0) throw PreconditionError(missing(a, q));
  const int ib = q.cycle_of(b);
  if (ib < 0) throw PreconditionError(missing(b, q));

  std::vector<CyclicWord> cycles;
  cycles.reserve(q.cycles().size() + 1);
  for (int i = 0; i < q.boundary_count(); ++i)
    if (i != ia && i != ib) cycles.push_back(q.cycles()[i]);

  if (ia == ib) {
    // <a A b B>
    const auto word = q.cycles()[ia].read_from(a);
    const auto b_at = std::find(word.begin(), word.end(), b);
    std::vector<Label> block_a(word.begin() + 1, b_at);
    std::vector<Label> block_b(b_at + 1, word.end());
    if (mutation == RuleMutation::split_swaps_blocks) std::swap(block_a, block_b);
    cycles.push_back(canonical_rotation(std::move(block_b)));
    cycles.push_back(canonical_rotation(std::move(block_a)));
    return Surface(std::move(cycles), q.genus());
  }

  // <a A>, <b B> -> <B A>
  const auto word_a = q.cycles()[ia].read_from(a);
  auto merged = q.cycles()[ib].read_from(b);
  merged.erase(merged.begin());
  merged.insert(merged.end(), word_a.begin() + 1, word_a.end());
  cycles.push_back(canonical_rotation(std::move(merged)));
  const int genus = mutation == RuleMutation::merge_drops_genus ? q.genus() : q.genus() + 1;
  return Surface(std::move(cycles), genus);
}

Surface qo_rename(const Surface& q, const Renaming& rho) { return QoRules{}.rename(q, rho); }

Surface qo_compose(const Surface& q, const Label& a, const Surface& other, const Label& b) {
  return QoRules{}.compose(q, a, other, b);
}

Surface qo_self_glue(const Surface& q, const Label& a, const Label& b) {
  return QoRules{}.self_glue(q, a, b);
}

bool surfaces_equal(const Surface& q1, const Surface& q2) { return q1 == q2; }

// ---------------------------------------------------------------------------

std::string to_string(const Surface& q) {
  std::string out = "{";
  for (const auto& c : q.cycles()) {
    out += ' ';
    out += to_string(c);
  }
  out += " }^" + std::to_string(q.genus());
  return out;
}

Surface parse_surface(std::string_view text, bool allow_glue) {
  detail::Lexer lex(text);
  lex.expect('{');
  std::vector<CyclicWord> cycles;
  std::vector<std::string> seen;
  while (!lex.accept('}')) {
    if (lex.at_end()) lex.fail("unterminated surface; expected '}'");
    lex.expect('(');
    std::vector<Label> items;
    while (!lex.accept(')')) {
      const auto tok = lex.next();
      if (tok.kind == detail::TokenKind::glue && !allow_glue) {
        lex.fail_at(tok, "glue token '" + tok.text + "' is reserved and not allowed here");
      }
      if (tok.kind != detail::TokenKind::label && tok.kind != detail::TokenKind::glue) {
        lex.fail_at(tok, tok.kind == detail::TokenKind::end ? "unterminated cycle; expected ')'"
                                                            : "unexpected '" + tok.text + "'");
      }
      if (std::find(seen.begin(), seen.end(), tok.text) != seen.end()) {
        lex.fail_at(tok, "repeated label '" + tok.text + "'");
      }
      seen.push_back(tok.text);
      items.push_back(Label(tok.text));
    }
    cycles.push_back(canonical_rotation(std::move(items)));
  }
  int genus = 0;
  if (lex.accept('^')) {
    const auto tok = lex.next();
    const bool numeric = tok.kind == detail::TokenKind::label && tok.text.size() <= 9 &&
                         std::all_of(tok.text.begin(), tok.text.end(),
                                     [](char c) { return c >= '0' && c <= '9'; });
    if (!numeric) lex.fail_at(tok, "expected a nonnegative genus after '^'");
    genus = std::stoi(tok.text);
  }
  if (!lex.at_end()) lex.fail("trailing input after surface");
  if (cycles.empty()) lex.fail_at({detail::TokenKind::end, "", 0}, "a surface needs at least one boundary cycle");
  return Surface(std::move(cycles), genus);
}

nlohmann::json to_json(const Surface& q) {
  nlohmann::json cycles = nlohmann::json::array();
  for (const auto& c : q.cycles()) {
    nlohmann::json word = nlohmann::json::array();
    for (const auto& l : c.items()) word.push_back(l.name());
    cycles.push_back(std::move(word));
  }
  return {{"cycles", std::move(cycles)}, {"g", q.genus()}};
}

Surface surface_from_json(const nlohmann::json& j) {
  try {
    std::vector<std::vector<Label>> cycles;
    for (const auto& word : j.at("cycles")) {
      std::vector<Label> items;
      for (const auto& name : word) items.push_back(Label(name.get<std::string>()));
      cycles.push_back(std::move(items));
    }
    return make_surface(std::move(cycles), j.at("g").get<int>());
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("malformed surface JSON: ") + e.what());
  }
}

}  // namespace qo

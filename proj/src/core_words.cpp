#include "qo/core_words.hpp"

#include <algorithm>
#include <cctype>

#include "lexer.hpp"
#include "qo/error.hpp"

namespace qo {

bool is_reserved_char(char c) {
  switch (c) {
    case '(':
    case ')':
    case '{':
    case '}':
    case '^':
    case '#':
    case ';':
    case ',':
      return true;
    default:
      return false;
  }
}

namespace {

bool is_glue_name(std::string_view name) {
  if (name.size() < 2 || name[0] != '#' || name[1] == '0') return false;
  return std::all_of(name.begin() + 1, name.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

bool is_user_name(std::string_view name) {
  if (name.empty()) return false;
  return std::none_of(name.begin(), name.end(), [](char c) {
    const auto u = static_cast<unsigned char>(c);
    return std::isspace(u) || std::iscntrl(u) || is_reserved_char(c);
  });
}

}  // namespace

Label::Label(std::string name) : name_(std::move(name)) {
  if (!is_glue_name(name_) && !is_user_name(name_)) {
    throw PreconditionError("invalid label '" + name_ + "'");
  }
}

Label Label::user(std::string name) {
  if (!is_user_name(name)) {
    throw PreconditionError("invalid label '" + name + "'" +
                            (name.starts_with('#') ? " ('#' names are reserved for glue tokens)"
                                                   : ""));
  }
  return Label(Unchecked{}, std::move(name));
}

Label Label::glue(int index) {
  if (index < 1) throw PreconditionError("glue token index must be positive");
  return Label(Unchecked{}, "#" + std::to_string(index));
}

int Label::glue_index() const {
  if (!is_glue()) return 0;
  return std::stoi(name_.substr(1));
}

// ---------------------------------------------------------------------------

namespace {

bool less_by_first(const std::pair<Label, Label>& a, const std::pair<Label, Label>& b) {
  return a.first < b.first;
}

}  // namespace

bool all_distinct(std::span<const Label> labels) {
  if (labels.size() <= 8) {
    for (std::size_t i = 0; i < labels.size(); ++i)
      for (std::size_t j = i + 1; j < labels.size(); ++j)
        if (labels[i] == labels[j]) return false;
    return true;
  }
  std::vector<Label> sorted(labels.begin(), labels.end());
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

Renaming::Renaming(std::vector<std::pair<Label, Label>> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end(), less_by_first);
  for (std::size_t i = 1; i < pairs_.size(); ++i) {
    if (pairs_[i - 1].first == pairs_[i].first) {
      throw PreconditionError("renaming maps '" + pairs_[i].first.name() + "' twice");
    }
  }
  std::vector<Label> image;
  image.reserve(pairs_.size());
  for (const auto& [from, to] : pairs_) image.push_back(to);
  std::sort(image.begin(), image.end());
  if (auto it = std::adjacent_find(image.begin(), image.end()); it != image.end()) {
    throw PreconditionError("renaming is not injective: '" + it->name() + "' hit twice");
  }
}

Renaming::Renaming(std::vector<std::pair<Label, Label>> pairs, std::span<const Label> codomain)
    : Renaming(std::move(pairs)) {
  std::vector<Label> expected(codomain.begin(), codomain.end());
  std::sort(expected.begin(), expected.end());
  if (this->codomain() != expected) {
    throw PreconditionError("renaming is not a bijection onto the declared codomain");
  }
}

Renaming Renaming::identity(std::span<const Label> labels) {
  std::vector<std::pair<Label, Label>> pairs;
  pairs.reserve(labels.size());
  for (const auto& l : labels) pairs.emplace_back(l, l);
  return Renaming(std::move(pairs));
}

std::optional<Label> Renaming::find(const Label& x) const {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), x,
                             [](const auto& p, const Label& key) { return p.first < key; });
  if (it == pairs_.end() || it->first != x) return std::nullopt;
  return it->second;
}

const Label& Renaming::operator()(const Label& x) const {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), x,
                             [](const auto& p, const Label& key) { return p.first < key; });
  if (it == pairs_.end() || it->first != x) {
    throw PreconditionError("label '" + x.name() + "' is outside the renaming's domain");
  }
  return it->second;
}

std::vector<Label> Renaming::domain() const {
  std::vector<Label> out;
  out.reserve(pairs_.size());
  for (const auto& p : pairs_) out.push_back(p.first);
  return out;
}

std::vector<Label> Renaming::codomain() const {
  std::vector<Label> out;
  out.reserve(pairs_.size());
  for (const auto& p : pairs_) out.push_back(p.second);
  std::sort(out.begin(), out.end());
  return out;
}

Renaming Renaming::inverse() const {
  std::vector<std::pair<Label, Label>> flipped;
  flipped.reserve(pairs_.size());
  for (const auto& [from, to] : pairs_) flipped.emplace_back(to, from);
  return Renaming(std::move(flipped));
}

Renaming Renaming::extended_by_identity(std::span<const Label> extra) const {
  auto pairs = pairs_;
  for (const auto& l : extra) pairs.emplace_back(l, l);
  return Renaming(std::move(pairs));
}

Renaming Renaming::restricted_to(std::span<const Label> labels) const {
  std::vector<std::pair<Label, Label>> pairs;
  pairs.reserve(labels.size());
  for (const auto& l : labels) pairs.emplace_back(l, (*this)(l));
  return Renaming(std::move(pairs));
}

Renaming operator*(const Renaming& rho, const Renaming& sigma) {
  std::vector<std::pair<Label, Label>> pairs;
  pairs.reserve(sigma.size());
  for (const auto& [from, mid] : sigma.pairs()) pairs.emplace_back(from, rho(mid));
  return Renaming(std::move(pairs));
}

// ---------------------------------------------------------------------------

std::optional<std::size_t> CyclicWord::position(const Label& x) const {
  auto it = std::find(items_.begin(), items_.end(), x);
  if (it == items_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - items_.begin());
}

std::vector<Label> CyclicWord::read_from(const Label& x) const {
  const auto pos = position(x);
  if (!pos) throw PreconditionError("label '" + x.name() + "' does not occur in " + to_string(*this));
  std::vector<Label> out;
  out.reserve(items_.size());
  out.insert(out.end(), items_.begin() + static_cast<std::ptrdiff_t>(*pos), items_.end());
  out.insert(out.end(), items_.begin(), items_.begin() + static_cast<std::ptrdiff_t>(*pos));
  return out;
}

std::strong_ordering operator<=>(const CyclicWord& a, const CyclicWord& b) {
  if (auto c = a.items_.size() <=> b.items_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.items_.begin(), a.items_.end(),
                                                b.items_.begin(), b.items_.end());
}

CyclicWord canonical_rotation(std::vector<Label> items) {
  if (!all_distinct(items)) {
    throw PreconditionError("repeated label in cyclic word");
  }
  const std::size_t n = items.size();
  if (n < 2) return CyclicWord(std::move(items));
  // Labels are distinct, so the minimal rotation starts at the minimal label.
  const auto min_it = std::min_element(items.begin(), items.end());
  std::rotate(items.begin(), min_it, items.end());
  return CyclicWord(std::move(items));
}

CyclicWord rename_word(const CyclicWord& w, const Renaming& rho) {
  std::vector<Label> out;
  out.reserve(w.size());
  for (const auto& l : w.items()) out.push_back(rho(l));
  return canonical_rotation(std::move(out));
}

std::string to_string(const CyclicWord& w) {
  std::string out = "(";
  for (const auto& l : w.items()) {
    out += ' ';
    out += l.name();
  }
  out += " )";
  return out;
}

CyclicWord parse_word(std::string_view text) {
  detail::Lexer lex(text);
  lex.expect('(');
  std::vector<Label> items;
  std::vector<std::size_t> offsets;
  while (!lex.accept(')')) {
    const auto tok = lex.next();
    if (tok.kind == detail::TokenKind::glue) {
      lex.fail_at(tok, "glue token '" + tok.text + "' is reserved and not allowed here");
    }
    if (tok.kind != detail::TokenKind::label) {
      lex.fail_at(tok, tok.kind == detail::TokenKind::end ? "unterminated word; expected ')'"
                                                          : "unexpected '" + tok.text + "'");
    }
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (items[i].name() == tok.text) lex.fail_at(tok, "repeated label '" + tok.text + "'");
    }
    items.push_back(Label::user(tok.text));
  }
  if (!lex.at_end()) lex.fail("trailing input after word");
  return canonical_rotation(std::move(items));
}

Renaming parse_renaming(std::string_view text) {
  std::vector<std::pair<Label, Label>> pairs;
  std::size_t start = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view entry = trim(text.substr(start, end - start));
    if (!entry.empty()) {
      const std::size_t arrow = entry.find("->");
      const std::size_t entry_offset = static_cast<std::size_t>(entry.data() - text.data());
      if (arrow == std::string_view::npos) {
        throw detail::parse_error_at(text, entry_offset, "expected 'from->to'");
      }
      const auto from = trim(entry.substr(0, arrow));
      const auto to = trim(entry.substr(arrow + 2));
      try {
        pairs.emplace_back(Label::user(std::string(from)), Label::user(std::string(to)));
      } catch (const PreconditionError& e) {
        throw detail::parse_error_at(text, entry_offset, e.what());
      }
    } else if (end != text.size()) {
      throw detail::parse_error_at(text, start, "empty renaming entry");
    }
    start = end + 1;
  }
  try {
    return Renaming(std::move(pairs));
  } catch (const PreconditionError& e) {
    throw detail::parse_error_at(text, 0, e.what());
  }
}

std::string to_string(const Renaming& rho) {
  std::string out;
  for (const auto& [from, to] : rho.pairs()) {
    if (!out.empty()) out += ", ";
    out += from.name() + "->" + to.name();
  }
  return out;
}

}  // namespace qo

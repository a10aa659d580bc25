#include "qo/envelope.hpp"

#include <algorithm>

#include "qo/error.hpp"

namespace qo {

TerminalPoint TerminalTarget::rename(const TerminalPoint& p, const Renaming& rho) const {
  TerminalPoint out{{}, p.grade};
  out.labels.reserve(p.labels.size());
  for (const auto& l : p.labels) out.labels.push_back(rho(l));
  std::sort(out.labels.begin(), out.labels.end());
  return out;
}

TerminalPoint TerminalTarget::compose(const TerminalPoint& p, const Label& a,
                                      const TerminalPoint& other, const Label& b) const {
  if (!std::binary_search(p.labels.begin(), p.labels.end(), a)) {
    throw PreconditionError("'" + a.name() + "' is not a label of " + describe(p));
  }
  if (!std::binary_search(other.labels.begin(), other.labels.end(), b)) {
    throw PreconditionError("'" + b.name() + "' is not a label of " + describe(other));
  }
  TerminalPoint out{{}, p.grade + other.grade};
  for (const auto& l : p.labels) {
    if (std::binary_search(other.labels.begin(), other.labels.end(), l)) {
      throw PreconditionError("label collision on '" + l.name() + "'");
    }
    if (l != a) out.labels.push_back(l);
  }
  for (const auto& l : other.labels)
    if (l != b) out.labels.push_back(l);
  std::sort(out.labels.begin(), out.labels.end());
  return out;
}

TerminalPoint TerminalTarget::contract(const TerminalPoint& p, const Label& a, const Label& b) const {
  if (a == b) throw PreconditionError("cannot contract '" + a.name() + "' with itself");
  for (const auto& x : {a, b}) {
    if (!std::binary_search(p.labels.begin(), p.labels.end(), x)) {
      throw PreconditionError("'" + x.name() + "' is not a label of " + describe(p));
    }
  }
  TerminalPoint out{{}, p.grade + 1};
  for (const auto& l : p.labels)
    if (l != a && l != b) out.labels.push_back(l);
  return out;
}

std::string TerminalTarget::describe(const TerminalPoint& p) const {
  std::string out = "pt{";
  for (std::size_t i = 0; i < p.labels.size(); ++i) out += (i ? " " : "") + p.labels[i].name();
  return out + "; G=" + std::to_string(p.grade) + "}";
}

AssMorphism<QoTarget> inclusion_morphism() {
  return [](const AssElement& x) { return include_in_qo(x); };
}

AssMorphism<TerminalTarget> terminal_morphism() {
  return [](const AssElement& x) {
    std::vector<Label> labels = x.word().items();
    std::sort(labels.begin(), labels.end());
    return TerminalPoint{std::move(labels), 0};
  };
}

AssMorphism<QoTarget> shifted_inclusion_morphism() {
  return [](const AssElement& x) {
    std::vector<Label> sorted = x.word().items();
    std::sort(sorted.begin(), sorted.end());
    std::vector<std::pair<Label, Label>> pairs;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      pairs.emplace_back(sorted[i], sorted[(i + 1) % sorted.size()]);
    }
    return include_in_qo(ass_rename(x, Renaming(std::move(pairs))));
  };
}

}  // namespace qo

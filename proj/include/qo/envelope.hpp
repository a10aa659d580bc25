#pragma once

#include <concepts>
#include <functional>
#include <string>
#include <vector>

#include "qo/ass_operad.hpp"
#include "qo/canonical.hpp"
#include "qo/core_words.hpp"
#include "qo/surface.hpp"

namespace qo {

/// A modular operad in sets, seen through its operations. Elements carry a
/// label set and a grade G; compose adds grades and contract raises G by one.
template <class T>
concept ModularOperad = requires(const T& op, const typename T::Element& e, const Renaming& rho,
                                 const Label& a) {
  { op.rename(e, rho) } -> std::same_as<typename T::Element>;
  { op.compose(e, a, e, a) } -> std::same_as<typename T::Element>;
  { op.contract(e, a, a) } -> std::same_as<typename T::Element>;
  { op.labels(e) } -> std::same_as<std::vector<Label>>;
  { op.grade(e) } -> std::convertible_to<int>;
  { op.equal(e, e) } -> std::convertible_to<bool>;
  { op.describe(e) } -> std::convertible_to<std::string>;
};

/// QO itself, optionally with mutated rules.
struct QoTarget {
  using Element = Surface;
  QoRules rules;

  Surface rename(const Surface& q, const Renaming& rho) const { return rules.rename(q, rho); }
  Surface compose(const Surface& q, const Label& a, const Surface& other, const Label& b) const {
    return rules.compose(q, a, other, b);
  }
  Surface contract(const Surface& q, const Label& a, const Label& b) const {
    return rules.self_glue(q, a, b);
  }
  std::vector<Label> labels(const Surface& q) const { return q.labels(); }
  int grade(const Surface& q) const { return q.grade(); }
  bool equal(const Surface& x, const Surface& y) const { return x == y; }
  std::string describe(const Surface& q) const { return to_string(q); }
};

/// The terminal modular operad: exactly one element per (label set, grade).
struct TerminalPoint {
  std::vector<Label> labels;  // sorted
  int grade = 0;
  friend bool operator==(const TerminalPoint&, const TerminalPoint&) = default;
};

struct TerminalTarget {
  using Element = TerminalPoint;

  TerminalPoint rename(const TerminalPoint& p, const Renaming& rho) const;
  TerminalPoint compose(const TerminalPoint& p, const Label& a, const TerminalPoint& other,
                        const Label& b) const;
  TerminalPoint contract(const TerminalPoint& p, const Label& a, const Label& b) const;
  std::vector<Label> labels(const TerminalPoint& p) const { return p.labels; }
  int grade(const TerminalPoint& p) const { return p.grade; }
  bool equal(const TerminalPoint& x, const TerminalPoint& y) const { return x == y; }
  std::string describe(const TerminalPoint& p) const;
};

static_assert(ModularOperad<QoTarget>);
static_assert(ModularOperad<TerminalTarget>);

/// A map Ass -> target that should be a morphism of cyclic operads.
template <ModularOperad T>
using AssMorphism = std::function<typename T::Element(const AssElement&)>;

/// The canonical inclusion Ass -> QO.
AssMorphism<QoTarget> inclusion_morphism();
/// The unique map to the terminal operad.
AssMorphism<TerminalTarget> terminal_morphism();
/// Not a morphism: the inclusion followed by the renaming that sends the i-th
/// smallest label to the (i+1)-th (cyclically). Label sets are preserved but
/// equivariance fails.
AssMorphism<QoTarget> shifted_inclusion_morphism();

/// f~ along a given canonical expression: apply f to the base word, then
/// contract every arc in order.
template <ModularOperad T>
typename T::Element tilde_f(const T& target, const AssMorphism<T>& f, const CanonicalExpression& e) {
  auto value = f(AssElement(e.diagram.base()));
  for (const auto& arc : e.diagram.arcs()) value = target.contract(value, arc.first, arc.second);
  return value;
}

/// f~(q) along the default canonical expression of q.
template <ModularOperad T>
typename T::Element tilde_f(const T& target, const AssMorphism<T>& f, const Surface& q) {
  return tilde_f(target, f, canonical_diagram(q));
}

}  // namespace qo

#pragma once

#include "qo/core_words.hpp"

namespace qo {

class Surface;

/// An element of the cyclic operad Ass: a cyclic order on its label set.
/// The empty word and singleton words are admitted.
class AssElement {
 public:
  AssElement() = default;
  explicit AssElement(CyclicWord word) : word_(std::move(word)) {}

  const CyclicWord& word() const { return word_; }

  friend bool operator==(const AssElement&, const AssElement&) = default;
  friend auto operator<=>(const AssElement&, const AssElement&) = default;

 private:
  CyclicWord word_;
};

/// Splice: x read as (a P), y read as (b Q), result (P Q).
/// Label sets of x and y must be disjoint.
AssElement ass_compose(const AssElement& x, const Label& a, const AssElement& y, const Label& b);

AssElement ass_rename(const AssElement& x, const Renaming& rho);

/// {x}^0
Surface include_in_qo(const AssElement& x);

}  // namespace qo

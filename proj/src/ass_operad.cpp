#include "qo/ass_operad.hpp"

#include "qo/error.hpp"
#include "qo/surface.hpp"

namespace qo {

AssElement ass_compose(const AssElement& x, const Label& a, const AssElement& y, const Label& b) {
  if (!x.word().contains(a)) {
    throw PreconditionError("'" + a.name() + "' does not occur in " + to_string(x.word()));
  }
  if (!y.word().contains(b)) {
    throw PreconditionError("'" + b.name() + "' does not occur in " + to_string(y.word()));
  }
  for (const auto& l : x.word().items()) {
    if (y.word().contains(l)) {
      throw PreconditionError("label collision on '" + l.name() + "'");
    }
  }
  std::vector<Label> spliced = x.word().read_from(a);
  spliced.erase(spliced.begin());
  const auto tail = y.word().read_from(b);
  spliced.insert(spliced.end(), tail.begin() + 1, tail.end());
  return AssElement(canonical_rotation(std::move(spliced)));
}

AssElement ass_rename(const AssElement& x, const Renaming& rho) {
  return AssElement(rename_word(x.word(), rho));
}

Surface include_in_qo(const AssElement& x) { return Surface({x.word()}, 0); }

}  // namespace qo

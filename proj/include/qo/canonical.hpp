#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qo/chord_diagram.hpp"
#include "qo/surface.hpp"

namespace qo {

/// A surface written as self-gluings of one cyclic word:
///
///   C1 #1 C2 #2 #3 C3 #4 ... #(2b-3) Cb #(2b-2) #(2b-1) ... #(2G)
///
/// with separating arcs (#1 #2), (#3 #4), ..., (#(2b-3) #(2b-2)) and, for each
/// handle, the crossed pair (#k #(k+2)), (#(k+1) #(k+3)) on four consecutive
/// tokens starting at k = 2b-1, 2b+3, ...
struct CanonicalExpression {
  ChordDiagram diagram;
  /// The representing tuples C1..Cb in the chosen order and rotation.
  std::vector<std::vector<Label>> tuples;
  std::vector<Arc> separating;
  std::vector<std::pair<Arc, Arc>> handles;
};

/// Builds the expression for the given ordered tuples and genus.
CanonicalExpression canonical_expression(std::vector<std::vector<Label>> tuples, int genus);

/// Default choice: cycles in the surface's sorted order, each in canonical
/// rotation, tokens #1..#(2G).
CanonicalExpression canonical_diagram(const Surface& q);

/// Every ordering of the cycles (all b! index orders, so repeated empty cycles
/// give repeated expressions) times every rotation of every cycle. Token
/// names are fixed to #1..#(2G).
std::vector<CanonicalExpression> all_canonical_diagrams(const Surface& q);

/// The diagram line followed by a structure annotation line.
std::string to_string(const CanonicalExpression& e);

}  // namespace qo

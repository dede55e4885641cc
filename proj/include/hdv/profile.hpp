#pragma once

#include <string>

#include "hdv/algebra.hpp"
#include "hdv/congruence.hpp"

namespace hdv {

struct ElementProfile {
  ElementSet open;
  ElementSet dense;
  ElementSet regular;
  bool       boolean_hreduct = false;
  bool       simple          = false;
};

/// Open, dense and regular elements by table scan. Simplicity is read off
/// the congruence filters and, for algebras with a box, cross-checked
/// against "exactly two open elements".
inline ElementProfile element_profile(FiniteAlgebra const& A) {
  ElementProfile p;
  for (elem a = 0; a < A.n; ++a) {
    if (A.interior(a) == a) p.open.push_back(a);
    if (A.neg(a) == A.bottom()) p.dense.push_back(a);
    if (A.neg(A.neg(a)) == a) p.regular.push_back(a);
  }
  p.boolean_hreduct = has_boolean_hreduct(A);
  p.simple          = is_simple(A);
  if (A.box_table && p.simple != (p.open.size() == 2)) {
    throw theorem_violation("simplicity disagrees with the open-element count in " + A.name);
  }
  return p;
}

}  // namespace hdv

#pragma once

// Small hand-built algebras shared by the tests. All are canonical; in the
// 3-chain the middle element is 1, in the 4-element Boolean lattice the
// atoms are 1 and 2.

#include "hdv/algebra.hpp"
#include "hdv/canonical.hpp"

namespace fixtures {

using namespace hdv;

inline constexpr elem m  = 1;  // middle of the 3-chain
inline constexpr elem at = 1;  // atoms of the 4-element Boolean lattice
inline constexpr elem bt = 2;

inline FiniteAlgebra chain(int n) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) leq[a][b] = a <= b;
  }
  return heyting_from_order("C" + std::to_string(n), leq);
}

inline FiniteAlgebra boolean4() {
  // 0 < 1, 2 < 3 with 1 and 2 incomparable.
  std::vector<std::vector<bool>> leq = {
      {true, true, true, true},
      {false, true, false, true},
      {false, false, true, true},
      {false, false, false, true},
  };
  return heyting_from_order("B4", leq);
}

inline FiniteAlgebra with_box(FiniteAlgebra A, std::string name, UnaryTable box) {
  A.name      = std::move(name);
  A.cls       = VarietyClass::ws5();
  A.box_table = std::move(box);
  return A;
}

inline FiniteAlgebra two_ws5() { return with_box(chain(2), "TwoWS5", {0, 1}); }

inline FiniteAlgebra c3_simple() { return with_box(chain(3), "C3simple", {0, 0, 2}); }

inline FiniteAlgebra c3_identity_box() { return with_box(chain(3), "C3id", {0, 1, 2}); }

inline FiniteAlgebra b4_disc() { return with_box(boolean4(), "B4disc", {0, 0, 0, 3}); }

inline FiniteAlgebra b4_prod() { return with_box(boolean4(), "B4prod", {0, 1, 2, 3}); }

inline FiniteAlgebra c3_hri_raw() {
  auto A        = chain(3);
  A.name        = "C3-HRI";
  A.cls         = VarietyClass::hri();
  A.invol_table = UnaryTable{2, 1, 0};
  return A;
}

inline FiniteAlgebra c3_hri() { return derive_operations(c3_hri_raw()); }

inline FiniteAlgebra c3_hdp_raw() {
  auto A          = chain(3);
  A.name          = "C3-HDP";
  A.cls           = VarietyClass::hdp(1);
  A.dualneg_table = UnaryTable{2, 2, 0};
  return A;
}

inline FiniteAlgebra c3_hdp() { return derive_operations(c3_hdp_raw()); }

inline FiniteAlgebra b4_hri() {
  auto A        = boolean4();
  A.name        = "B4-HRI";
  A.cls         = VarietyClass::hri();
  A.invol_table = UnaryTable{3, 2, 1, 0};
  return derive_operations(A);
}

inline FiniteAlgebra c3_dht() {
  auto A        = chain(3);
  A.name        = "C3-DHt";
  A.cls         = VarietyClass::dht(1);
  A.dimpl_table = compute_dual_implication(A);
  return derive_operations(A);
}

}  // namespace fixtures

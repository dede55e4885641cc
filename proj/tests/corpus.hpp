#pragma once

// The exhaustive test corpus: every catalog algebra of every class up to a
// size bound. Levels of the dual pseudocomplement classes run up to the
// largest level that occurs among lattices of that size.

#include <vector>

#include "hdv/catalog.hpp"

namespace corpus {

using namespace hdv;

inline int max_level(int max_size) {
  int level = 1;
  for (int n = 1; n <= max_size; ++n) {
    for (auto const& L : enum_distributive_lattices(n)) {
      auto A          = L;
      A.cls           = VarietyClass::hdp(1);
      A.dualneg_table = compute_dual_pseudocomplement(A);
      level           = std::max(level, infer_level(A));
    }
  }
  return level;
}

/// Every class with a box: ws5, hri, hdp:1.., dht:1..
inline std::vector<VarietyClass> box_classes(int max_size) {
  std::vector<VarietyClass> out = {VarietyClass::ws5(), VarietyClass::hri()};
  int                       top = max_level(max_size);
  for (int k = 1; k <= top; ++k) out.push_back(VarietyClass::hdp(k));
  for (int k = 1; k <= top; ++k) out.push_back(VarietyClass::dht(k));
  return out;
}

inline std::vector<FiniteAlgebra> algebras(std::vector<VarietyClass> const& classes, int max_size) {
  std::vector<FiniteAlgebra> out;
  for (auto cls : classes) {
    for (auto& A : build_catalog(cls, max_size)) out.push_back(std::move(A));
  }
  return out;
}

/// Box classes plus plain Heyting algebras.
inline std::vector<FiniteAlgebra> all_algebras(int max_size) {
  auto classes = box_classes(max_size);
  classes.insert(classes.begin(), VarietyClass::heyting());
  return algebras(classes, max_size);
}

}  // namespace corpus

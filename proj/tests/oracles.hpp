#pragma once

// Slow, direct reference implementations used to cross-check the library.
// None of these share code paths with the routines they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "hdv/algebra.hpp"

namespace oracle {

using hdv::elem;
using hdv::FiniteAlgebra;
using hdv::Op;

/// Least subset containing S and 1, closed under meet, up-sets and the
/// interior (or identity) by fixpoint iteration.
inline std::vector<elem> filter_closure(FiniteAlgebra const& A, std::vector<elem> const& S) {
  std::vector<bool> in(A.n, false);
  in[A.top()] = true;
  for (elem s : S) in[s] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (elem a = 0; a < A.n; ++a) {
      if (!in[a]) continue;
      auto add = [&](elem x) {
        if (!in[x]) in[x] = changed = true;
      };
      add(A.interior(a));
      for (elem b = 0; b < A.n; ++b) {
        if (in[b]) add(A.meet(a, b));
        if (A.leq(a, b)) add(b);
      }
    }
  }
  std::vector<elem> out;
  for (elem a = 0; a < A.n; ++a) {
    if (in[a]) out.push_back(a);
  }
  return out;
}

/// Least compatible equivalence relation containing (a, b), by closing a
/// relation matrix under symmetry, transitivity and every operation.
inline std::vector<std::vector<bool>> congruence_closure(FiniteAlgebra const& A, elem a, elem b) {
  int                            n = A.n;
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (elem x = 0; x < n; ++x) r[x][x] = true;
  r[a][b] = r[b][a] = true;
  bool changed      = true;
  auto set          = [&](elem x, elem y) {
    if (!r[x][y]) r[x][y] = changed = true;
  };
  while (changed) {
    changed = false;
    for (elem x = 0; x < n; ++x) {
      for (elem y = 0; y < n; ++y) {
        if (!r[x][y]) continue;
        set(y, x);
        for (elem z = 0; z < n; ++z) {
          if (r[y][z]) set(x, z);
        }
        for (Op op : A.operations()) {
          if (hdv::arity(op) == 1) {
            set(A.apply(op, x), A.apply(op, y));
            continue;
          }
          for (elem z = 0; z < n; ++z) {
            set(A.apply(op, x, z), A.apply(op, y, z));
            set(A.apply(op, z, x), A.apply(op, z, y));
          }
        }
      }
    }
  }
  return r;
}

inline bool preserves(FiniteAlgebra const& A, FiniteAlgebra const& B, std::vector<elem> const& f) {
  if (f[A.bottom()] != B.bottom() || f[A.top()] != B.top()) return false;
  for (Op op : A.operations()) {
    for (elem x = 0; x < A.n; ++x) {
      if (hdv::arity(op) == 1) {
        if (f[A.apply(op, x)] != B.apply(op, f[x])) return false;
        continue;
      }
      for (elem y = 0; y < A.n; ++y) {
        if (f[A.apply(op, x, y)] != B.apply(op, f[x], f[y])) return false;
      }
    }
  }
  return true;
}

/// Every map A -> B that preserves the operations, lexicographic order.
inline std::vector<std::vector<elem>> all_homs(FiniteAlgebra const& A, FiniteAlgebra const& B) {
  std::vector<std::vector<elem>> out;
  std::vector<elem>              f(A.n, 0);
  while (true) {
    if (preserves(A, B, f)) out.push_back(f);
    int i = A.n - 1;
    while (i >= 0 && f[i] == B.n - 1) f[i--] = 0;
    if (i < 0) break;
    ++f[i];
  }
  return out;
}

/// Isomorphism by trying every permutation.
inline bool brute_isomorphic(FiniteAlgebra const& A, FiniteAlgebra const& B) {
  if (A.n != B.n || A.cls != B.cls) return false;
  std::vector<elem> p(A.n);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (preserves(A, B, p)) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// Distributive lattices of size n up to isomorphism, counted directly:
/// every order on n points with 0 least and n-1 greatest whose middle part
/// is a transitive relation compatible with index order, kept if it is a
/// distributive lattice, deduplicated by brute-force isomorphism.
inline int count_distributive_lattices(int n) {
  if (n <= 2) return 1;
  int                               k = n - 2;
  std::vector<std::pair<int, int>>  pairs;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
  }
  std::vector<FiniteAlgebra> found;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<std::vector<bool>> below(k, std::vector<bool>(k, false));
    for (int i = 0; i < k; ++i) below[i][i] = true;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if ((mask >> p) & 1u) below[pairs[p].first][pairs[p].second] = true;
    }
    bool transitive = true;
    for (int i = 0; i < k && transitive; ++i) {
      for (int j = 0; j < k && transitive; ++j) {
        for (int l = 0; l < k && transitive; ++l) {
          if (below[i][j] && below[j][l] && !below[i][l]) transitive = false;
        }
      }
    }
    if (!transitive) continue;
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (int a = 0; a < n; ++a) {
      leq[0][a] = leq[a][n - 1] = true;
    }
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) leq[i + 1][j + 1] = below[i][j];
    }
    FiniteAlgebra L;
    try {
      L = hdv::heyting_from_order("", leq);
    } catch (hdv::structure_error const&) {
      continue;
    }
    bool distributive = true;
    for (elem a = 0; a < n && distributive; ++a) {
      for (elem b = 0; b < n && distributive; ++b) {
        for (elem c = 0; c < n && distributive; ++c) {
          distributive = L.meet(a, L.join(b, c)) == L.join(L.meet(a, b), L.meet(a, c));
        }
      }
    }
    if (!distributive) continue;
    bool fresh = std::none_of(found.begin(), found.end(),
                              [&](FiniteAlgebra const& M) { return brute_isomorphic(L, M); });
    if (fresh) found.push_back(L);
  }
  return static_cast<int>(found.size());
}

/// Every unary table on L satisfying the box axioms, by trying all n^n
/// tables.
inline std::vector<hdv::UnaryTable> all_ws5_boxes(FiniteAlgebra const& L) {
  std::vector<hdv::UnaryTable> out;
  hdv::UnaryTable              box(L.n, 0);
  FiniteAlgebra                A = L;
  A.cls                          = hdv::VarietyClass::ws5();
  while (true) {
    A.box_table = box;
    if (hdv::validate(A).valid) out.push_back(box);
    int i = L.n - 1;
    while (i >= 0 && box[i] == L.n - 1) box[i--] = 0;
    if (i < 0) break;
    ++box[i];
  }
  return out;
}

}  // namespace oracle

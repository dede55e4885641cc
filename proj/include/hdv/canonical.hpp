#pragma once

// Canonical labelling of finite algebras. Candidate labellings are the
// linear extensions of the lattice order (so 0 stays the bottom and n-1 the
// top); the canonical one minimises the table tuple (meet, box, invol)
// lexicographically. The remaining tables are determined by these, so two
// algebras are isomorphic iff their canonical forms are equal.

#include <functional>
#include <vector>

#include "hdv/algebra.hpp"

namespace hdv {

/// Relabels A by perm (perm[old] = new). perm must be a bijection.
inline FiniteAlgebra relabel(FiniteAlgebra const& A, std::vector<elem> const& perm) {
  int n = A.n;
  std::vector<elem> inv(n);
  for (elem a = 0; a < n; ++a) inv[perm[a]] = a;
  auto binary = [&](BinaryTable const& t) {
    BinaryTable out(n);
    for (elem a = 0; a < n; ++a) {
      for (elem b = 0; b < n; ++b) out.at(perm[a], perm[b]) = perm[t(a, b)];
    }
    return out;
  };
  auto unary = [&](UnaryTable const& t) {
    UnaryTable out(n);
    for (elem a = 0; a < n; ++a) out[perm[a]] = perm[t[a]];
    return out;
  };
  FiniteAlgebra B;
  B.name       = A.name;
  B.cls        = A.cls;
  B.n          = n;
  B.meet_table = binary(A.meet_table);
  B.join_table = binary(A.join_table);
  B.impl_table = binary(A.impl_table);
  if (A.box_table) B.box_table = unary(*A.box_table);
  if (A.invol_table) B.invol_table = unary(*A.invol_table);
  if (A.dualneg_table) B.dualneg_table = unary(*A.dualneg_table);
  if (A.dimpl_table) B.dimpl_table = binary(*A.dimpl_table);
  return B;
}

/// Calls f(order) for every linear extension of the lattice order of A;
/// order[k] is the element placed at position k. Stops early if f returns
/// false.
inline void for_each_linear_extension(
    FiniteAlgebra const& A, std::function<bool(std::vector<elem> const&)> const& f) {
  int                            n = A.n;
  std::vector<std::vector<elem>> below(n);  // strict lower covers suffice, but all is fine
  for (elem a = 0; a < n; ++a) {
    for (elem b = 0; b < n; ++b) {
      if (a != b && A.leq(b, a)) below[a].push_back(b);
    }
  }
  std::vector<elem> order;
  std::vector<bool> placed(n, false);
  order.reserve(n);
  bool stop = false;
  std::function<void()> rec = [&] {
    if (stop) return;
    if (static_cast<int>(order.size()) == n) {
      stop = !f(order);
      return;
    }
    for (elem a = 0; a < n && !stop; ++a) {
      if (placed[a]) continue;
      bool ready = true;
      for (elem b : below[a]) {
        if (!placed[b]) {
          ready = false;
          break;
        }
      }
      if (!ready) continue;
      placed[a] = true;
      order.push_back(a);
      rec();
      order.pop_back();
      placed[a] = false;
    }
  };
  rec();
}

struct CanonicalForm {
  FiniteAlgebra     algebra;
  std::vector<elem> relabel;  // relabel[old] = new index
};

inline CanonicalForm canonical_form(FiniteAlgebra const& A) {
  int               n = A.n;
  std::vector<elem> best_key;
  std::vector<elem> best_perm;
  std::vector<elem> perm(n);

  std::vector<elem> key;
  key.reserve(static_cast<std::size_t>(n) * n + 2 * n);
  for_each_linear_extension(A, [&](std::vector<elem> const& order) {
    for (elem k = 0; k < n; ++k) perm[order[k]] = k;
    // Build the key lazily and stop at the first entry that is already
    // larger than the incumbent.
    key.clear();
    bool smaller = best_key.empty();
    auto push    = [&](elem v) {
      if (!smaller) {
        elem incumbent = best_key[key.size()];
        if (v > incumbent) return false;
        if (v < incumbent) smaller = true;
      }
      key.push_back(v);
      return true;
    };
    for (elem i = 0; i < n; ++i) {
      for (elem j = 0; j < n; ++j) {
        if (!push(perm[A.meet(order[i], order[j])])) return true;
      }
    }
    if (A.box_table) {
      for (elem i = 0; i < n; ++i) {
        if (!push(perm[A.box(order[i])])) return true;
      }
    }
    if (A.invol_table) {
      for (elem i = 0; i < n; ++i) {
        if (!push(perm[A.invol(order[i])])) return true;
      }
    }
    if (smaller) {
      best_key  = key;
      best_perm = perm;
    }
    return true;
  });
  return {relabel(A, best_perm), best_perm};
}

inline FiniteAlgebra canonicalize(FiniteAlgebra const& A) {
  return canonical_form(A).algebra;
}

/// True when A is already in canonical form.
inline bool is_canonical(FiniteAlgebra const& A) { return canonicalize(A) == A; }

}  // namespace hdv

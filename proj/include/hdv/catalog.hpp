#pragma once

// Exhaustive generation of small finite algebras: distributive lattices
// (as downset lattices of finite posets) and their decorations in each
// class.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hdv/algebra.hpp"
#include "hdv/canonical.hpp"
#include "hdv/congruence.hpp"

namespace hdv {

inline constexpr int max_catalog_size = 12;

namespace detail {

// A finite poset on 0..k-1, naturally labelled (i < j whenever i is below
// j), stored as the bitmask of strict predecessors of each element.
using PosetBelow = std::vector<std::uint32_t>;

inline std::vector<std::uint32_t> downsets(PosetBelow const& below) {
  int                        k = static_cast<int>(below.size());
  std::vector<std::uint32_t> out{0};
  // Element i can be added to a downset containing all its predecessors;
  // natural labelling lets us extend by increasing index.
  for (int i = 0; i < k; ++i) {
    std::size_t m = out.size();
    for (std::size_t j = 0; j < m; ++j) {
      if ((out[j] & below[i]) == below[i]) out.push_back(out[j] | (1u << i));
    }
  }
  return out;
}

inline FiniteAlgebra downset_lattice(PosetBelow const& below) {
  auto ds = downsets(below);
  std::sort(ds.begin(), ds.end(), [](std::uint32_t x, std::uint32_t y) {
    int px = __builtin_popcount(x), py = __builtin_popcount(y);
    return px != py ? px < py : x < y;
  });
  std::size_t                    n = ds.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) leq[a][b] = (ds[a] & ~ds[b]) == 0;
  }
  return canonicalize(heyting_from_order("", leq));
}

inline void sort_and_name(std::vector<FiniteAlgebra>& algebras) {
  std::sort(algebras.begin(), algebras.end(), canonical_less);
  std::map<int, int> seen;
  for (auto& A : algebras) {
    A.name = A.cls.to_string() + "-" + std::to_string(A.n) + "-" + std::to_string(seen[A.n]++);
  }
}

inline void add_unique(std::vector<FiniteAlgebra>& out, FiniteAlgebra A) {
  A = canonicalize(A);
  if (std::find(out.begin(), out.end(), A) == out.end()) out.push_back(std::move(A));
}

}  // namespace detail

/// All distributive lattices of size n up to isomorphism, as canonical
/// Heyting algebras, ordered by canonical_less.
inline std::vector<FiniteAlgebra> enum_distributive_lattices(int n) {
  if (n < 1 || n > max_catalog_size) {
    throw structure_error("lattice size must be in 1.." + std::to_string(max_catalog_size));
  }
  // Grow posets one maximal element at a time, keeping one poset per
  // isomorphism class of downset lattice (the lattice determines the poset).
  std::vector<FiniteAlgebra>    result;
  std::vector<detail::PosetBelow> level{{}};
  for (int k = 0; k < n && !level.empty(); ++k) {
    std::vector<detail::PosetBelow> next;
    std::vector<FiniteAlgebra>      next_keys;
    for (auto const& p : level) {
      auto ds = detail::downsets(p);
      if (static_cast<int>(ds.size()) == n) detail::add_unique(result, detail::downset_lattice(p));
      for (auto d : ds) {
        auto q = p;
        q.push_back(d);
        if (static_cast<int>(detail::downsets(q).size()) > n) continue;
        auto key = detail::downset_lattice(q);
        if (std::find(next_keys.begin(), next_keys.end(), key) != next_keys.end()) continue;
        next_keys.push_back(std::move(key));
        next.push_back(std::move(q));
      }
    }
    level = std::move(next);
  }
  for (auto const& p : level) {
    if (static_cast<int>(detail::downsets(p).size()) == n) {
      detail::add_unique(result, detail::downset_lattice(p));
    }
  }
  detail::sort_and_name(result);
  return result;
}

namespace detail {

inline std::vector<FiniteAlgebra> decorate_ws5(FiniteAlgebra const& L) {
  // A box is determined by its set O of open elements: []a = max of O
  // below a. O must contain 0 and 1, be closed under join and meet, and be
  // Boolean. Enumerate subsets of the remaining elements.
  std::vector<FiniteAlgebra> out;
  int                        n = L.n;
  if (n == 1) {
    FiniteAlgebra A = L;
    A.cls           = VarietyClass::ws5();
    A.box_table     = UnaryTable{0};
    out.push_back(A);
    return out;
  }
  int inner = n - 2;
  for (std::uint32_t mask = 0; mask < (1u << inner); ++mask) {
    std::vector<bool> open(n, false);
    open[L.bottom()] = open[L.top()] = true;
    for (int i = 0; i < inner; ++i) open[i + 1] = (mask >> i) & 1u;
    bool ok = true;
    for (elem a = 0; a < n && ok; ++a) {
      if (!open[a]) continue;
      bool complemented = false;
      for (elem b = 0; b < n && ok; ++b) {
        if (!open[b]) continue;
        if (!open[L.meet(a, b)] || !open[L.join(a, b)]) ok = false;
        if (L.meet(a, b) == L.bottom() && L.join(a, b) == L.top()) complemented = true;
      }
      ok = ok && complemented;
    }
    if (!ok) continue;
    UnaryTable box(n);
    for (elem a = 0; a < n; ++a) {
      elem best = L.bottom();
      for (elem o = 0; o < n; ++o) {
        if (open[o] && L.leq(o, a)) best = L.join(best, o);
      }
      box[a] = best;
    }
    FiniteAlgebra A = L;
    A.cls           = VarietyClass::ws5();
    A.box_table     = std::move(box);
    if (validate(A).valid) add_unique(out, std::move(A));
  }
  return out;
}

inline std::vector<FiniteAlgebra> decorate_hri(FiniteAlgebra const& L) {
  // Order-reversing involutions by backtracking, then the class axioms.
  std::vector<FiniteAlgebra> out;
  int                        n = L.n;
  std::vector<elem>          f(n, -1);
  auto consistent = [&](elem a, elem b) {
    // f(a) = b against every assigned pair.
    for (elem c = 0; c < n; ++c) {
      if (f[c] < 0) continue;
      if (L.leq(a, c) != L.leq(f[c], b)) return false;
      if (L.leq(c, a) != L.leq(b, f[c])) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, elem a) -> void {
    if (a == n) {
      FiniteAlgebra A = L;
      A.cls           = VarietyClass::hri();
      A.invol_table   = f;
      if (validate(A).valid) add_unique(out, derive_operations(std::move(A)));
      return;
    }
    if (f[a] >= 0) {
      self(self, a + 1);
      return;
    }
    for (elem b = 0; b < n; ++b) {
      if (f[b] >= 0 && f[b] != a) continue;
      if (!consistent(a, b)) continue;
      bool set_back = f[b] < 0 && b != a;
      f[a]          = b;
      if (set_back) {
        if (consistent(b, a)) {
          f[b] = a;
          self(self, a + 1);
          f[b] = -1;
        }
      } else {
        self(self, a + 1);
      }
      f[a] = -1;
    }
  };
  rec(rec, 0);
  return out;
}

inline std::vector<FiniteAlgebra> decorate_dual(FiniteAlgebra const& L, VarietyClass cls) {
  std::vector<FiniteAlgebra> out;
  FiniteAlgebra              A = L;
  A.cls                        = cls;
  if (cls.kind == VarietyClass::Kind::dht) {
    A.dimpl_table = compute_dual_implication(A);
  } else {
    A.dualneg_table = compute_dual_pseudocomplement(A);
  }
  if (infer_level(A) > cls.level) return out;
  A = derive_operations(std::move(A));
  require_valid(A);
  out.push_back(canonicalize(A));
  return out;
}

}  // namespace detail

/// Every expansion of the Heyting algebra L to a member of cls, up to
/// isomorphism. Derived operations (box, dual pseudocomplement) are filled
/// in.
inline std::vector<FiniteAlgebra> decorate(VarietyClass cls, FiniteAlgebra const& L) {
  cls.check();
  if (L.cls.kind != VarietyClass::Kind::heyting) {
    throw class_error("decorate expects a plain Heyting algebra");
  }
  require_valid(L);
  std::vector<FiniteAlgebra> out;
  using K = VarietyClass::Kind;
  switch (cls.kind) {
    case K::heyting: out.push_back(canonicalize(L)); break;
    case K::ws5: out = detail::decorate_ws5(L); break;
    case K::hri: out = detail::decorate_hri(L); break;
    case K::hdp:
    case K::dht: out = detail::decorate_dual(L, cls); break;
  }
  std::sort(out.begin(), out.end(), canonical_less);
  for (auto& A : out) A.name = L.name;
  return out;
}

/// All members of cls with 1..max_size elements, canonical, pairwise
/// non-isomorphic, ordered by size then canonical_less.
inline std::vector<FiniteAlgebra> build_catalog(VarietyClass cls, int max_size) {
  if (max_size < 1 || max_size > max_catalog_size) {
    throw structure_error("catalog size must be in 1.." + std::to_string(max_catalog_size));
  }
  std::vector<FiniteAlgebra> out;
  for (int n = 1; n <= max_size; ++n) {
    std::vector<FiniteAlgebra> layer;
    for (auto const& L : enum_distributive_lattices(n)) {
      for (auto& A : decorate(cls, L)) layer.push_back(std::move(A));
    }
    detail::sort_and_name(layer);
    for (auto& A : layer) out.push_back(std::move(A));
  }
  return out;
}

}  // namespace hdv

#pragma once

// Homomorphisms between finite algebras: enumeration by backtracking over a
// generating set, subalgebras, isomorphism and retracts.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "hdv/algebra.hpp"
#include "hdv/canonical.hpp"
#include "hdv/congruence.hpp"
#include "hdv/profile.hpp"

namespace hdv {

struct Homomorphism {
  std::vector<elem> map;  // indexed by domain element
  bool              onto      = false;
  bool              injective = false;

  bool operator==(Homomorphism const&) const = default;
};

/// Wraps a map after re-verifying that it preserves every operation.
inline Homomorphism make_homomorphism(FiniteAlgebra const& A, FiniteAlgebra const& B,
                                      std::vector<elem> map) {
  if (!preserves_operations(A, B, map)) {
    throw theorem_violation("map from " + A.name + " to " + B.name +
                            " does not preserve the operations");
  }
  std::vector<bool> hit(B.n, false);
  int               distinct = 0;
  for (elem b : map) {
    if (!hit[b]) ++distinct;
    hit[b] = true;
  }
  Homomorphism h;
  h.onto      = distinct == B.n;
  h.injective = distinct == A.n;
  h.map       = std::move(map);
  return h;
}

/// Least subuniverse containing S and the constants.
inline ElementSet subalgebra_closure(FiniteAlgebra const& A, ElementSet const& S) {
  std::vector<bool> in(A.n, false);
  std::vector<elem> members;
  auto              add = [&](elem a) {
    if (!in[a]) {
      in[a] = true;
      members.push_back(a);
    }
  };
  add(A.bottom());
  add(A.top());
  for (elem s : S) add(s);
  auto ops = A.operations();
  for (std::size_t i = 0; i < members.size(); ++i) {
    elem x = members[i];
    for (Op op : ops) {
      if (arity(op) == 1) {
        add(A.apply(op, x));
        continue;
      }
      for (std::size_t j = 0; j <= i; ++j) {
        elem y = members[j];
        add(A.apply(op, x, y));
        add(A.apply(op, y, x));
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

struct Subalgebra {
  FiniteAlgebra     algebra;    // canonical
  std::vector<elem> embedding;  // element of the subalgebra -> element of A
};

/// The subalgebra on a closed subset S of A.
inline Subalgebra subalgebra(FiniteAlgebra const& A, ElementSet const& S) {
  if (subalgebra_closure(A, S) != S) throw structure_error("subset is not a subuniverse");
  int               m = static_cast<int>(S.size());
  std::vector<elem> local(A.n, -1);
  for (int i = 0; i < m; ++i) local[S[i]] = i;
  auto bin = [&](BinaryTable const& t) {
    BinaryTable out(m);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) out.at(i, j) = local[t(S[i], S[j])];
    }
    return out;
  };
  auto un = [&](UnaryTable const& t) {
    UnaryTable out(m);
    for (int i = 0; i < m; ++i) out[i] = local[t[S[i]]];
    return out;
  };
  FiniteAlgebra sub;
  sub.name       = A.name + ".sub";
  sub.cls        = A.cls;
  sub.n          = m;
  sub.meet_table = bin(A.meet_table);
  sub.join_table = bin(A.join_table);
  sub.impl_table = bin(A.impl_table);
  if (A.dimpl_table) sub.dimpl_table = bin(*A.dimpl_table);
  if (A.box_table) sub.box_table = un(*A.box_table);
  if (A.invol_table) sub.invol_table = un(*A.invol_table);
  if (A.dualneg_table) sub.dualneg_table = un(*A.dualneg_table);
  auto              cf = canonical_form(sub);
  std::vector<elem> emb(m);
  for (int i = 0; i < m; ++i) emb[cf.relabel[i]] = S[i];
  return {std::move(cf.algebra), std::move(emb)};
}

/// Greedy generating set: repeatedly add the element whose closure grows
/// the most (ties to the smallest index).
inline std::vector<elem> generating_set(FiniteAlgebra const& A) {
  std::vector<elem> gens;
  ElementSet        closed = subalgebra_closure(A, {});
  while (static_cast<int>(closed.size()) < A.n) {
    elem       best = -1;
    ElementSet best_closure;
    for (elem a = 0; a < A.n; ++a) {
      if (contains(closed, a)) continue;
      ElementSet with = closed;
      with.insert(std::upper_bound(with.begin(), with.end(), a), a);
      auto c = subalgebra_closure(A, with);
      if (best < 0 || c.size() > best_closure.size()) {
        best         = a;
        best_closure = std::move(c);
      }
    }
    gens.push_back(best);
    closed = std::move(best_closure);
  }
  return gens;
}

namespace detail {

// Backtracking over images of the generators; each assignment is closed
// under the operations and conflicts prune the branch.
class HomSearch {
 public:
  HomSearch(FiniteAlgebra const& A, FiniteAlgebra const& B, bool injective_only)
      : A_(A),
        B_(B),
        ops_(A.operations()),
        gens_(generating_set(A)),
        map_(A.n, -1),
        preimage_(B.n, -1),
        injective_(injective_only) {}

  /// f(map) for every homomorphism; stop when f returns false.
  template <typename F>
  void run(F&& f) {
    stop_ = false;
    if (!assign(A_.bottom(), B_.bottom()) || !assign(A_.top(), B_.top()) || !propagate()) {
      return;
    }
    rec(0, f);
  }

 private:
  bool assign(elem a, elem b) {
    if (map_[a] >= 0) return map_[a] == b;
    if (injective_ && preimage_[b] >= 0) return false;
    map_[a] = b;
    if (preimage_[b] < 0) preimage_[b] = a;
    trail_.push_back(a);
    return true;
  }

  bool propagate() {
    for (; queue_head_ < trail_.size(); ++queue_head_) {
      elem x = trail_[queue_head_];
      for (Op op : ops_) {
        if (arity(op) == 1) {
          if (!assign(A_.apply(op, x), B_.apply(op, map_[x]))) return false;
          continue;
        }
        for (std::size_t j = 0; j <= queue_head_; ++j) {
          elem y = trail_[j];
          if (!assign(A_.apply(op, x, y), B_.apply(op, map_[x], map_[y]))) return false;
          if (!assign(A_.apply(op, y, x), B_.apply(op, map_[y], map_[x]))) return false;
        }
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      elem a = trail_.back();
      trail_.pop_back();
      if (preimage_[map_[a]] == a) preimage_[map_[a]] = -1;
      map_[a] = -1;
    }
    queue_head_ = std::min(queue_head_, mark);
  }

  template <typename F>
  void rec(std::size_t k, F& f) {
    if (stop_) return;
    if (k == gens_.size()) {
      stop_ = !f(static_cast<std::vector<elem> const&>(map_));
      return;
    }
    elem g = gens_[k];
    if (map_[g] >= 0) {
      rec(k + 1, f);
      return;
    }
    for (elem b = 0; b < B_.n && !stop_; ++b) {
      std::size_t mark = trail_.size();
      if (assign(g, b) && propagate()) rec(k + 1, f);
      undo(mark);
    }
  }

  FiniteAlgebra const& A_;
  FiniteAlgebra const& B_;
  std::vector<Op>      ops_;
  std::vector<elem>    gens_;
  std::vector<elem>    map_;
  std::vector<elem>    preimage_;
  std::vector<elem>    trail_;
  std::size_t          queue_head_ = 0;
  bool                 injective_;
  bool                 stop_ = false;
};

inline void require_same_signature(FiniteAlgebra const& A, FiniteAlgebra const& B) {
  if (A.cls.kind != B.cls.kind || A.operations() != B.operations()) {
    throw class_error("algebras of classes " + A.cls.to_string() + " and " +
                      B.cls.to_string() + " have different signatures");
  }
}

}  // namespace detail

enum class HomMode { any, any_onto, all, count };

struct HomResult {
  std::vector<Homomorphism> homs;   // sorted lexicographically by map
  std::size_t               count = 0;
  bool                      truncated = false;  // cap reached, more exist
};

/// Homomorphisms A -> B. `any` and `any_onto` return the lexicographically
/// least witness; `all` returns every map sorted; `count` only counts. With
/// a cap, enumeration stops after cap results and sets `truncated` if more
/// exist. `onto_only` restricts all/count to surjections.
inline HomResult homs(FiniteAlgebra const& A, FiniteAlgebra const& B, HomMode mode,
                      std::optional<std::size_t> cap = std::nullopt, bool onto_only = false) {
  detail::require_same_signature(A, B);
  bool      onto = onto_only || mode == HomMode::any_onto;
  HomResult r;
  if (onto && B.n > A.n) return r;
  bool      keep = mode != HomMode::count;
  bool      best_only = mode == HomMode::any || mode == HomMode::any_onto;
  std::optional<std::vector<elem>> best;
  detail::HomSearch search(A, B, false);
  search.run([&](std::vector<elem> const& map) {
    if (onto) {
      std::vector<bool> hit(B.n, false);
      for (elem b : map) hit[b] = true;
      if (std::find(hit.begin(), hit.end(), false) != hit.end()) return true;
    }
    if (best_only) {
      if (!best || map < *best) best = map;
      ++r.count;
      return true;
    }
    if (cap && r.count == *cap) {
      r.truncated = true;
      return false;
    }
    ++r.count;
    if (keep) r.homs.push_back(make_homomorphism(A, B, map));
    return true;
  });
  if (best_only) {
    r.count = best ? 1 : 0;
    if (best) r.homs.push_back(make_homomorphism(A, B, *best));
    return r;
  }
  std::sort(r.homs.begin(), r.homs.end(),
            [](Homomorphism const& x, Homomorphism const& y) { return x.map < y.map; });
  return r;
}

inline std::optional<Homomorphism> find_hom(FiniteAlgebra const& A, FiniteAlgebra const& B,
                                            bool onto = false) {
  auto r = homs(A, B, onto ? HomMode::any_onto : HomMode::any);
  if (r.homs.empty()) return std::nullopt;
  return r.homs.front();
}

/// Bijective homomorphism search, pruned by open/dense/regular counts.
inline std::optional<Homomorphism> isomorphic(FiniteAlgebra const& A, FiniteAlgebra const& B) {
  detail::require_same_signature(A, B);
  if (A.n != B.n) return std::nullopt;
  auto pa = element_profile(A), pb = element_profile(B);
  if (pa.open.size() != pb.open.size() || pa.dense.size() != pb.dense.size() ||
      pa.regular.size() != pb.regular.size()) {
    return std::nullopt;
  }
  std::optional<Homomorphism> out;
  detail::HomSearch           search(A, B, true);
  search.run([&](std::vector<elem> const& map) {
    out = make_homomorphism(A, B, map);
    return false;
  });
  return out;
}

/// The subalgebra generated by the constants, checked to be minimal and
/// isomorphic to the two-element algebra of the class.
inline std::vector<FiniteAlgebra> minimal_subalgebras(FiniteAlgebra const& A) {
  if (A.trivial()) throw structure_error("minimal_subalgebras needs a nontrivial algebra");
  ElementSet base = subalgebra_closure(A, {});
  // Any subalgebra contains the constants, hence base; check that no single
  // element of base generates something smaller.
  for (elem a : base) {
    if (subalgebra_closure(A, {a}) != base) {
      throw theorem_violation("constant-generated subalgebra is not minimal");
    }
  }
  auto sub = subalgebra(A, base).algebra;
  if (!isomorphic(sub, two_algebra(A.cls))) {
    throw theorem_violation("minimal subalgebra of " + A.name + " is not the two-element algebra");
  }
  sub.name = "2";
  return {sub};
}

////////////////////////////////////////////////////////////////////////
// Retracts
////////////////////////////////////////////////////////////////////////

struct RetractWitness {
  Homomorphism retraction;  // P -> B, onto
  Homomorphism injection;   // B -> P
  bool         composite_is_identity = false;
};

namespace detail {

inline RetractWitness make_retract_witness(FiniteAlgebra const& P, FiniteAlgebra const& B,
                                           std::vector<elem> phi, std::vector<elem> psi) {
  RetractWitness w{make_homomorphism(P, B, std::move(phi)),
                   make_homomorphism(B, P, std::move(psi)), true};
  for (elem b = 0; b < B.n; ++b) {
    if (w.retraction.map[w.injection.map[b]] != b) w.composite_is_identity = false;
  }
  if (!w.composite_is_identity) throw theorem_violation("retraction o injection is not the identity");
  return w;
}

// Chooses psi(b) in phi^-1(b), ascending, so that psi is a homomorphism.
inline std::optional<std::vector<elem>> find_section(FiniteAlgebra const& P,
                                                     FiniteAlgebra const& B,
                                                     std::vector<elem> const& phi) {
  std::vector<std::vector<elem>> fibre(B.n);
  for (elem p = 0; p < P.n; ++p) fibre[phi[p]].push_back(p);
  std::vector<elem> psi(B.n, -1);
  auto              ops = B.operations();

  auto consistent = [&](elem b) {
    for (Op op : ops) {
      if (arity(op) == 1) {
        for (elem x = 0; x <= b; ++x) {
          elem r = B.apply(op, x);
          if (r > b) continue;
          if (x != b && r != b) continue;
          if (psi[r] != P.apply(op, psi[x])) return false;
        }
        continue;
      }
      for (elem x = 0; x <= b; ++x) {
        for (elem y = 0; y <= b; ++y) {
          elem r = B.apply(op, x, y);
          if (r > b) continue;
          if (x != b && y != b && r != b) continue;
          if (psi[r] != P.apply(op, psi[x], psi[y])) return false;
        }
      }
    }
    return true;
  };

  std::function<bool(elem)> rec = [&](elem b) -> bool {
    if (b == B.n) return true;
    for (elem p : fibre[b]) {
      if (b == B.bottom() && p != P.bottom()) continue;
      if (b == B.top() && p != P.top()) continue;
      psi[b] = p;
      if (consistent(b) && rec(b + 1)) return true;
    }
    psi[b] = -1;
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return psi;
}

}  // namespace detail

/// Direct search: for each onto homomorphism P -> B (ascending), look for a
/// section that is a homomorphism.
inline std::optional<RetractWitness> is_retract(FiniteAlgebra const& P, FiniteAlgebra const& B) {
  detail::require_same_signature(P, B);
  if (B.n > P.n) return std::nullopt;
  for (auto const& phi : homs(P, B, HomMode::all, std::nullopt, true).homs) {
    if (auto psi = detail::find_section(P, B, phi.map)) {
      return detail::make_retract_witness(P, B, phi.map, std::move(*psi));
    }
  }
  return std::nullopt;
}

struct ProductRetract {
  Product                       product;  // B x C
  std::optional<RetractWitness> witness;
};

/// The product construction: with chi : B -> C, psi(b) = (b, chi(b)) is an
/// injection for the first projection. A trivial C makes the projection an
/// isomorphism.
inline ProductRetract retract_via_product(FiniteAlgebra const& B, FiniteAlgebra const& C) {
  ProductRetract out{product_with_coords(B, C), std::nullopt};
  auto const&    P = out.product;
  std::vector<elem> phi(P.algebra.n);
  for (elem p = 0; p < P.algebra.n; ++p) phi[p] = P.coords[p].first;

  std::vector<elem> chi(B.n, 0);
  if (!C.trivial()) {
    auto h = find_hom(B, C);
    if (!h) return out;
    chi = h->map;
  }
  std::vector<elem> psi(B.n);
  for (elem b = 0; b < B.n; ++b) psi[b] = P.index_of(b, chi[b]);
  out.witness = detail::make_retract_witness(P.algebra, B, std::move(phi), std::move(psi));
  return out;
}

struct RetractCheck {
  std::optional<RetractWitness> direct;
  ProductRetract                via_product;
};

/// Both routes for "B is a retract of B x C"; they must agree.
inline RetractCheck check_product_retract(FiniteAlgebra const& B, FiniteAlgebra const& C) {
  RetractCheck r{std::nullopt, retract_via_product(B, C)};
  r.direct = is_retract(r.via_product.product.algebra, B);
  if (r.direct.has_value() != r.via_product.witness.has_value()) {
    throw theorem_violation("direct retract search and product construction disagree");
  }
  return r;
}

struct RetractReport {
  std::optional<RetractWitness> direct;
  bool                          factorised = false;  // P = B x C found
  std::optional<FiniteAlgebra>  cofactor;           // C
  std::optional<bool>           via_product;        // verdict of the construction
};

/// Direct retract search on P, plus the product construction when some
/// factor pair of P has B as one factor.
inline RetractReport retract_report(FiniteAlgebra const& P, FiniteAlgebra const& B) {
  RetractReport r;
  r.direct = is_retract(P, B);
  auto canonical_b = canonicalize(B);
  for (auto const& F : all_congruence_filters(P)) {
    auto pair = factor_complement(P, to_congruence(P, F));
    if (!pair || !(pair->left == canonical_b)) continue;
    r.factorised = true;
    r.cofactor   = pair->right;
    auto check   = check_product_retract(canonical_b, pair->right);
    r.via_product = check.via_product.witness.has_value();
    if (*r.via_product != r.direct.has_value()) {
      throw theorem_violation("retract of P and of the isomorphic product B x C disagree");
    }
    break;
  }
  return r;
}

}  // namespace hdv

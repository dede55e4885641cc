#pragma once

// Filters and congruences of finite algebras, quotients, products, factor
// congruences, decomposition into simple factors and the Boolean projection.
//
// All classes handled here are interior-operator algebras whose extra
// operations are compatible, so a congruence is determined by the class of
// the top element, a box-closed h-filter. Filters are the canonical
// representation; partitions are kept where the relational form matters
// (the permutation test for factor pairs).

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hdv/algebra.hpp"
#include "hdv/canonical.hpp"

namespace hdv {

/// Sorted set of element indices.
using ElementSet = std::vector<elem>;

inline bool contains(ElementSet const& s, elem a) {
  return std::binary_search(s.begin(), s.end(), a);
}

/// Upward closure of a single element.
inline ElementSet up_set(FiniteAlgebra const& A, elem a) {
  ElementSet out;
  for (elem b = 0; b < A.n; ++b) {
    if (A.leq(a, b)) out.push_back(b);
  }
  return out;
}

struct HFilter {
  ElementSet carrier;
  bool       operator==(HFilter const&) const = default;
};

struct CongruenceFilter {
  ElementSet carrier;

  bool contains(elem a) const { return hdv::contains(carrier, a); }
  int  size() const { return static_cast<int>(carrier.size()); }
  bool operator==(CongruenceFilter const&) const = default;
};

inline bool is_hfilter(FiniteAlgebra const& A, ElementSet const& F) {
  if (!contains(F, A.top())) return false;
  for (elem a : F) {
    for (elem b = 0; b < A.n; ++b) {
      if (A.leq(a, b) && !contains(F, b)) return false;
    }
    for (elem b : F) {
      if (!contains(F, A.meet(a, b))) return false;
    }
  }
  return true;
}

inline bool is_congruence_filter(FiniteAlgebra const& A, ElementSet const& F) {
  if (!is_hfilter(A, F)) return false;
  return std::all_of(F.begin(), F.end(),
                     [&](elem a) { return contains(F, A.interior(a)); });
}

/// Least h-filter containing S: the up-set of the meet of S ({1} for S empty).
inline HFilter generated_hfilter(FiniteAlgebra const& A, ElementSet const& S) {
  elem m = A.top();
  for (elem s : S) m = A.meet(m, s);
  return {up_set(A, m)};
}

/// Least congruence filter containing S: all a with
/// []b0 & ... & []bk <= a for some b_i in S. On a finite algebra the
/// existential collapses to the meet over all of S.
inline CongruenceFilter generated_congfilter(FiniteAlgebra const& A, ElementSet const& S) {
  elem m = A.top();
  for (elem s : S) m = A.meet(m, A.interior(s));
  return {up_set(A, m)};
}

/// b in F with F = {a : []b <= a}; b is the meet of F.
inline elem principal_generator(FiniteAlgebra const& A, CongruenceFilter const& F) {
  elem b = A.top();
  for (elem a : F.carrier) b = A.meet(b, a);
  if (!F.contains(b) || up_set(A, A.interior(b)) != F.carrier) {
    throw theorem_violation("congruence filter is not generated by the box of its meet");
  }
  return b;
}

/// Every congruence filter of A, ascending by size then carrier. These are
/// exactly the up-sets of open elements.
inline std::vector<CongruenceFilter> all_congruence_filters(FiniteAlgebra const& A) {
  std::vector<CongruenceFilter> out;
  for (elem a = 0; a < A.n; ++a) {
    if (A.interior(a) != a) continue;
    out.push_back({up_set(A, a)});
  }
  std::sort(out.begin(), out.end(), [](auto const& x, auto const& y) {
    if (x.carrier.size() != y.carrier.size()) return x.carrier.size() < y.carrier.size();
    return x.carrier < y.carrier;
  });
  return out;
}

////////////////////////////////////////////////////////////////////////
// Partitions
////////////////////////////////////////////////////////////////////////

/// Partition of {0..n-1}. Blocks are numbered in order of their least
/// element.
class Congruence {
 public:
  Congruence() = default;

  /// From any block labelling; renumbers blocks by least element.
  explicit Congruence(std::vector<int> const& labels) : block_of_(labels.size()) {
    std::vector<int> renumber(labels.size() + 1, -1);
    int              next = 0;
    for (std::size_t a = 0; a < labels.size(); ++a) {
      int l = labels[a];
      if (l < 0 || l >= static_cast<int>(renumber.size())) {
        throw structure_error("partition label out of range");
      }
      if (renumber[l] < 0) renumber[l] = next++;
      block_of_[a] = renumber[l];
    }
    blocks_ = next;
  }

  static Congruence identity(int n) {
    std::vector<int> l(n);
    std::iota(l.begin(), l.end(), 0);
    return Congruence(l);
  }

  static Congruence all(int n) { return Congruence(std::vector<int>(n, 0)); }

  int  host_size() const { return static_cast<int>(block_of_.size()); }
  int  num_blocks() const { return blocks_; }
  int  block(elem a) const { return block_of_[a]; }
  bool related(elem a, elem b) const { return block_of_[a] == block_of_[b]; }

  std::vector<ElementSet> blocks() const {
    std::vector<ElementSet> out(blocks_);
    for (elem a = 0; a < host_size(); ++a) out[block_of_[a]].push_back(a);
    return out;
  }

  bool is_identity() const { return blocks_ == host_size(); }
  bool is_all() const { return blocks_ <= 1; }

  bool operator==(Congruence const&) const = default;

 private:
  std::vector<int> block_of_;
  int              blocks_ = 0;
};

inline bool is_compatible(FiniteAlgebra const& A, Congruence const& theta) {
  if (theta.host_size() != A.n) return false;
  for (Op op : A.operations()) {
    for (elem a = 0; a < A.n; ++a) {
      for (elem b = 0; b < A.n; ++b) {
        if (!theta.related(a, b)) continue;
        if (arity(op) == 1) {
          if (!theta.related(A.apply(op, a), A.apply(op, b))) return false;
          continue;
        }
        for (elem c = 0; c < A.n; ++c) {
          if (!theta.related(A.apply(op, a, c), A.apply(op, b, c)) ||
              !theta.related(A.apply(op, c, a), A.apply(op, c, b))) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

/// a ~ b iff (a -> b) & (b -> a) in F. Throws if F is not a congruence
/// filter or the relation is not compatible with every operation of A.
inline Congruence to_congruence(FiniteAlgebra const& A, CongruenceFilter const& F) {
  if (!is_congruence_filter(A, F.carrier)) {
    throw structure_error("not a congruence filter");
  }
  std::vector<int> labels(A.n, -1);
  for (elem a = 0; a < A.n; ++a) {
    if (labels[a] >= 0) continue;
    for (elem b = a; b < A.n; ++b) {
      if (F.contains(A.iff(a, b))) labels[b] = a;
    }
  }
  Congruence theta(labels);
  if (!is_compatible(A, theta)) {
    throw structure_error("filter relation is not compatible with the operations");
  }
  return theta;
}

/// The class of the top element.
inline CongruenceFilter to_filter(FiniteAlgebra const& A, Congruence const& theta) {
  if (!is_compatible(A, theta)) throw structure_error("partition is not a congruence");
  CongruenceFilter F;
  for (elem a = 0; a < A.n; ++a) {
    if (theta.related(a, A.top())) F.carrier.push_back(a);
  }
  return F;
}

/// Least congruence identifying a and b: the filter generated by a <-> b.
inline Congruence principal_congruence(FiniteAlgebra const& A, elem a, elem b) {
  return to_congruence(A, generated_congfilter(A, {A.iff(a, b)}));
}

inline Congruence meet(Congruence const& x, Congruence const& y) {
  int              n = x.host_size();
  std::vector<int> labels(n);
  for (elem a = 0; a < n; ++a) labels[a] = x.block(a) * n + y.block(a);
  // Compress labels into [0, n] before constructing.
  std::vector<int> seen;
  for (int l : labels) seen.push_back(l);
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  for (int& l : labels) l = static_cast<int>(std::lower_bound(seen.begin(), seen.end(), l) - seen.begin());
  return Congruence(labels);
}

inline Congruence join(Congruence const& x, Congruence const& y) {
  int              n = x.host_size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (elem a = 0; a < n; ++a) {
    for (elem b = a + 1; b < n; ++b) {
      if (x.related(a, b) || y.related(a, b)) parent[find(a)] = find(b);
    }
  }
  std::vector<int> labels(n);
  for (elem a = 0; a < n; ++a) labels[a] = find(a);
  return Congruence(labels);
}

/// x o y = y o x as binary relations.
inline bool permute(Congruence const& x, Congruence const& y) {
  int  n       = x.host_size();
  auto compose = [&](Congruence const& p, Congruence const& q, elem a, elem c) {
    for (elem b = 0; b < n; ++b) {
      if (p.related(a, b) && q.related(b, c)) return true;
    }
    return false;
  };
  for (elem a = 0; a < n; ++a) {
    for (elem c = 0; c < n; ++c) {
      if (compose(x, y, a, c) != compose(y, x, a, c)) return false;
    }
  }
  return true;
}

////////////////////////////////////////////////////////////////////////
// Quotients and products
////////////////////////////////////////////////////////////////////////

struct Quotient {
  FiniteAlgebra     algebra;
  std::vector<elem> projection;  // element of A -> element of A/theta
};

/// A/theta with induced tables, canonically labelled.
inline Quotient quotient(FiniteAlgebra const& A, Congruence const& theta) {
  if (theta.host_size() != A.n) throw structure_error("partition size mismatch");
  int               m = theta.num_blocks();
  std::vector<elem> rep(m, -1);
  for (elem a = A.n - 1; a >= 0; --a) rep[theta.block(a)] = a;

  auto induced_binary = [&](auto f) {
    BinaryTable t(m);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) t.at(i, j) = theta.block(f(rep[i], rep[j]));
    }
    for (elem a = 0; a < A.n; ++a) {
      for (elem b = 0; b < A.n; ++b) {
        if (t(theta.block(a), theta.block(b)) != theta.block(f(a, b))) {
          throw theorem_violation("quotient operation is not well defined");
        }
      }
    }
    return t;
  };
  auto induced_unary = [&](auto f) {
    UnaryTable t(m);
    for (int i = 0; i < m; ++i) t[i] = theta.block(f(rep[i]));
    for (elem a = 0; a < A.n; ++a) {
      if (t[theta.block(a)] != theta.block(f(a))) {
        throw theorem_violation("quotient operation is not well defined");
      }
    }
    return t;
  };

  FiniteAlgebra Q;
  Q.name       = A.name + "/theta";
  Q.cls        = A.cls;
  Q.n          = m;
  Q.meet_table = induced_binary([&](elem a, elem b) { return A.meet(a, b); });
  Q.join_table = induced_binary([&](elem a, elem b) { return A.join(a, b); });
  Q.impl_table = induced_binary([&](elem a, elem b) { return A.impl(a, b); });
  if (A.dimpl_table) {
    Q.dimpl_table = induced_binary([&](elem a, elem b) { return A.dimpl(a, b); });
  }
  if (A.box_table) Q.box_table = induced_unary([&](elem a) { return A.box(a); });
  if (A.invol_table) Q.invol_table = induced_unary([&](elem a) { return A.invol(a); });
  if (A.dualneg_table) {
    Q.dualneg_table = induced_unary([&](elem a) { return A.dualneg(a); });
  }

  auto              cf = canonical_form(Q);
  std::vector<elem> proj(A.n);
  for (elem a = 0; a < A.n; ++a) proj[a] = cf.relabel[theta.block(a)];
  return {std::move(cf.algebra), std::move(proj)};
}

struct Product {
  FiniteAlgebra                      algebra;
  std::vector<std::pair<elem, elem>> coords;  // element of product -> (a, b)

  elem index_of(elem a, elem b) const {
    for (elem i = 0; i < algebra.n; ++i) {
      if (coords[i].first == a && coords[i].second == b) return i;
    }
    throw theorem_violation("pair missing from product");
  }
};

inline Product product_with_coords(FiniteAlgebra const& A, FiniteAlgebra const& B) {
  if (A.cls != B.cls) {
    throw class_error("product of classes " + A.cls.to_string() + " and " + B.cls.to_string());
  }
  int  n    = A.n * B.n;
  auto pair = [&](elem i) { return std::pair<elem, elem>{i / B.n, i % B.n}; };
  auto idx  = [&](elem a, elem b) { return a * B.n + b; };
  auto bin  = [&](BinaryTable const& ta, BinaryTable const& tb) {
    BinaryTable t(n);
    for (elem i = 0; i < n; ++i) {
      for (elem j = 0; j < n; ++j) {
        auto [a1, b1] = pair(i);
        auto [a2, b2] = pair(j);
        t.at(i, j)    = idx(ta(a1, a2), tb(b1, b2));
      }
    }
    return t;
  };
  auto un = [&](UnaryTable const& ta, UnaryTable const& tb) {
    UnaryTable t(n);
    for (elem i = 0; i < n; ++i) t[i] = idx(ta[pair(i).first], tb[pair(i).second]);
    return t;
  };
  FiniteAlgebra P;
  P.name       = A.name + "x" + B.name;
  P.cls        = A.cls;
  P.n          = n;
  P.meet_table = bin(A.meet_table, B.meet_table);
  P.join_table = bin(A.join_table, B.join_table);
  P.impl_table = bin(A.impl_table, B.impl_table);
  if (A.dimpl_table && B.dimpl_table) P.dimpl_table = bin(*A.dimpl_table, *B.dimpl_table);
  if (A.box_table && B.box_table) P.box_table = un(*A.box_table, *B.box_table);
  if (A.invol_table && B.invol_table) P.invol_table = un(*A.invol_table, *B.invol_table);
  if (A.dualneg_table && B.dualneg_table) {
    P.dualneg_table = un(*A.dualneg_table, *B.dualneg_table);
  }
  if (P.operations() != A.operations() || A.operations() != B.operations()) {
    throw class_error("product factors carry different operation tables");
  }
  auto cf = canonical_form(P);
  std::vector<std::pair<elem, elem>> coords(n);
  for (elem i = 0; i < n; ++i) coords[cf.relabel[i]] = pair(i);
  return {std::move(cf.algebra), std::move(coords)};
}

inline FiniteAlgebra product(FiniteAlgebra const& A, FiniteAlgebra const& B) {
  return product_with_coords(A, B).algebra;
}

////////////////////////////////////////////////////////////////////////
// Factor congruences
////////////////////////////////////////////////////////////////////////

/// Checks that map preserves every operation of A into B, and the constants.
inline bool preserves_operations(FiniteAlgebra const& A, FiniteAlgebra const& B,
                                 std::vector<elem> const& map) {
  if (static_cast<int>(map.size()) != A.n) return false;
  if (map[A.bottom()] != B.bottom() || map[A.top()] != B.top()) return false;
  for (Op op : A.operations()) {
    if (!B.has(op)) return false;
    for (elem a = 0; a < A.n; ++a) {
      if (arity(op) == 1) {
        if (map[A.apply(op, a)] != B.apply(op, map[a])) return false;
        continue;
      }
      for (elem b = 0; b < A.n; ++b) {
        if (map[A.apply(op, a, b)] != B.apply(op, map[a], map[b])) return false;
      }
    }
  }
  return true;
}

struct FactorPair {
  Congruence        theta, theta_prime;
  FiniteAlgebra     left, right;   // A/theta, A/theta'
  Product           product;       // left x right
  std::vector<elem> iso;           // a -> (a/theta, a/theta') as product index
};

/// Searches the congruence filters (ascending size, then carrier) for a
/// complement theta' of theta and verifies that a -> (a/theta, a/theta') is
/// an isomorphism onto the product of the quotients.
inline std::optional<FactorPair> factor_complement(FiniteAlgebra const& A,
                                                   Congruence const&    theta) {
  if (!is_compatible(A, theta)) throw structure_error("partition is not a congruence");
  for (auto const& F : all_congruence_filters(A)) {
    Congruence other = to_congruence(A, F);
    if (!meet(theta, other).is_identity() || !join(theta, other).is_all() ||
        !permute(theta, other)) {
      continue;
    }
    auto              q1 = quotient(A, theta);
    auto              q2 = quotient(A, other);
    auto              P  = product_with_coords(q1.algebra, q2.algebra);
    std::vector<elem> iso(A.n);
    std::vector<bool> hit(P.algebra.n, false);
    bool              bijective = P.algebra.n == A.n;
    for (elem a = 0; a < A.n && bijective; ++a) {
      iso[a] = P.index_of(q1.projection[a], q2.projection[a]);
      if (hit[iso[a]]) bijective = false;
      hit[iso[a]] = true;
    }
    if (!bijective || !preserves_operations(A, P.algebra, iso)) continue;
    return FactorPair{theta, other, std::move(q1.algebra), std::move(q2.algebra),
                      std::move(P), std::move(iso)};
  }
  return std::nullopt;
}

inline bool is_simple(FiniteAlgebra const& A) { return all_congruence_filters(A).size() == 2; }

/// Orders algebras by size, then by their (canonical) tables.
inline bool canonical_less(FiniteAlgebra const& x, FiniteAlgebra const& y) {
  if (x.n != y.n) return x.n < y.n;
  auto tuple = [](FiniteAlgebra const& a) {
    std::vector<elem> k = a.meet_table.data();
    if (a.box_table) k.insert(k.end(), a.box_table->begin(), a.box_table->end());
    if (a.invol_table) k.insert(k.end(), a.invol_table->begin(), a.invol_table->end());
    return k;
  };
  return tuple(x) < tuple(y);
}

/// Splits A into simple factors along factor congruences. Factors come back
/// canonical and sorted; their product is checked to be isomorphic to A.
inline std::vector<FiniteAlgebra> decompose_simples(FiniteAlgebra const& A) {
  if (A.trivial()) throw structure_error("decompose_simples needs a nontrivial algebra");
  std::vector<FiniteAlgebra> out;
  std::vector<FiniteAlgebra> work{canonicalize(A)};
  while (!work.empty()) {
    FiniteAlgebra cur = std::move(work.back());
    work.pop_back();
    auto filters = all_congruence_filters(cur);
    if (filters.size() == 2) {
      out.push_back(std::move(cur));
      continue;
    }
    // Smallest proper nontrivial filter: its congruence is the finest
    // nonidentity one of this search order.
    CongruenceFilter const* split = nullptr;
    for (auto const& F : filters) {
      if (F.size() > 1 && F.size() < cur.n) {
        split = &F;
        break;
      }
    }
    if (split == nullptr) throw theorem_violation("no proper congruence on a non-simple algebra");
    auto pair = factor_complement(cur, to_congruence(cur, *split));
    if (!pair) throw theorem_violation("congruence without factor complement");
    work.push_back(std::move(pair->left));
    work.push_back(std::move(pair->right));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i].name = A.name + ".factor" + std::to_string(i);
  }

  FiniteAlgebra prod = out.front();
  for (std::size_t i = 1; i < out.size(); ++i) prod = product(prod, out[i]);
  if (!(canonicalize(prod) == canonicalize(A))) {
    throw theorem_violation("product of simple factors is not isomorphic to the input");
  }
  return out;
}

inline bool has_boolean_hreduct(FiniteAlgebra const& A) {
  for (elem a = 0; a < A.n; ++a) {
    if (A.join(a, A.neg(a)) != A.top()) return false;
  }
  return true;
}

inline ElementSet dense_elements(FiniteAlgebra const& A) {
  ElementSet out;
  for (elem a = 0; a < A.n; ++a) {
    if (A.neg(a) == A.bottom()) out.push_back(a);
  }
  return out;
}

struct BooleanProjection {
  CongruenceFilter filter;  // generated by the dense elements
  Quotient         quotient;
};

/// Quotient by the congruence filter generated by the dense elements. Its
/// h-reduct is checked to be Boolean; for |A| <= 8 every congruence filter
/// with a Boolean quotient is checked to contain that filter.
inline BooleanProjection boolean_projection(FiniteAlgebra const& A) {
  auto F = generated_congfilter(A, dense_elements(A));
  auto q = quotient(A, to_congruence(A, F));
  if (!has_boolean_hreduct(q.algebra)) {
    throw theorem_violation("Boolean projection has a non-Boolean h-reduct");
  }
  if (A.n <= 8) {
    for (auto const& G : all_congruence_filters(A)) {
      bool boolean_quotient = true;
      for (elem a = 0; a < A.n && boolean_quotient; ++a) {
        boolean_quotient = G.contains(A.join(a, A.neg(a)));
      }
      bool above = std::includes(G.carrier.begin(), G.carrier.end(), F.carrier.begin(),
                                 F.carrier.end());
      if (boolean_quotient != above) {
        throw theorem_violation("Boolean quotient not factoring through the projection");
      }
    }
  }
  return {std::move(F), std::move(q)};
}

}  // namespace hdv

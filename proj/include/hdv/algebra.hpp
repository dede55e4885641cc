#pragma once

// Finite Heyting-based algebras: representation, axiom validation for each
// variety class, derived operations and the discriminator term.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hdv/errors.hpp"

namespace hdv {

/// Index of an element of a finite algebra. 0 is the bottom, size-1 the top.
using elem = int;

struct VarietyClass {
  enum class Kind { heyting, ws5, hri, hdp, dht };

  Kind kind = Kind::ws5;
  int  level = 0;  // only for hdp and dht, otherwise 0

  static VarietyClass heyting() { return {Kind::heyting, 0}; }
  static VarietyClass ws5() { return {Kind::ws5, 0}; }
  static VarietyClass hri() { return {Kind::hri, 0}; }
  static VarietyClass hdp(int n) { return {Kind::hdp, n}; }
  static VarietyClass dht(int n) { return {Kind::dht, n}; }

  bool has_level() const { return kind == Kind::hdp || kind == Kind::dht; }

  /// Classes whose algebras carry an interior operator (everything except
  /// plain Heyting algebras).
  bool has_box() const { return kind != Kind::heyting; }

  std::string kind_name() const {
    switch (kind) {
      case Kind::heyting: return "heyting";
      case Kind::ws5: return "ws5";
      case Kind::hri: return "hri";
      case Kind::hdp: return "hdp";
      case Kind::dht: return "dht";
    }
    return "?";
  }

  /// "ws5", "hri", "heyting", "hdp:2", "dht:1".
  std::string to_string() const {
    return has_level() ? kind_name() + ":" + std::to_string(level) : kind_name();
  }

  static std::optional<Kind> parse_kind(std::string_view s) {
    if (s == "heyting") return Kind::heyting;
    if (s == "ws5") return Kind::ws5;
    if (s == "hri") return Kind::hri;
    if (s == "hdp") return Kind::hdp;
    if (s == "dht") return Kind::dht;
    return std::nullopt;
  }

  static VarietyClass parse(std::string_view s) {
    auto colon = s.find(':');
    auto kind  = parse_kind(s.substr(0, colon));
    if (!kind) {
      throw structure_error("unknown variety class '" + std::string(s) + "'");
    }
    VarietyClass vc{*kind, 0};
    if (colon != std::string_view::npos) {
      auto digits = s.substr(colon + 1);
      if (digits.empty() ||
          !std::all_of(digits.begin(), digits.end(),
                       [](char c) { return c >= '0' && c <= '9'; })) {
        throw structure_error("bad level in class '" + std::string(s) + "'");
      }
      vc.level = std::stoi(std::string(digits));
    }
    vc.check();
    return vc;
  }

  void check() const {
    if (has_level() && level < 1) {
      throw structure_error("class " + kind_name() + " needs a level >= 1");
    }
    if (!has_level() && level != 0) {
      throw structure_error("class " + kind_name() + " takes no level");
    }
  }

  bool operator==(VarietyClass const&) const = default;
};

/// Square operation table, row = left argument.
class BinaryTable {
 public:
  BinaryTable() = default;
  explicit BinaryTable(int n, elem fill = 0)
      : n_(n), data_(static_cast<std::size_t>(n) * n, fill) {}

  int size() const { return n_; }

  elem operator()(elem a, elem b) const { return data_[index(a, b)]; }
  elem& at(elem a, elem b) { return data_[index(a, b)]; }

  std::vector<elem> const& data() const { return data_; }

  bool operator==(BinaryTable const&) const = default;

 private:
  std::size_t index(elem a, elem b) const {
    return static_cast<std::size_t>(a) * n_ + b;
  }

  int               n_ = 0;
  std::vector<elem> data_;
};

using UnaryTable = std::vector<elem>;

/// Stored operations. Constants 0 and 1 are the fixed indices 0 and size-1.
enum class Op { meet, join, impl, dimpl, box, invol, dualneg };

inline constexpr Op all_ops[] = {Op::meet,  Op::join,  Op::impl,   Op::dimpl,
                                 Op::box,   Op::invol, Op::dualneg};

constexpr int arity(Op op) {
  return (op == Op::box || op == Op::invol || op == Op::dualneg) ? 1 : 2;
}

constexpr std::string_view op_name(Op op) {
  switch (op) {
    case Op::meet: return "meet";
    case Op::join: return "join";
    case Op::impl: return "impl";
    case Op::dimpl: return "dimpl";
    case Op::box: return "box";
    case Op::invol: return "invol";
    case Op::dualneg: return "dualneg";
  }
  return "?";
}

struct FiniteAlgebra {
  std::string  name;
  VarietyClass cls;
  int          n = 0;

  BinaryTable                meet_table, join_table, impl_table;
  std::optional<UnaryTable>  box_table, invol_table, dualneg_table;
  std::optional<BinaryTable> dimpl_table;

  int  size() const { return n; }
  elem bottom() const { return 0; }
  elem top() const { return n - 1; }
  bool trivial() const { return n == 1; }

  elem meet(elem a, elem b) const { return meet_table(a, b); }
  elem join(elem a, elem b) const { return join_table(a, b); }
  elem impl(elem a, elem b) const { return impl_table(a, b); }
  elem neg(elem a) const { return impl_table(a, 0); }
  elem iff(elem a, elem b) const { return meet(impl(a, b), impl(b, a)); }
  bool leq(elem a, elem b) const { return meet_table(a, b) == a; }

  elem box(elem a) const { return require(box_table, Op::box)[a]; }
  elem invol(elem a) const { return require(invol_table, Op::invol)[a]; }
  elem dualneg(elem a) const { return require(dualneg_table, Op::dualneg)[a]; }
  elem dimpl(elem a, elem b) const {
    if (!dimpl_table) unavailable(Op::dimpl);
    return (*dimpl_table)(a, b);
  }
  elem diamond(elem a) const { return neg(box(neg(a))); }

  /// The box when present, the identity on plain Heyting algebras. Filters
  /// and congruences are defined through this, so that h-filters of a
  /// Heyting algebra are its congruence filters.
  elem interior(elem a) const { return box_table ? (*box_table)[a] : a; }

  bool has(Op op) const {
    switch (op) {
      case Op::meet:
      case Op::join:
      case Op::impl: return true;
      case Op::dimpl: return dimpl_table.has_value();
      case Op::box: return box_table.has_value();
      case Op::invol: return invol_table.has_value();
      case Op::dualneg: return dualneg_table.has_value();
    }
    return false;
  }

  elem apply(Op op, elem a, elem b = 0) const {
    switch (op) {
      case Op::meet: return meet(a, b);
      case Op::join: return join(a, b);
      case Op::impl: return impl(a, b);
      case Op::dimpl: return dimpl(a, b);
      case Op::box: return box(a);
      case Op::invol: return invol(a);
      case Op::dualneg: return dualneg(a);
    }
    return 0;
  }

  /// Operations present on this algebra, in `all_ops` order.
  std::vector<Op> operations() const {
    std::vector<Op> out;
    for (Op op : all_ops) {
      if (has(op)) out.push_back(op);
    }
    return out;
  }

  /// Equality of structure; the name is ignored.
  bool operator==(FiniteAlgebra const& o) const {
    return cls == o.cls && n == o.n && meet_table == o.meet_table &&
           join_table == o.join_table && impl_table == o.impl_table &&
           box_table == o.box_table && invol_table == o.invol_table &&
           dualneg_table == o.dualneg_table && dimpl_table == o.dimpl_table;
  }

 private:
  [[noreturn]] void unavailable(Op op) const {
    throw class_error("operation " + std::string(op_name(op)) +
                      " is not available in class " + cls.to_string());
  }
  UnaryTable const& require(std::optional<UnaryTable> const& t, Op op) const {
    if (!t) unavailable(op);
    return *t;
  }
};

////////////////////////////////////////////////////////////////////////
// Construction helpers
////////////////////////////////////////////////////////////////////////

/// Relative pseudocomplement a -> b = join of all c with a & c <= b.
inline BinaryTable compute_implication(int n, BinaryTable const& meet,
                                       BinaryTable const& join) {
  BinaryTable impl(n);
  for (elem a = 0; a < n; ++a) {
    for (elem b = 0; b < n; ++b) {
      elem r = 0;
      for (elem c = 0; c < n; ++c) {
        elem m = meet(a, c);
        if (meet(m, b) == m) r = join(r, c);
      }
      impl.at(a, b) = r;
    }
  }
  return impl;
}

/// Heyting algebra from a lattice order given as leq[a][b]. Index 0 must be
/// the least and n-1 the greatest element.
inline FiniteAlgebra heyting_from_order(
    std::string name, std::vector<std::vector<bool>> const& leq) {
  int n = static_cast<int>(leq.size());
  if (n < 1) throw structure_error("empty order");
  FiniteAlgebra A;
  A.name       = std::move(name);
  A.cls        = VarietyClass::heyting();
  A.n          = n;
  A.meet_table = BinaryTable(n);
  A.join_table = BinaryTable(n);
  auto bound   = [&](elem a, elem b, bool lower) -> elem {
    elem best = -1;
    for (elem c = 0; c < n; ++c) {
      bool is_bound = lower ? (leq[c][a] && leq[c][b]) : (leq[a][c] && leq[b][c]);
      if (!is_bound) continue;
      if (best < 0 || (lower ? leq[best][c] : leq[c][best])) best = c;
    }
    if (best < 0) throw structure_error("order is not a lattice");
    for (elem c = 0; c < n; ++c) {
      bool is_bound = lower ? (leq[c][a] && leq[c][b]) : (leq[a][c] && leq[b][c]);
      if (is_bound && !(lower ? leq[c][best] : leq[best][c])) {
        throw structure_error("order is not a lattice");
      }
    }
    return best;
  };
  for (elem a = 0; a < n; ++a) {
    for (elem b = 0; b < n; ++b) {
      A.meet_table.at(a, b) = bound(a, b, true);
      A.join_table.at(a, b) = bound(a, b, false);
    }
  }
  A.impl_table = compute_implication(n, A.meet_table, A.join_table);
  return A;
}

/// Least b with a | b = 1. Exists on every finite distributive lattice.
inline UnaryTable compute_dual_pseudocomplement(FiniteAlgebra const& A) {
  UnaryTable out(A.n);
  for (elem a = 0; a < A.n; ++a) {
    elem r = A.top();
    for (elem b = 0; b < A.n; ++b) {
      if (A.join(a, b) == A.top()) r = A.meet(r, b);
    }
    out[a] = r;
  }
  return out;
}

/// c -< a = least b with c <= a | b. Row = c.
inline BinaryTable compute_dual_implication(FiniteAlgebra const& A) {
  BinaryTable out(A.n);
  for (elem c = 0; c < A.n; ++c) {
    for (elem a = 0; a < A.n; ++a) {
      elem r = A.top();
      for (elem b = 0; b < A.n; ++b) {
        if (A.leq(c, A.join(a, b))) r = A.meet(r, b);
      }
      out.at(c, a) = r;
    }
  }
  return out;
}

////////////////////////////////////////////////////////////////////////
// Validation
////////////////////////////////////////////////////////////////////////

struct Violation {
  std::string       axiom;
  std::vector<elem> witness;

  bool operator==(Violation const&) const = default;
};

struct ValidationReport {
  bool                   valid = true;
  std::vector<Violation> violations;

  void add(std::string axiom, std::vector<elem> witness) {
    valid = false;
    violations.push_back({std::move(axiom), std::move(witness)});
  }

  bool has(std::string_view axiom) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](Violation const& v) { return v.axiom == axiom; });
  }
};

/// Thrown when an algebra fails its class axioms where validity is required.
struct axiom_error : error {
  explicit axiom_error(ValidationReport r)
      : error(describe(r)), report(std::move(r)) {}

  ValidationReport report;

 private:
  static std::string describe(ValidationReport const& r) {
    std::string s = "axiom violation";
    if (!r.violations.empty()) {
      s += ": " + r.violations.front().axiom;
      if (r.violations.size() > 1) {
        s += " (and " + std::to_string(r.violations.size() - 1) + " more)";
      }
    }
    return s;
  }
};

namespace detail {

inline void check_binary(BinaryTable const& t, int n, std::string_view what) {
  if (t.size() != n) {
    throw structure_error(std::string(what) + " table has wrong dimension");
  }
  for (elem v : t.data()) {
    if (v < 0 || v >= n) {
      throw structure_error(std::string(what) + " table entry " +
                            std::to_string(v) + " out of range");
    }
  }
}

inline void check_unary(UnaryTable const& t, int n, std::string_view what) {
  if (static_cast<int>(t.size()) != n) {
    throw structure_error(std::string(what) + " table has wrong length");
  }
  for (elem v : t) {
    if (v < 0 || v >= n) {
      throw structure_error(std::string(what) + " table entry " +
                            std::to_string(v) + " out of range");
    }
  }
}

// Interior-operator axioms and Boolean open elements.
inline void check_box_axioms(FiniteAlgebra const& A, ValidationReport& r) {
  auto const& box = *A.box_table;
  int         n   = A.n;
  if (box[A.top()] != A.top()) r.add("box top", {A.top()});
  for (elem a = 0; a < n; ++a) {
    if (!A.leq(box[a], a)) r.add("box deflationary", {a});
    if (box[box[a]] != box[a]) r.add("box idempotent", {a});
  }
  for (elem a = 0; a < n; ++a) {
    for (elem b = 0; b < n; ++b) {
      if (box[A.meet(a, b)] != A.meet(box[a], box[b])) r.add("box meet", {a, b});
      if (box[A.join(a, box[b])] != A.join(box[a], box[b])) {
        r.add("box join open", {a, b});
      }
    }
  }
  for (elem a = 0; a < n; ++a) {
    if (box[a] != a) continue;
    bool complemented = false;
    for (elem c = 0; c < n && !complemented; ++c) {
      complemented = box[c] == c && A.meet(a, c) == A.bottom() &&
                     A.join(a, c) == A.top();
    }
    if (!complemented) r.add("open elements Boolean", {a});
  }
}

inline void check_dualneg_axioms(FiniteAlgebra const& A, UnaryTable const& dn,
                                 int level, ValidationReport& r) {
  int n = A.n;
  for (elem a = 0; a < n; ++a) {
    for (elem b = 0; b < n; ++b) {
      if ((A.join(a, b) == A.top()) != A.leq(dn[a], b)) {
        r.add("dual pseudocomplement", {a, b});
      }
    }
  }
  for (elem a = 0; a < n; ++a) {
    elem x = a;
    for (int i = 0; i < level; ++i) x = A.neg(dn[x]);
    if (A.neg(dn[x]) != x) r.add("dual pseudocomplement level", {a});
  }
}

}  // namespace detail

/// Throws structure_error unless every table has the right shape, entries
/// are in range and the tables present match the class.
inline void check_structure(FiniteAlgebra const& A) {
  A.cls.check();
  if (A.n < 1) throw structure_error("algebra must have at least one element");
  detail::check_binary(A.meet_table, A.n, "meet");
  detail::check_binary(A.join_table, A.n, "join");
  detail::check_binary(A.impl_table, A.n, "impl");
  if (A.box_table) detail::check_unary(*A.box_table, A.n, "box");
  if (A.invol_table) detail::check_unary(*A.invol_table, A.n, "invol");
  if (A.dualneg_table) detail::check_unary(*A.dualneg_table, A.n, "dualneg");
  if (A.dimpl_table) detail::check_binary(*A.dimpl_table, A.n, "dimpl");

  using K     = VarietyClass::Kind;
  K    k      = A.cls.kind;
  auto expect = [&](bool present, bool allowed, bool required, char const* what) {
    if (present && !allowed) {
      throw structure_error(std::string("table ") + what +
                            " not allowed in class " + A.cls.to_string());
    }
    if (!present && required) {
      throw structure_error(std::string("class ") + A.cls.to_string() +
                            " requires table " + what);
    }
  };
  expect(A.box_table.has_value(), k != K::heyting, k == K::ws5, "box");
  expect(A.invol_table.has_value(), k == K::hri, k == K::hri, "invol");
  expect(A.dualneg_table.has_value(), k == K::hdp || k == K::dht, k == K::hdp,
         "dualneg");
  expect(A.dimpl_table.has_value(), k == K::dht, k == K::dht, "dimpl");
}

/// Least level n >= 1 with boxdot^(n+1) = boxdot^n where boxdot = !+.
/// Requires a dual pseudocomplement (or dual implication) table.
inline int infer_level(FiniteAlgebra const& A) {
  if (!A.dualneg_table && !A.dimpl_table) {
    throw class_error("infer_level needs a dual pseudocomplement");
  }
  UnaryTable dn(A.n);
  for (elem a = 0; a < A.n; ++a) {
    dn[a] = A.dimpl_table ? A.dimpl(A.top(), a) : A.dualneg(a);
  }
  UnaryTable cur(A.n);
  for (elem a = 0; a < A.n; ++a) cur[a] = a;
  for (int level = 0;; ++level) {
    UnaryTable next(A.n);
    for (elem a = 0; a < A.n; ++a) next[a] = A.neg(dn[cur[a]]);
    if (next == cur) return std::max(level, 1);
    cur = std::move(next);
  }
}

/// Checks the lattice axioms, residuation and the class-specific axioms.
/// Returns every violation found, in check order. Throws structure_error
/// on malformed tables.
inline ValidationReport validate(FiniteAlgebra const& A) {
  check_structure(A);
  ValidationReport r;
  int              n = A.n;

  for (elem a = 0; a < n; ++a) {
    if (A.meet(a, a) != a) r.add("meet idempotent", {a});
    if (A.join(a, a) != a) r.add("join idempotent", {a});
    if (A.meet(A.bottom(), a) != A.bottom()) r.add("bottom", {a});
    if (A.meet(a, A.top()) != a) r.add("top", {a});
  }
  for (elem a = 0; a < n; ++a) {
    for (elem b = 0; b < n; ++b) {
      if (A.meet(a, b) != A.meet(b, a)) r.add("meet commutative", {a, b});
      if (A.join(a, b) != A.join(b, a)) r.add("join commutative", {a, b});
      if (A.meet(a, A.join(a, b)) != a || A.join(a, A.meet(a, b)) != a) {
        r.add("absorption", {a, b});
      }
    }
  }
  for (elem a = 0; a < n; ++a) {
    for (elem b = 0; b < n; ++b) {
      for (elem c = 0; c < n; ++c) {
        if (A.meet(A.meet(a, b), c) != A.meet(a, A.meet(b, c))) {
          r.add("meet associative", {a, b, c});
        }
        if (A.join(A.join(a, b), c) != A.join(a, A.join(b, c))) {
          r.add("join associative", {a, b, c});
        }
        if (A.meet(a, A.join(b, c)) != A.join(A.meet(a, b), A.meet(a, c))) {
          r.add("distributive", {a, b, c});
        }
      }
    }
  }
  for (elem a = 0; a < n; ++a) {
    for (elem b = 0; b < n; ++b) {
      for (elem c = 0; c < n; ++c) {
        if (A.leq(A.meet(a, b), c) != A.leq(a, A.impl(b, c))) {
          r.add("residuation", {a, b, c});
        }
      }
    }
  }

  using K = VarietyClass::Kind;
  switch (A.cls.kind) {
    case K::heyting: break;
    case K::ws5: detail::check_box_axioms(A, r); break;
    case K::hri:
      for (elem a = 0; a < n; ++a) {
        for (elem b = 0; b < n; ++b) {
          if (A.invol(A.join(a, b)) != A.meet(A.invol(a), A.invol(b))) {
            r.add("involution join", {a, b});
          }
        }
      }
      for (elem a = 0; a < n; ++a) {
        if (A.invol(A.invol(a)) != a) r.add("involution involutive", {a});
        if (A.invol(A.neg(a)) != A.neg(A.neg(a))) r.add("involution negation", {a});
      }
      break;
    case K::hdp: detail::check_dualneg_axioms(A, *A.dualneg_table, A.cls.level, r); break;
    case K::dht: {
      for (elem c = 0; c < n; ++c) {
        for (elem a = 0; a < n; ++a) {
          for (elem b = 0; b < n; ++b) {
            if (A.leq(c, A.join(a, b)) != A.leq(A.dimpl(c, a), b)) {
              r.add("dual residuation", {c, a, b});
            }
          }
        }
      }
      UnaryTable dn(n);
      for (elem a = 0; a < n; ++a) dn[a] = A.dimpl(A.top(), a);
      if (A.dualneg_table) {
        for (elem a = 0; a < n; ++a) {
          if ((*A.dualneg_table)[a] != dn[a]) r.add("dual pseudocomplement derived", {a});
        }
      }
      detail::check_dualneg_axioms(A, dn, A.cls.level, r);
      break;
    }
  }

  // Derived classes: a stored box must be the derived one, and be an S5-like
  // interior operator.
  if (A.box_table && A.cls.kind != K::ws5 && A.cls.kind != K::heyting && r.valid) {
    UnaryTable expected(n);
    if (A.cls.kind == K::hri) {
      for (elem a = 0; a < n; ++a) expected[a] = A.neg(A.invol(a));
    } else {
      for (elem a = 0; a < n; ++a) {
        elem x = a, acc = a;
        for (int i = 1; i <= A.cls.level; ++i) {
          x   = A.neg(A.dimpl_table ? A.dimpl(A.top(), x) : A.dualneg(x));
          acc = A.meet(acc, x);
        }
        expected[a] = acc;
      }
    }
    for (elem a = 0; a < n; ++a) {
      if ((*A.box_table)[a] != expected[a]) r.add("box derived", {a});
    }
    detail::check_box_axioms(A, r);
  }
  return r;
}

/// Fills in the operations that are term-definable in the class: the box of
/// HRI (!~), HDP and DHt (meet of boxdot^i, i <= level) and the dual
/// pseudocomplement of DHt (1 -< a). Throws axiom_error naming the first
/// interior-operator axiom the derived box violates.
inline FiniteAlgebra derive_operations(FiniteAlgebra A) {
  using K = VarietyClass::Kind;
  int n   = A.n;
  switch (A.cls.kind) {
    case K::heyting:
    case K::ws5: return A;
    case K::hri: {
      UnaryTable box(n);
      for (elem a = 0; a < n; ++a) box[a] = A.neg(A.invol(a));
      A.box_table = std::move(box);
      break;
    }
    case K::hdp:
    case K::dht: {
      if (A.cls.kind == K::dht) {
        UnaryTable dn(n);
        for (elem a = 0; a < n; ++a) dn[a] = A.dimpl(A.top(), a);
        A.dualneg_table = std::move(dn);
      }
      UnaryTable box(n);
      for (elem a = 0; a < n; ++a) {
        elem x = a, acc = a;
        for (int i = 1; i <= A.cls.level; ++i) {
          x   = A.neg(A.dualneg(x));
          acc = A.meet(acc, x);
        }
        box[a] = acc;
      }
      A.box_table = std::move(box);
      break;
    }
  }
  ValidationReport r;
  detail::check_box_axioms(A, r);
  if (!r.valid) throw axiom_error(std::move(r));
  return A;
}

/// validate() and throw axiom_error on any violation.
inline void require_valid(FiniteAlgebra const& A) {
  auto r = validate(A);
  if (!r.valid) throw axiom_error(std::move(r));
}

/// t(x, y, z) = ([](x <-> y) & z) | (![](x <-> y) & x). On simple members of
/// the classes here this is the ternary discriminator.
inline elem discriminator_eval(FiniteAlgebra const& A, elem a, elem b, elem c) {
  elem e = A.box(A.iff(a, b));
  return A.join(A.meet(e, c), A.meet(A.neg(e), a));
}

/// The two-element algebra of a class: box = identity, ~ = + = !,
/// a -< b = a & !b. These tables are forced by the axioms on {0, 1}.
inline FiniteAlgebra two_algebra(VarietyClass cls) {
  cls.check();
  FiniteAlgebra A = heyting_from_order("2", {{true, true}, {false, true}});
  A.cls           = cls;
  using K         = VarietyClass::Kind;
  if (cls.has_box()) A.box_table = UnaryTable{0, 1};
  if (cls.kind == K::hri) A.invol_table = UnaryTable{1, 0};
  if (cls.kind == K::hdp || cls.kind == K::dht) A.dualneg_table = UnaryTable{1, 0};
  if (cls.kind == K::dht) A.dimpl_table = compute_dual_implication(A);
  require_valid(A);
  return A;
}

/// The one-element algebra of a class.
inline FiniteAlgebra trivial_algebra(VarietyClass cls) {
  cls.check();
  FiniteAlgebra A = heyting_from_order("1", {{true}});
  A.cls           = cls;
  using K         = VarietyClass::Kind;
  if (cls.has_box()) A.box_table = UnaryTable{0};
  if (cls.kind == K::hri) A.invol_table = UnaryTable{0};
  if (cls.kind == K::hdp || cls.kind == K::dht) A.dualneg_table = UnaryTable{0};
  if (cls.kind == K::dht) A.dimpl_table = BinaryTable(1, 0);
  return A;
}

}  // namespace hdv

#pragma once

// Decision procedures: mh-fullness, projectivity of finite and finitely
// presented algebras, the quasiidentity rho, and the first-order sentence
// alpha that holds in A iff the two-element algebra is a homomorphic image
// of A.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hdv/algebra.hpp"
#include "hdv/morphism.hpp"
#include "hdv/term.hpp"

namespace hdv {

/// First a (ascending) with []a = []!a. Such an a always has []a = 0.
inline std::optional<elem> element_criterion(FiniteAlgebra const& A) {
  for (elem a = 0; a < A.n; ++a) {
    if (A.box(a) != A.box(A.neg(a))) continue;
    if (A.box(a) != A.bottom()) {
      throw theorem_violation("[]a = []!a with []a != 0 in " + A.name);
    }
    return a;
  }
  return std::nullopt;
}

struct MhVerdict {
  bool                        full = false;
  std::optional<Homomorphism> witness;  // onto the two-element algebra
};

/// A is mh-full iff it maps onto every minimal algebra; here the only
/// minimal algebra is the two-element one.
inline MhVerdict mh_full(FiniteAlgebra const& A) {
  MhVerdict v;
  if (A.trivial()) return v;
  v.witness = find_hom(A, two_algebra(A.cls), true);
  v.full    = v.witness.has_value();
  return v;
}

////////////////////////////////////////////////////////////////////////
// First-order formulas
////////////////////////////////////////////////////////////////////////

/// Boolean combination of equations and negated equations.
struct Matrix {
  enum class Kind { eq, neq, all_of, any_of };

  Kind                    kind = Kind::all_of;
  std::optional<Equation> atom;
  std::vector<Matrix>     parts;

  static Matrix eq(Term l, Term r) { return {Kind::eq, Equation{std::move(l), std::move(r)}, {}}; }
  static Matrix neq(Term l, Term r) { return {Kind::neq, Equation{std::move(l), std::move(r)}, {}}; }
  static Matrix all_of(std::vector<Matrix> p) { return {Kind::all_of, std::nullopt, std::move(p)}; }
  static Matrix any_of(std::vector<Matrix> p) { return {Kind::any_of, std::nullopt, std::move(p)}; }

  /// Every atom (equal or not-equal) in left-to-right order.
  template <typename F>
  void for_each_atom(F&& f) const {
    if (atom) {
      f(*this);
      return;
    }
    for (auto const& p : parts) p.for_each_atom(f);
  }

  /// Same shape with every equation r = s replaced by g(r = s).
  template <typename G>
  Matrix map_equations(G&& g) const {
    Matrix out{kind, std::nullopt, {}};
    if (atom) out.atom = g(*atom);
    for (auto const& p : parts) out.parts.push_back(p.map_equations(g));
    return out;
  }
};

enum class Quantifier { exists, forall };

struct FirstOrderFormula {
  std::vector<std::pair<Quantifier, std::string>> prefix;
  Matrix                                          matrix;

  std::vector<std::string> bound_variables() const {
    std::vector<std::string> out;
    for (auto const& [q, v] : prefix) out.push_back(v);
    return out;
  }

  /// Throws eval_error if the matrix uses a variable not bound by the prefix.
  void check_closed() const {
    auto bound = bound_variables();
    matrix.for_each_atom([&](Matrix const& m) {
      std::vector<std::string> used;
      m.atom->lhs.collect(used);
      m.atom->rhs.collect(used);
      for (auto const& v : used) {
        if (std::find(bound.begin(), bound.end(), v) == bound.end()) {
          throw eval_error("free variable '" + v + "' in formula");
        }
      }
    });
  }
};

inline std::string to_string(Matrix const& m) {
  switch (m.kind) {
    case Matrix::Kind::eq: return to_string(m.atom->lhs) + " = " + to_string(m.atom->rhs);
    case Matrix::Kind::neq: return to_string(m.atom->lhs) + " != " + to_string(m.atom->rhs);
    case Matrix::Kind::all_of:
    case Matrix::Kind::any_of: {
      if (m.parts.empty()) return m.kind == Matrix::Kind::all_of ? "true" : "false";
      std::string sep = m.kind == Matrix::Kind::all_of ? " and " : " or ";
      std::string out = "(";
      for (std::size_t i = 0; i < m.parts.size(); ++i) {
        if (i) out += sep;
        out += to_string(m.parts[i]);
      }
      return out + ")";
    }
  }
  return "";
}

inline std::string to_string(FirstOrderFormula const& f) {
  std::string out;
  for (auto const& [q, v] : f.prefix) {
    out += q == Quantifier::exists ? "exists " : "forall ";
    out += v;
    out += ". ";
  }
  return out + to_string(f.matrix);
}

namespace detail {

inline Term apply_op(Op op, Term a, Term b) {
  using namespace terms;
  switch (op) {
    case Op::meet: return meet(std::move(a), std::move(b));
    case Op::join: return join(std::move(a), std::move(b));
    case Op::impl: return impl(std::move(a), std::move(b));
    case Op::dimpl: return dimpl(std::move(a), std::move(b));
    case Op::box: return box(std::move(a));
    case Op::invol: return invol(std::move(a));
    case Op::dualneg: return dualneg(std::move(a));
  }
  return a;
}

inline std::string element_var(elem b) { return "z" + std::to_string(b); }

}  // namespace detail

/// The diagram sentence of a finite algebra M:
///   exists z0..z(n-1) forall z .
///     (every table fact f(z_b..) = z_f(b..), including the constants)
///     and z_i != z_j for i < j
///     and (z = z0 or ... or z = z(n-1)).
/// It holds in C iff C is isomorphic to M.
inline FirstOrderFormula diagram_formula(FiniteAlgebra const& M) {
  using namespace terms;
  auto z = [](elem b) { return var(detail::element_var(b)); };

  std::vector<Matrix> facts;
  facts.push_back(Matrix::eq(z(M.bottom()), zero()));
  facts.push_back(Matrix::eq(z(M.top()), one()));
  for (Op op : M.operations()) {
    for (elem a = 0; a < M.n; ++a) {
      if (arity(op) == 1) {
        facts.push_back(Matrix::eq(detail::apply_op(op, z(a), z(a)), z(M.apply(op, a))));
        continue;
      }
      for (elem b = 0; b < M.n; ++b) {
        facts.push_back(Matrix::eq(detail::apply_op(op, z(a), z(b)), z(M.apply(op, a, b))));
      }
    }
  }
  for (elem i = 0; i < M.n; ++i) {
    for (elem j = i + 1; j < M.n; ++j) facts.push_back(Matrix::neq(z(i), z(j)));
  }
  std::vector<Matrix> cover;
  for (elem b = 0; b < M.n; ++b) cover.push_back(Matrix::eq(var("z"), z(b)));
  facts.push_back(Matrix::any_of(std::move(cover)));

  FirstOrderFormula f;
  for (elem b = 0; b < M.n; ++b) f.prefix.emplace_back(Quantifier::exists, detail::element_var(b));
  f.prefix.emplace_back(Quantifier::forall, "z");
  f.matrix = Matrix::all_of(std::move(facts));
  return f;
}

/// alpha = exists x exists y beta^t, where beta is the diagram sentence of
/// M and every equation r = s in it becomes t(x, y, r) = t(x, y, s).
inline FirstOrderFormula diagram_alpha(FiniteAlgebra const& M) {
  auto              beta = diagram_formula(M);
  FirstOrderFormula alpha;
  alpha.prefix.emplace_back(Quantifier::exists, "x");
  alpha.prefix.emplace_back(Quantifier::exists, "y");
  for (auto const& p : beta.prefix) alpha.prefix.push_back(p);
  alpha.matrix = beta.matrix.map_equations([](Equation const& e) {
    using namespace terms;
    return Equation{discriminator(var("x"), var("y"), e.lhs),
                    discriminator(var("x"), var("y"), e.rhs)};
  });
  return alpha;
}

namespace detail {

// Brute-force model checking. Top-level conjuncts are tested as soon as
// every variable they use is bound; this is sound on nonempty domains.
class FormulaEvaluator {
 public:
  FormulaEvaluator(FiniteAlgebra const& A, FirstOrderFormula const& f)
      : A_(A), f_(f), vars_(f.bound_variables()), values_(vars_.size(), 0) {
    f.check_closed();
    std::vector<Matrix const*> conjuncts;
    if (f.matrix.kind == Matrix::Kind::all_of) {
      for (auto const& p : f.matrix.parts) conjuncts.push_back(&p);
    } else {
      conjuncts.push_back(&f.matrix);
    }
    by_depth_.resize(vars_.size() + 1);
    for (auto const* m : conjuncts) {
      std::size_t depth = 0;
      m->for_each_atom([&](Matrix const& atom) {
        check_term_available(A, atom.atom->lhs);
        check_term_available(A, atom.atom->rhs);
        std::vector<std::string> used;
        atom.atom->lhs.collect(used);
        atom.atom->rhs.collect(used);
        for (auto const& v : used) {
          // Innermost binding of v.
          for (std::size_t i = vars_.size(); i-- > 0;) {
            if (vars_[i] == v) {
              depth = std::max(depth, i + 1);
              break;
            }
          }
        }
      });
      by_depth_[depth].push_back(compile(*m));
    }
  }

  bool run() { return rec(0); }

 private:
  struct Node {
    Matrix::Kind                kind;
    std::optional<CompiledTerm> lhs, rhs;
    std::vector<Node>           parts;
  };

  Node compile(Matrix const& m) {
    Node n{m.kind, std::nullopt, std::nullopt, {}};
    if (m.atom) {
      n.lhs.emplace(m.atom->lhs, vars_);
      n.rhs.emplace(m.atom->rhs, vars_);
    }
    for (auto const& p : m.parts) n.parts.push_back(compile(p));
    return n;
  }

  bool holds(Node const& n) const {
    switch (n.kind) {
      case Matrix::Kind::eq: return n.lhs->eval(A_, values_) == n.rhs->eval(A_, values_);
      case Matrix::Kind::neq: return n.lhs->eval(A_, values_) != n.rhs->eval(A_, values_);
      case Matrix::Kind::all_of:
        for (auto const& p : n.parts) {
          if (!holds(p)) return false;
        }
        return true;
      case Matrix::Kind::any_of:
        for (auto const& p : n.parts) {
          if (holds(p)) return true;
        }
        return false;
    }
    return false;
  }

  bool rec(std::size_t k) {
    for (auto const& c : by_depth_[k]) {
      if (!holds(c)) return false;
    }
    if (k == vars_.size()) return true;
    bool exists = f_.prefix[k].first == Quantifier::exists;
    for (elem a = 0; a < A_.n; ++a) {
      values_[k] = a;
      bool r     = rec(k + 1);
      if (exists && r) return true;
      if (!exists && !r) return false;
    }
    return !exists;
  }

  FiniteAlgebra const&           A_;
  FirstOrderFormula const&       f_;
  std::vector<std::string>       vars_;
  std::vector<elem>              values_;
  std::vector<std::vector<Node>> by_depth_;
};

}  // namespace detail

/// Truth of a closed formula in A, quantifiers ranging over all of A.
inline bool eval_formula(FiniteAlgebra const& A, FirstOrderFormula const& f) {
  return detail::FormulaEvaluator(A, f).run();
}

inline bool eval_alpha(FiniteAlgebra const& A, FirstOrderFormula const& alpha) {
  return eval_formula(A, alpha);
}

/// alpha for the two-element algebra of A's class, evaluated in A.
inline bool eval_alpha(FiniteAlgebra const& A) {
  return eval_formula(A, diagram_alpha(two_algebra(A.cls)));
}

////////////////////////////////////////////////////////////////////////
// Projectivity
////////////////////////////////////////////////////////////////////////

struct ProjectivityVerdict {
  bool projective = false;

  // Each criterion phrased so that true means "projective".
  bool hom_onto_two      = false;
  bool element_criterion = false;  // no a with []a = []!a
  bool rho               = false;
  bool alpha             = false;

  std::optional<Homomorphism> hom;          // onto 2, when projective
  std::optional<elem>         element;      // []a = []!a, when not
  std::optional<Assignment>   rho_witness;  // when rho fails
};

/// Evaluates the four equivalent criteria independently and throws
/// theorem_violation if they disagree.
inline ProjectivityVerdict decide_projective_finite(FiniteAlgebra const& A) {
  if (A.trivial()) throw structure_error("projectivity is decided for nontrivial algebras");
  if (!A.box_table) throw class_error("class " + A.cls.to_string() + " has no box");
  ProjectivityVerdict v;
  auto                mh = mh_full(A);
  v.hom_onto_two         = mh.full;
  v.hom                  = mh.witness;
  v.element              = element_criterion(A);
  v.element_criterion    = !v.element.has_value();
  auto q                 = check_quasiidentity(A, rho());
  v.rho                  = q.holds;
  v.rho_witness          = q.witness;
  v.alpha                = eval_alpha(A);
  if (v.hom_onto_two != v.element_criterion || v.hom_onto_two != v.rho ||
      v.hom_onto_two != v.alpha) {
    throw theorem_violation("projectivity criteria disagree on " + A.name);
  }
  v.projective = v.hom_onto_two;
  return v;
}

struct PresentationVerdict {
  bool                      projective = false;
  std::optional<Assignment> certificate;  // satisfying assignment into 2
};

/// F(X, D) is projective iff the conjunction of D is satisfiable in the
/// two-element algebra. The certificate is the lexicographically first
/// satisfying assignment; it defines a homomorphism onto 2. When D is
/// unsatisfiable the presented algebra may also be trivial.
inline PresentationVerdict decide_projective_fp(VarietyClass cls, DefiningPair const& d) {
  if (!cls.has_box()) throw class_error("class " + cls.to_string() + " has no box");
  PresentationVerdict v;
  v.certificate = satisfy_atoms(two_algebra(cls), d);
  v.projective  = v.certificate.has_value();
  return v;
}

////////////////////////////////////////////////////////////////////////
// Primitivity
////////////////////////////////////////////////////////////////////////

struct PrimitiveEntry {
  std::string               name;
  bool                      rho_holds = false;
  std::optional<Assignment> witness;
};

struct PrimitiveReport {
  std::vector<PrimitiveEntry> entries;
  bool                        primitive = true;
};

/// The quasivariety generated by finitely many finite algebras is primitive
/// iff rho holds in each of them.
inline PrimitiveReport primitive_report(std::vector<FiniteAlgebra> const& algebras) {
  PrimitiveReport r;
  for (std::size_t i = 0; i < algebras.size(); ++i) {
    auto const& A = algebras[i];
    if (i > 0 && A.cls != algebras.front().cls) {
      throw class_error("primitive_report needs algebras of one class");
    }
    auto q = check_quasiidentity(A, rho());
    r.entries.push_back({A.name, q.holds, q.witness});
    r.primitive = r.primitive && q.holds;
  }
  return r;
}

}  // namespace hdv

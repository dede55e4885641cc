#pragma once

// Terms over the signature (& | -> -< ! ~ + [] <> 0 1), a parser for their
// concrete syntax, evaluation in finite algebras, defining pairs and
// quasiidentities.
//
// Grammar, lowest precedence first:
//
//   term    := join ( ("->" | "-<") term )?        right associative
//   join    := meet ( "|" meet )*
//   meet    := unary ( "&" unary )*
//   unary   := ("!" | "~" | "+" | "[]" | "<>") unary | atom
//   atom    := "0" | "1" | identifier | "(" term ")"

#include <cctype>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hdv/algebra.hpp"

namespace hdv {

class Term {
 public:
  enum class Kind {
    var,
    zero,
    one,
    meet,
    join,
    impl,
    dimpl,
    neg,
    invol,
    dualneg,
    box,
    diamond
  };

  static Term var(std::string name) { return Term(Kind::var, std::move(name), {}); }
  static Term zero() { return Term(Kind::zero, {}, {}); }
  static Term one() { return Term(Kind::one, {}, {}); }
  static Term unary(Kind k, Term t) { return Term(k, {}, {std::move(t)}); }
  static Term binary(Kind k, Term l, Term r) {
    return Term(k, {}, {std::move(l), std::move(r)});
  }

  Kind               kind() const { return node_->kind; }
  std::string const& name() const { return node_->name; }
  std::size_t        arity() const { return node_->args.size(); }
  Term const&        arg(std::size_t i) const { return node_->args[i]; }
  Term const&        lhs() const { return node_->args[0]; }
  Term const&        rhs() const { return node_->args[1]; }

  bool is_binary() const { return arity() == 2; }
  bool is_unary() const { return arity() == 1; }

  bool operator==(Term const& o) const {
    if (node_ == o.node_) return true;
    return node_->kind == o.node_->kind && node_->name == o.node_->name &&
           node_->args == o.node_->args;
  }

  /// Variables in order of first occurrence (left to right).
  std::vector<std::string> variables() const {
    std::vector<std::string> out;
    collect(out);
    return out;
  }

  void collect(std::vector<std::string>& out) const {
    if (kind() == Kind::var) {
      if (std::find(out.begin(), out.end(), name()) == out.end()) out.push_back(name());
      return;
    }
    for (auto const& a : node_->args) a.collect(out);
  }

 private:
  struct Node {
    Kind              kind;
    std::string       name;
    std::vector<Term> args;
  };

  Term(Kind k, std::string name, std::vector<Term> args)
      : node_(std::make_shared<Node const>(Node{k, std::move(name), std::move(args)})) {}

  std::shared_ptr<Node const> node_;
};

/// Term builders used when constructing formulas in code.
namespace terms {
inline Term var(std::string n) { return Term::var(std::move(n)); }
inline Term zero() { return Term::zero(); }
inline Term one() { return Term::one(); }
inline Term meet(Term a, Term b) { return Term::binary(Term::Kind::meet, std::move(a), std::move(b)); }
inline Term join(Term a, Term b) { return Term::binary(Term::Kind::join, std::move(a), std::move(b)); }
inline Term impl(Term a, Term b) { return Term::binary(Term::Kind::impl, std::move(a), std::move(b)); }
inline Term dimpl(Term a, Term b) { return Term::binary(Term::Kind::dimpl, std::move(a), std::move(b)); }
inline Term neg(Term a) { return Term::unary(Term::Kind::neg, std::move(a)); }
inline Term invol(Term a) { return Term::unary(Term::Kind::invol, std::move(a)); }
inline Term dualneg(Term a) { return Term::unary(Term::Kind::dualneg, std::move(a)); }
inline Term box(Term a) { return Term::unary(Term::Kind::box, std::move(a)); }
inline Term diamond(Term a) { return Term::unary(Term::Kind::diamond, std::move(a)); }
inline Term iff(Term a, Term b) { return meet(impl(a, b), impl(b, a)); }

/// t(x, y, z) = ([](x <-> y) & z) | (![](x <-> y) & x)
inline Term discriminator(Term x, Term y, Term z) {
  Term e = box(iff(x, y));
  return join(meet(e, std::move(z)), meet(neg(e), std::move(x)));
}
}  // namespace terms

////////////////////////////////////////////////////////////////////////
// Printing
////////////////////////////////////////////////////////////////////////

namespace detail {

inline int precedence(Term::Kind k) {
  using K = Term::Kind;
  switch (k) {
    case K::impl:
    case K::dimpl: return 1;
    case K::join: return 2;
    case K::meet: return 3;
    case K::neg:
    case K::invol:
    case K::dualneg:
    case K::box:
    case K::diamond: return 4;
    default: return 5;
  }
}

inline std::string_view symbol(Term::Kind k) {
  using K = Term::Kind;
  switch (k) {
    case K::meet: return "&";
    case K::join: return "|";
    case K::impl: return "->";
    case K::dimpl: return "-<";
    case K::neg: return "!";
    case K::invol: return "~";
    case K::dualneg: return "+";
    case K::box: return "[]";
    case K::diamond: return "<>";
    case K::zero: return "0";
    case K::one: return "1";
    default: return "";
  }
}

inline void print(Term const& t, int min_prec, std::string& out) {
  int  p      = precedence(t.kind());
  bool parens = p < min_prec;
  if (parens) out += '(';
  if (t.kind() == Term::Kind::var) {
    out += t.name();
  } else if (t.arity() == 0) {
    out += symbol(t.kind());
  } else if (t.is_unary()) {
    out += symbol(t.kind());
    print(t.lhs(), 4, out);
  } else {
    bool right_assoc = p == 1;
    print(t.lhs(), right_assoc ? p + 1 : p, out);
    out += ' ';
    out += symbol(t.kind());
    out += ' ';
    print(t.rhs(), right_assoc ? p : p + 1, out);
  }
  if (parens) out += ')';
}

}  // namespace detail

/// Canonical printer: minimal parentheses, parse(to_string(t)) == t.
inline std::string to_string(Term const& t) {
  std::string out;
  detail::print(t, 0, out);
  return out;
}

////////////////////////////////////////////////////////////////////////
// Parsing
////////////////////////////////////////////////////////////////////////

namespace detail {

class TermParser {
 public:
  explicit TermParser(std::string_view src) : src_(src) {}

  Term parse() {
    skip_ws();
    if (pos_ >= src_.size()) throw parse_error("empty term", pos_);
    Term t = parse_impl();
    skip_ws();
    if (pos_ < src_.size()) unexpected();
    return t;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(std::string_view tok) {
    skip_ws();
    if (src_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  [[noreturn]] void unexpected() {
    if (pos_ >= src_.size()) throw parse_error("unexpected end of input", pos_);
    throw parse_error("unexpected token '" + std::string(1, src_[pos_]) + "'", pos_);
  }

  Term parse_impl() {
    Term lhs = parse_join();
    if (accept("->")) return terms::impl(std::move(lhs), parse_impl());
    if (accept("-<")) return terms::dimpl(std::move(lhs), parse_impl());
    return lhs;
  }

  Term parse_join() {
    Term t = parse_meet();
    while (accept("|")) t = terms::join(std::move(t), parse_meet());
    return t;
  }

  Term parse_meet() {
    Term t = parse_unary();
    while (accept("&")) t = terms::meet(std::move(t), parse_unary());
    return t;
  }

  Term parse_unary() {
    using K = Term::Kind;
    if (accept("!")) return Term::unary(K::neg, parse_unary());
    if (accept("~")) return Term::unary(K::invol, parse_unary());
    if (accept("+")) return Term::unary(K::dualneg, parse_unary());
    if (accept("[]")) return Term::unary(K::box, parse_unary());
    if (accept("<>")) return Term::unary(K::diamond, parse_unary());
    return parse_atom();
  }

  Term parse_atom() {
    skip_ws();
    if (pos_ >= src_.size()) unexpected();
    char c = src_[pos_];
    if (c == '(') {
      std::size_t open = pos_++;
      Term        t    = parse_impl();
      if (!accept(")")) {
        if (pos_ >= src_.size()) {
          throw parse_error("unclosed parenthesis opened", open);
        }
        unexpected();
      }
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;
      }
      auto digits = src_.substr(start, pos_ - start);
      if (digits == "0") return Term::zero();
      if (digits == "1") return Term::one();
      throw parse_error("unknown constant '" + std::string(digits) + "'", start);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        ++pos_;
      }
      return Term::var(std::string(src_.substr(start, pos_ - start)));
    }
    unexpected();
  }

  std::string_view src_;
  std::size_t      pos_ = 0;
};

}  // namespace detail

inline Term parse_term(std::string_view src) { return detail::TermParser(src).parse(); }

////////////////////////////////////////////////////////////////////////
// Evaluation
////////////////////////////////////////////////////////////////////////

/// Ops a term needs from the algebra's class.
inline void check_term_available(FiniteAlgebra const& A, Term const& t) {
  using K      = Term::Kind;
  auto missing = [&](char const* what) {
    throw eval_error(std::string("operation ") + what + " is not available in class " +
                     A.cls.to_string());
  };
  switch (t.kind()) {
    case K::dimpl:
      if (!A.dimpl_table) missing("-<");
      break;
    case K::invol:
      if (!A.invol_table) missing("~");
      break;
    case K::dualneg:
      if (!A.dualneg_table) missing("+");
      break;
    case K::box:
      if (!A.box_table) missing("[]");
      break;
    case K::diamond:
      if (!A.box_table) missing("<>");
      break;
    default: break;
  }
  for (std::size_t i = 0; i < t.arity(); ++i) check_term_available(A, t.arg(i));
}

/// A term flattened to postfix code over numbered variable slots. Used by
/// every exhaustive search, which evaluates the same terms many times.
class CompiledTerm {
 public:
  CompiledTerm(Term const& t, std::vector<std::string> const& slots) {
    compile(t, slots);
  }

  elem eval(FiniteAlgebra const& A, std::span<elem const> values) const {
    using K = Term::Kind;
    elem stack[64] = {};
    std::vector<elem> big;
    elem* sp_base = stack;
    if (depth_ > 64) {
      big.resize(depth_);
      sp_base = big.data();
    }
    elem* sp = sp_base;
    for (auto const& in : code_) {
      switch (in.kind) {
        case K::var: *sp++ = values[in.slot]; break;
        case K::zero: *sp++ = A.bottom(); break;
        case K::one: *sp++ = A.top(); break;
        case K::neg: sp[-1] = A.neg(sp[-1]); break;
        case K::invol: sp[-1] = A.invol(sp[-1]); break;
        case K::dualneg: sp[-1] = A.dualneg(sp[-1]); break;
        case K::box: sp[-1] = A.box(sp[-1]); break;
        case K::diamond: sp[-1] = A.diamond(sp[-1]); break;
        case K::meet: --sp; sp[-1] = A.meet(sp[-1], sp[0]); break;
        case K::join: --sp; sp[-1] = A.join(sp[-1], sp[0]); break;
        case K::impl: --sp; sp[-1] = A.impl(sp[-1], sp[0]); break;
        case K::dimpl: --sp; sp[-1] = A.dimpl(sp[-1], sp[0]); break;
      }
    }
    return sp_base[0];
  }

 private:
  struct Instr {
    Term::Kind kind;
    int        slot;
  };

  int compile(Term const& t, std::vector<std::string> const& slots) {
    int depth = 0;
    if (t.kind() == Term::Kind::var) {
      auto it = std::find(slots.begin(), slots.end(), t.name());
      if (it == slots.end()) throw eval_error("unbound variable '" + t.name() + "'");
      code_.push_back({Term::Kind::var, static_cast<int>(it - slots.begin())});
      depth = 1;
    } else if (t.arity() == 0) {
      code_.push_back({t.kind(), -1});
      depth = 1;
    } else if (t.is_unary()) {
      depth = compile(t.lhs(), slots);
      code_.push_back({t.kind(), -1});
    } else {
      int l = compile(t.lhs(), slots);
      int r = compile(t.rhs(), slots);
      depth = std::max(l, r + 1);
      code_.push_back({t.kind(), -1});
    }
    depth_ = std::max(depth_, depth);
    return depth;
  }

  std::vector<Instr> code_;
  int                depth_ = 0;
};

using Env = std::map<std::string, elem>;

/// An assignment of elements to variables, in declaration order.
using Assignment = std::vector<std::pair<std::string, elem>>;

inline elem eval_term(FiniteAlgebra const& A, Term const& t, Env const& env) {
  check_term_available(A, t);
  std::vector<std::string> slots;
  std::vector<elem>        values;
  for (auto const& [k, v] : env) {
    if (v < 0 || v >= A.n) throw eval_error("value of '" + k + "' out of range");
    slots.push_back(k);
    values.push_back(v);
  }
  return CompiledTerm(t, slots).eval(A, values);
}

/// Visits all |A|^k tuples in lexicographic order (first slot most
/// significant). Stops when f returns false.
template <typename F>
void for_each_tuple(int n, std::size_t k, F&& f) {
  std::vector<elem> v(k, 0);
  while (true) {
    if (!f(std::span<elem const>(v))) return;
    std::size_t i = k;
    while (i > 0) {
      if (++v[i - 1] < n) break;
      v[i - 1] = 0;
      --i;
    }
    if (i == 0) return;
  }
}

////////////////////////////////////////////////////////////////////////
// Equations, defining pairs, quasiidentities
////////////////////////////////////////////////////////////////////////

struct Equation {
  Term lhs;
  Term rhs;

  bool operator==(Equation const&) const = default;
};

inline Equation parse_equation(std::string_view lhs, std::string_view rhs) {
  return {parse_term(lhs), parse_term(rhs)};
}

inline std::string to_string(Equation const& e) {
  return to_string(e.lhs) + " = " + to_string(e.rhs);
}

/// A presentation (X, D): generators X and defining relations D.
struct DefiningPair {
  std::vector<std::string> vars;
  std::vector<Equation>    atoms;

  /// Throws eval_error if some relation uses a variable outside X or X has
  /// repeats.
  void check() const {
    for (std::size_t i = 0; i < vars.size(); ++i) {
      for (std::size_t j = i + 1; j < vars.size(); ++j) {
        if (vars[i] == vars[j]) throw eval_error("duplicate variable '" + vars[i] + "'");
      }
    }
    for (auto const& e : atoms) {
      std::vector<std::string> used;
      e.lhs.collect(used);
      e.rhs.collect(used);
      for (auto const& v : used) {
        if (std::find(vars.begin(), vars.end(), v) == vars.end()) {
          throw eval_error("variable '" + v + "' not among the generators");
        }
      }
    }
  }
};

struct Quasiidentity {
  std::vector<Equation> premises;
  Equation              conclusion;

  /// Variables in order of first occurrence, premises first.
  std::vector<std::string> variables() const {
    std::vector<std::string> out;
    for (auto const& e : premises) {
      e.lhs.collect(out);
      e.rhs.collect(out);
    }
    conclusion.lhs.collect(out);
    conclusion.rhs.collect(out);
    return out;
  }
};

/// ![]x & ![]!x = 1  =>  0 = 1. Fails in A iff some a has []a = []!a = 0.
inline Quasiidentity rho() {
  return {{parse_equation("![]x & ![]!x", "1")}, parse_equation("0", "1")};
}

struct QuasiidentityResult {
  bool                      holds = true;
  std::optional<Assignment> witness;  // lexicographically first failing env
};

inline QuasiidentityResult check_quasiidentity(FiniteAlgebra const& A,
                                               Quasiidentity const& q) {
  auto vars = q.variables();
  struct Compiled {
    CompiledTerm l, r;
  };
  std::vector<Compiled> premises;
  for (auto const& e : q.premises) {
    check_term_available(A, e.lhs);
    check_term_available(A, e.rhs);
    premises.push_back({CompiledTerm(e.lhs, vars), CompiledTerm(e.rhs, vars)});
  }
  check_term_available(A, q.conclusion.lhs);
  check_term_available(A, q.conclusion.rhs);
  Compiled concl{CompiledTerm(q.conclusion.lhs, vars), CompiledTerm(q.conclusion.rhs, vars)};

  QuasiidentityResult result;
  for_each_tuple(A.n, vars.size(), [&](std::span<elem const> v) {
    for (auto const& p : premises) {
      if (p.l.eval(A, v) != p.r.eval(A, v)) return true;
    }
    if (concl.l.eval(A, v) == concl.r.eval(A, v)) return true;
    Assignment w;
    for (std::size_t i = 0; i < vars.size(); ++i) w.emplace_back(vars[i], v[i]);
    result.holds   = false;
    result.witness = std::move(w);
    return false;
  });
  return result;
}

/// Lexicographically first assignment of X into A satisfying every relation
/// of D, or nullopt.
inline std::optional<Assignment> satisfy_atoms(FiniteAlgebra const& A, DefiningPair const& d) {
  d.check();
  std::vector<std::pair<CompiledTerm, CompiledTerm>> atoms;
  for (auto const& e : d.atoms) {
    check_term_available(A, e.lhs);
    check_term_available(A, e.rhs);
    atoms.emplace_back(CompiledTerm(e.lhs, d.vars), CompiledTerm(e.rhs, d.vars));
  }
  std::optional<Assignment> found;
  for_each_tuple(A.n, d.vars.size(), [&](std::span<elem const> v) {
    for (auto const& [l, r] : atoms) {
      if (l.eval(A, v) != r.eval(A, v)) return true;
    }
    Assignment w;
    for (std::size_t i = 0; i < d.vars.size(); ++i) w.emplace_back(d.vars[i], v[i]);
    found = std::move(w);
    return false;
  });
  return found;
}

}  // namespace hdv

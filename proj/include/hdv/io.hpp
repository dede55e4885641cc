#pragma once

// JSON reading and writing of algebras, presentations and quasiidentities.
//
// Algebra:
//   {"name": "...", "class": {"kind": "hdp", "level": 1}, "size": n,
//    "meet": [[..]], "join": [[..]], "impl": [[..]],
//    "box": [..]?, "invol": [..]?, "dualneg": [..]?, "dimpl": [[..]]?}
// Presentation:   {"vars": ["x"], "atoms": [{"lhs": "x", "rhs": "1"}]}
// Quasiidentity:  {"premises": [{"lhs", "rhs"}], "conclusion": {"lhs", "rhs"}}

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hdv/algebra.hpp"
#include "hdv/term.hpp"

namespace hdv {

using json = nlohmann::ordered_json;

namespace detail {

inline json parse_json_text(std::string const& text, std::string const& where) {
  try {
    return json::parse(text);
  } catch (json::parse_error const& e) {
    throw parse_error(where + ": malformed JSON (" + e.what() + ")", e.byte);
  }
}

inline json const& field(json const& j, char const* key, std::string const& path) {
  if (!j.is_object()) throw structure_error(path + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw structure_error(path + ": missing key \"" + key + "\"");
  return *it;
}

inline int read_int(json const& j, std::string const& path) {
  if (!j.is_number_integer()) throw structure_error(path + ": expected an integer");
  return j.get<int>();
}

inline std::string read_string(json const& j, std::string const& path) {
  if (!j.is_string()) throw structure_error(path + ": expected a string");
  return j.get<std::string>();
}

inline UnaryTable read_unary(json const& j, int n, std::string const& path) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) {
    throw structure_error(path + ": expected an array of " + std::to_string(n) + " entries");
  }
  UnaryTable t(n);
  for (int a = 0; a < n; ++a) {
    auto p = path + "[" + std::to_string(a) + "]";
    t[a]   = read_int(j[a], p);
    if (t[a] < 0 || t[a] >= n) throw structure_error(p + ": entry out of range");
  }
  return t;
}

inline BinaryTable read_binary(json const& j, int n, std::string const& path) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) {
    throw structure_error(path + ": expected " + std::to_string(n) + " rows");
  }
  BinaryTable t(n);
  for (int a = 0; a < n; ++a) {
    auto row = read_unary(j[a], n, path + "[" + std::to_string(a) + "]");
    for (int b = 0; b < n; ++b) t.at(a, b) = row[b];
  }
  return t;
}

inline std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline void write_file(std::string const& path, std::string const& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw error("cannot write " + path);
  out << text;
}

}  // namespace detail

/// Builds an algebra from its JSON form, without checking axioms. Throws
/// structure_error naming the offending location.
inline FiniteAlgebra algebra_from_json(json const& j) {
  FiniteAlgebra A;
  if (!j.is_object()) throw structure_error("algebra: expected an object");
  if (j.contains("name")) A.name = detail::read_string(j["name"], "name");

  auto const& c    = detail::field(j, "class", "algebra");
  auto        kind = VarietyClass::parse_kind(detail::read_string(detail::field(c, "kind", "class"), "class.kind"));
  if (!kind) throw structure_error("class.kind: unknown class");
  A.cls.kind = *kind;
  bool level_given = c.contains("level");
  if (level_given) A.cls.level = detail::read_int(c["level"], "class.level");

  A.n = detail::read_int(detail::field(j, "size", "algebra"), "size");
  if (A.n < 1) throw structure_error("size: must be at least 1");
  A.meet_table = detail::read_binary(detail::field(j, "meet", "algebra"), A.n, "meet");
  A.join_table = detail::read_binary(detail::field(j, "join", "algebra"), A.n, "join");
  A.impl_table = detail::read_binary(detail::field(j, "impl", "algebra"), A.n, "impl");
  if (j.contains("box")) A.box_table = detail::read_unary(j["box"], A.n, "box");
  if (j.contains("invol")) A.invol_table = detail::read_unary(j["invol"], A.n, "invol");
  if (j.contains("dualneg")) A.dualneg_table = detail::read_unary(j["dualneg"], A.n, "dualneg");
  if (j.contains("dimpl")) A.dimpl_table = detail::read_binary(j["dimpl"], A.n, "dimpl");

  // A missing level is inferred from the tables.
  if (A.cls.has_level() && !level_given) {
    A.cls.level = 1;
    check_structure(A);
    A.cls.level = infer_level(A);
  }
  check_structure(A);
  return A;
}

/// Parses, validates (axiom_error on failure) and fills in derived
/// operations.
inline FiniteAlgebra parse_algebra(std::string const& text, std::string const& where = "input") {
  auto A = algebra_from_json(detail::parse_json_text(text, where));
  require_valid(A);
  if (!A.box_table || (A.cls.kind == VarietyClass::Kind::dht && !A.dualneg_table)) {
    A = derive_operations(std::move(A));
  }
  return A;
}

inline FiniteAlgebra read_algebra(std::string const& path) {
  return parse_algebra(detail::read_file(path), path);
}

inline json to_json(FiniteAlgebra const& A) {
  json j;
  j["name"] = A.name;
  json c;
  c["kind"] = A.cls.kind_name();
  if (A.cls.has_level()) c["level"] = A.cls.level;
  j["class"] = c;
  j["size"]  = A.n;
  auto bin   = [&](BinaryTable const& t) {
    json rows = json::array();
    for (elem a = 0; a < A.n; ++a) {
      json row = json::array();
      for (elem b = 0; b < A.n; ++b) row.push_back(t(a, b));
      rows.push_back(row);
    }
    return rows;
  };
  j["meet"] = bin(A.meet_table);
  j["join"] = bin(A.join_table);
  j["impl"] = bin(A.impl_table);
  if (A.box_table) j["box"] = *A.box_table;
  if (A.invol_table) j["invol"] = *A.invol_table;
  if (A.dualneg_table) j["dualneg"] = *A.dualneg_table;
  if (A.dimpl_table) j["dimpl"] = bin(*A.dimpl_table);
  return j;
}

namespace detail {

// Single-line JSON with a space after every comma and colon.
inline std::string inline_dump(json const& j) {
  std::string out;
  if (j.is_object()) {
    out = "{";
    for (auto const& [key, value] : j.items()) {
      if (out.size() > 1) out += ", ";
      out += json(key).dump() + ": " + inline_dump(value);
    }
    return out + "}";
  }
  if (j.is_array()) {
    out = "[";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ", ";
      out += inline_dump(j[i]);
    }
    return out + "]";
  }
  return j.dump();
}

}  // namespace detail

/// JSON with one table row per line.
inline std::string format_algebra(FiniteAlgebra const& A) {
  json        j   = to_json(A);
  std::string out = "{\n";
  bool        first = true;
  for (auto const& [key, value] : j.items()) {
    if (!first) out += ",\n";
    first = false;
    out += "  " + json(key).dump() + ": ";
    if (value.is_array() && !value.empty() && value[0].is_array()) {
      out += "[\n";
      for (std::size_t r = 0; r < value.size(); ++r) {
        out += "    " + detail::inline_dump(value[r]);
        out += r + 1 < value.size() ? ",\n" : "\n";
      }
      out += "  ]";
    } else {
      out += detail::inline_dump(value);
    }
  }
  return out + "\n}\n";
}

inline void write_algebra(std::string const& path, FiniteAlgebra const& A) {
  detail::write_file(path, format_algebra(A));
}

namespace detail {

inline Equation read_equation(json const& j, std::string const& path) {
  auto l = read_string(field(j, "lhs", path), path + ".lhs");
  auto r = read_string(field(j, "rhs", path), path + ".rhs");
  try {
    return parse_equation(l, r);
  } catch (parse_error const& e) {
    throw parse_error(path + ": " + e.message, e.position);
  }
}

inline json equation_json(Equation const& e) {
  json j;
  j["lhs"] = to_string(e.lhs);
  j["rhs"] = to_string(e.rhs);
  return j;
}

}  // namespace detail

inline DefiningPair parse_presentation(std::string const& text, std::string const& where = "input") {
  auto         j = detail::parse_json_text(text, where);
  DefiningPair d;
  auto const&  vars = detail::field(j, "vars", "presentation");
  if (!vars.is_array()) throw structure_error("vars: expected an array");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    d.vars.push_back(detail::read_string(vars[i], "vars[" + std::to_string(i) + "]"));
  }
  auto const& atoms = detail::field(j, "atoms", "presentation");
  if (!atoms.is_array()) throw structure_error("atoms: expected an array");
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    d.atoms.push_back(detail::read_equation(atoms[i], "atoms[" + std::to_string(i) + "]"));
  }
  d.check();
  return d;
}

inline DefiningPair read_presentation(std::string const& path) {
  return parse_presentation(detail::read_file(path), path);
}

inline json to_json(DefiningPair const& d) {
  json j;
  j["vars"]  = d.vars;
  j["atoms"] = json::array();
  for (auto const& e : d.atoms) j["atoms"].push_back(detail::equation_json(e));
  return j;
}

inline Quasiidentity parse_quasiidentity(std::string const& text, std::string const& where = "input") {
  auto        j        = detail::parse_json_text(text, where);
  auto const& premises = detail::field(j, "premises", "quasiidentity");
  if (!premises.is_array()) throw structure_error("premises: expected an array");
  std::vector<Equation> ps;
  for (std::size_t i = 0; i < premises.size(); ++i) {
    ps.push_back(detail::read_equation(premises[i], "premises[" + std::to_string(i) + "]"));
  }
  return {std::move(ps), detail::read_equation(detail::field(j, "conclusion", "quasiidentity"), "conclusion")};
}

inline json to_json(Quasiidentity const& q) {
  json j;
  j["premises"] = json::array();
  for (auto const& e : q.premises) j["premises"].push_back(detail::equation_json(e));
  j["conclusion"] = detail::equation_json(q.conclusion);
  return j;
}

inline json to_json(Assignment const& w) {
  json j = json::object();
  for (auto const& [v, a] : w) j[v] = a;
  return j;
}

}  // namespace hdv

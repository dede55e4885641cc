// Command-line front end. Exit codes: 0 success or decided-true,
// 1 decided-false, 2 error, 3 internal theorem violation.

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hdv/catalog.hpp"
#include "hdv/congruence.hpp"
#include "hdv/decision.hpp"
#include "hdv/io.hpp"
#include "hdv/morphism.hpp"
#include "hdv/profile.hpp"

using namespace hdv;

namespace {

bool as_json = false;

// Prints a record either as JSON or as "key: value" lines.
void emit(json const& record) {
  if (as_json) {
    std::cout << record.dump(2) << "\n";
    return;
  }
  for (auto const& [key, value] : record.items()) {
    std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
              << "\n";
  }
}

json violations_json(ValidationReport const& r) {
  json out = json::array();
  for (auto const& v : r.violations) out.push_back({{"axiom", v.axiom}, {"witness", v.witness}});
  return out;
}

json hom_json(Homomorphism const& h) {
  return {{"map", h.map}, {"onto", h.onto}, {"injective", h.injective}};
}

json summary(FiniteAlgebra const& A) {
  return {{"name", A.name}, {"class", A.cls.to_string()}, {"size", A.n}};
}

std::vector<elem> parse_index_list(std::string const& s) {
  std::vector<elem> out;
  std::stringstream in(s);
  std::string       item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (std::exception const&) {
      throw structure_error("bad element index '" + item + "'");
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int cmd_validate(std::string const& path) {
  auto A = algebra_from_json(detail::parse_json_text(detail::read_file(path), path));
  auto r = validate(A);
  emit({{"algebra", A.name}, {"valid", r.valid}, {"violations", violations_json(r)}});
  return r.valid ? 0 : 1;
}

int cmd_profile(std::string const& path) {
  auto A = read_algebra(path);
  auto p = element_profile(A);
  json r = summary(A);
  r["open"]            = p.open;
  r["dense"]           = p.dense;
  r["regular"]         = p.regular;
  r["boolean_hreduct"] = p.boolean_hreduct;
  r["simple"]          = p.simple;
  emit(r);
  return 0;
}

int cmd_homs(std::string const& a, std::string const& b, bool onto, bool count, bool all,
             std::optional<std::size_t> cap) {
  auto A = read_algebra(a);
  auto B = read_algebra(b);
  json r{{"from", A.name}, {"to", B.name}};
  if (count || all) {
    auto res = homs(A, B, count ? HomMode::count : HomMode::all, cap, onto);
    r["count"] = res.count;
    if (all) {
      json list = json::array();
      for (auto const& h : res.homs) list.push_back(hom_json(h));
      r["homs"] = list;
    }
    r["truncated"] = res.truncated;
    emit(r);
    return res.count > 0 ? 0 : 1;
  }
  auto h     = find_hom(A, B, onto);
  r["found"] = h.has_value();
  if (h) r["hom"] = hom_json(*h);
  emit(r);
  return h ? 0 : 1;
}

int cmd_quotient(std::string const& path, std::string const& filter) {
  auto A = read_algebra(path);
  auto F = parse_index_list(filter);
  for (elem a : F) {
    if (a < 0 || a >= A.n) throw structure_error("element index out of range");
  }
  if (!is_congruence_filter(A, F)) throw structure_error("not a congruence filter");
  auto theta = to_congruence(A, CongruenceFilter{F});
  auto q     = quotient(A, theta);
  json r     = summary(A);
  r["filter"]     = F;
  r["blocks"]     = theta.blocks();
  r["projection"] = q.projection;
  r["quotient"]   = to_json(q.algebra);
  emit(r);
  return 0;
}

int cmd_decompose(std::string const& path) {
  auto A       = read_algebra(path);
  auto factors = decompose_simples(A);
  json list    = json::array();
  for (auto const& f : factors) list.push_back(to_json(f));
  json r       = summary(A);
  r["simple_factors"] = factors.size();
  r["factors"]        = list;
  emit(r);
  return 0;
}

int cmd_projective(std::string const& cls_text, std::optional<std::string> const& file,
                   std::optional<std::string> const& presentation) {
  auto cls = VarietyClass::parse(cls_text);
  if (presentation) {
    auto d = read_presentation(*presentation);
    auto v = decide_projective_fp(cls, d);
    json r{{"class", cls.to_string()}, {"presentation", to_json(d)}, {"projective", v.projective}};
    if (v.certificate) {
      r["certificate"] = to_json(*v.certificate);
    } else {
      r["note"] = "relations unsatisfiable in 2: not projective, or the presented algebra is trivial";
    }
    emit(r);
    return v.projective ? 0 : 1;
  }
  auto A = read_algebra(*file);
  if (A.cls != cls) {
    throw class_error("file has class " + A.cls.to_string() + ", expected " + cls.to_string());
  }
  auto v = decide_projective_finite(A);
  json r = summary(A);
  r["projective"]        = v.projective;
  r["hom_onto_two"]      = v.hom_onto_two;
  r["element_criterion"] = v.element_criterion;
  r["rho"]               = v.rho;
  r["alpha"]             = v.alpha;
  if (v.hom) r["hom"] = hom_json(*v.hom);
  if (v.element) r["element"] = *v.element;
  if (v.rho_witness) r["rho_witness"] = to_json(*v.rho_witness);
  emit(r);
  return v.projective ? 0 : 1;
}

int cmd_rho(std::string const& path) {
  auto A = read_algebra(path);
  auto q = check_quasiidentity(A, rho());
  json r = summary(A);
  r["holds"] = q.holds;
  if (q.witness) r["witness"] = to_json(*q.witness);
  emit(r);
  return q.holds ? 0 : 1;
}

int cmd_alpha(std::string const& path, bool show) {
  auto A     = read_algebra(path);
  auto alpha = diagram_alpha(two_algebra(A.cls));
  bool holds = eval_alpha(A, alpha);
  json r     = summary(A);
  r["holds"] = holds;
  if (show) r["formula"] = to_string(alpha);
  emit(r);
  return holds ? 0 : 1;
}

int cmd_retract(std::string const& p, std::string const& b) {
  auto P   = read_algebra(p);
  auto B   = read_algebra(b);
  auto rep = retract_report(P, B);
  json r{{"product", P.name}, {"factor", B.name}, {"retract", rep.direct.has_value()}};
  if (rep.direct) {
    r["retraction"] = rep.direct->retraction.map;
    r["injection"]  = rep.direct->injection.map;
  }
  r["factorised"] = rep.factorised;
  if (rep.via_product) r["via_product"] = *rep.via_product;
  emit(r);
  return rep.direct ? 0 : 1;
}

int cmd_boolproj(std::string const& path) {
  auto A  = read_algebra(path);
  auto bp = boolean_projection(A);
  json r  = summary(A);
  r["filter"]     = bp.filter.carrier;
  r["projection"] = bp.quotient.projection;
  r["quotient"]   = to_json(bp.quotient.algebra);
  emit(r);
  return 0;
}

int cmd_primitive(std::vector<std::string> const& paths) {
  std::vector<FiniteAlgebra> algebras;
  for (auto const& p : paths) algebras.push_back(read_algebra(p));
  auto rep     = primitive_report(algebras);
  json entries = json::array();
  for (auto const& e : rep.entries) {
    json j{{"algebra", e.name}, {"rho", e.rho_holds}};
    if (e.witness) j["witness"] = to_json(*e.witness);
    entries.push_back(j);
  }
  emit({{"primitive", rep.primitive}, {"algebras", entries}});
  return rep.primitive ? 0 : 1;
}

int cmd_catalog(std::string const& cls_text, int max_size, std::string const& out) {
  auto cls     = VarietyClass::parse(cls_text);
  auto catalog = build_catalog(cls, max_size);
  std::filesystem::create_directories(out);
  json names = json::array();
  for (auto const& A : catalog) {
    std::string file = A.name;
    std::replace(file.begin(), file.end(), ':', '_');
    write_algebra((std::filesystem::path(out) / (file + ".json")).string(), A);
    names.push_back(A.name);
  }
  emit({{"class", cls.to_string()}, {"max_size", max_size}, {"count", catalog.size()},
        {"algebras", names}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite Heyting algebras with interior operators: validation, congruences, "
               "homomorphisms and projectivity"};
  app.require_subcommand(1);
  app.add_flag("--json", as_json, "Emit results as JSON");

  std::string file, file2, filter, cls, presentation_file, out_dir;
  std::vector<std::string> files;
  bool        onto = false, count = false, all = false, show = false;
  std::size_t cap      = 0;
  int         max_size = 8;

  auto* validate_cmd = app.add_subcommand("validate", "Check an algebra file against its class axioms");
  validate_cmd->add_option("file", file)->required();

  auto* profile_cmd = app.add_subcommand("profile", "Open, dense and regular elements, simplicity");
  profile_cmd->add_option("file", file)->required();

  auto* homs_cmd = app.add_subcommand("homs", "Homomorphisms from A to B");
  homs_cmd->add_option("fileA", file)->required();
  homs_cmd->add_option("fileB", file2)->required();
  homs_cmd->add_flag("--onto", onto, "Only onto homomorphisms");
  auto* count_opt = homs_cmd->add_flag("--count", count, "Count all homomorphisms");
  auto* all_opt   = homs_cmd->add_flag("--all", all, "List all homomorphisms");
  count_opt->excludes(all_opt);
  auto* cap_opt = homs_cmd->add_option("--cap", cap, "Stop after this many");

  auto* quotient_cmd = app.add_subcommand("quotient", "Quotient by a congruence filter");
  quotient_cmd->add_option("file", file)->required();
  quotient_cmd->add_option("--filter", filter, "Comma-separated element indices")->required();

  auto* decompose_cmd = app.add_subcommand("decompose", "Product of simple factors");
  decompose_cmd->add_option("file", file)->required();

  auto* projective_cmd = app.add_subcommand("projective", "Decide projectivity");
  projective_cmd->add_option("--class", cls, "ws5|hri|hdp:N|dht:N")->required();
  auto* alg_opt  = projective_cmd->add_option("file", file);
  auto* pres_opt = projective_cmd->add_option("--presentation", presentation_file);
  alg_opt->excludes(pres_opt);
  pres_opt->excludes(alg_opt);

  auto* rho_cmd = app.add_subcommand("rho", "Check the quasiidentity rho");
  rho_cmd->add_option("file", file)->required();

  auto* alpha_cmd = app.add_subcommand("alpha", "Evaluate the sentence alpha");
  alpha_cmd->add_option("file", file)->required();
  alpha_cmd->add_flag("--show", show, "Print the sentence");

  auto* retract_cmd = app.add_subcommand("retract", "Is B a retract of P");
  retract_cmd->add_option("fileP", file)->required();
  retract_cmd->add_option("fileB", file2)->required();

  auto* boolproj_cmd = app.add_subcommand("boolproj", "Quotient by the dense filter");
  boolproj_cmd->add_option("file", file)->required();

  auto* primitive_cmd = app.add_subcommand("primitive", "Primitivity of the generated quasivariety");
  primitive_cmd->add_option("files", files);

  auto* catalog_cmd = app.add_subcommand("catalog", "Write every algebra of a class up to a size");
  catalog_cmd->add_option("--class", cls)->required();
  catalog_cmd->add_option("--max-size", max_size)->required();
  catalog_cmd->add_option("--out", out_dir)->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate_cmd) return cmd_validate(file);
    if (*profile_cmd) return cmd_profile(file);
    if (*homs_cmd) {
      return cmd_homs(file, file2, onto, count, all,
                      *cap_opt ? std::optional<std::size_t>(cap) : std::nullopt);
    }
    if (*quotient_cmd) return cmd_quotient(file, filter);
    if (*decompose_cmd) return cmd_decompose(file);
    if (*projective_cmd) {
      if (!*alg_opt && !*pres_opt) throw error("projective needs an algebra file or --presentation");
      return cmd_projective(cls, *alg_opt ? std::optional(file) : std::nullopt,
                            *pres_opt ? std::optional(presentation_file) : std::nullopt);
    }
    if (*rho_cmd) return cmd_rho(file);
    if (*alpha_cmd) return cmd_alpha(file, show);
    if (*retract_cmd) return cmd_retract(file, file2);
    if (*boolproj_cmd) return cmd_boolproj(file);
    if (*primitive_cmd) return cmd_primitive(files);
    if (*catalog_cmd) return cmd_catalog(cls, max_size, out_dir);
  } catch (theorem_violation const& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return 3;
  } catch (axiom_error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (as_json) std::cerr << json{{"violations", violations_json(e.report)}}.dump(2) << "\n";
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

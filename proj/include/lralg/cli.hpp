#ifndef LRALG_CLI_HPP
#define LRALG_CLI_HPP

// Command-line front end. Needs CLI11.hpp and json.hpp on the include path.

#include <lralg/lralg.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>
#include <string>
#include <vector>

namespace lralg::cli {

enum ExitCode { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

using Json = nlohmann::ordered_json;

namespace detail {

inline std::string join(const std::vector<std::size_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + std::to_string(xs[i]);
  return s;
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline Json violation_json(const Violation& v) {
  return Json{{"check", v.check}, {"indices", v.indices}, {"residual", format_vector(v.residual)}};
}

inline std::string violation_str(const Violation& v) {
  return v.check + " at " + IdentityViolation::format_indices(v.indices) + ", residual " + format_vector(v.residual);
}

inline std::vector<Rational> parse_rationals(const std::vector<std::string>& xs) {
  std::vector<Rational> out;
  for (const auto& x : xs) {
    try {
      out.push_back(Rational::parse(x));
    } catch (const std::invalid_argument& e) {
      throw CLI::ValidationError("--params", e.what());
    }
  }
  return out;
}

inline Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

/// Shared state of one invocation.
struct Context {
  std::ostream& out;
  std::ostream& err;
  bool json = false;

  void emit(const Json& j) { out << j.dump(2) << "\n"; }
};

// ---------------------------------------------------------------------------
// Subcommands. Each returns an exit code.
// ---------------------------------------------------------------------------

inline int cmd_check(Context& cx, const std::string& file) {
  AlgebraFile f = load_algebra(file);
  Json j{{"command", "check"}, {"algebra", f.name}, {"dim", f.dim}};
  LieAlgebra g;
  try {
    g = f.lie();
  } catch (const IdentityViolation& e) {
    if (cx.json) {
      j["jacobi"] = "FAIL";
      j["violation"] = e.what();
      cx.emit(j);
    } else {
      cx.out << "Jacobi: FAIL (" << e.what() << ")\n";
    }
    return kVerificationFailed;
  }
  j["jacobi"] = "PASS";
  j["two_step_solvable"] = classify_solvability(g).is_two_step_solvable;
  if (!f.product) {
    if (cx.json)
      cx.emit(j);
    else
      cx.out << "Jacobi: PASS; no product section\n";
    return kOk;
  }
  VerificationReport ax = verify_product(g, *f.product);
  if (!ax.ok()) {
    if (cx.json) {
      j["lr_axioms"] = "FAIL";
      j["violations"] = Json::array();
      for (const auto& v : ax.violations) j["violations"].push_back(violation_json(v));
      cx.emit(j);
    } else {
      cx.out << "LR axioms: FAIL; " << ax.violations.size() << " violation(s); first: " << violation_str(ax.violations.front())
             << "\n";
    }
    return kVerificationFailed;
  }
  LRAlgebra a = LRAlgebra::create(g, *f.product);
  VerificationReport lem = lemma_suite(a);
  j["lr_axioms"] = "PASS";
  j["complete"] = a.complete();
  j["lemma_suite"] = lem.ok() ? "PASS" : "FAIL";
  if (!lem.ok()) {
    j["violations"] = Json::array();
    for (const auto& v : lem.violations) j["violations"].push_back(violation_json(v));
  }
  if (cx.json) {
    cx.emit(j);
  } else {
    cx.out << "LR axioms: PASS; complete: " << yes_no(a.complete()) << "; lemma suite: " << (lem.ok() ? "PASS" : "FAIL");
    if (!lem.ok()) cx.out << "; first: " << violation_str(lem.violations.front());
    cx.out << "\n";
  }
  return lem.ok() ? kOk : kVerificationFailed;
}

inline int cmd_series(Context& cx, const std::string& file) {
  AlgebraFile f = load_algebra(file);
  LieAlgebra g = f.lie();
  auto gam = lower_central_series(g).dims();
  auto der = derived_series(g).dims();
  auto z = upper_central_series(g).dims();
  SolvabilityReport sr = classify_solvability(g);
  if (cx.json) {
    Json j{{"command", "series"},     {"algebra", f.name},     {"gamma", gam},
           {"derived", der},          {"upper_central", z},    {"two_step_solvable", sr.is_two_step_solvable}};
    j["nilpotency_class"] = sr.nilpotency_class ? Json(*sr.nilpotency_class) : Json(nullptr);
    cx.emit(j);
  } else {
    cx.out << "gamma: " << join(gam) << "; derived: " << join(der)
           << "; two-step solvable: " << yes_no(sr.is_two_step_solvable) << "\n";
    cx.out << "upper central: " << join(z) << "\n";
  }
  return kOk;
}

inline int cmd_catalog_list(Context& cx) {
  Json arr = Json::array();
  for (const auto& e : catalog_entries()) {
    std::string ps;
    Json pj = Json::array();
    for (const auto& p : e.params) {
      ps += (ps.empty() ? "" : ", ") + p.name + " in " + p.domain.str();
      pj.push_back(Json{{"name", p.name}, {"domain", p.domain.str()}});
    }
    if (cx.json)
      arr.push_back(Json{{"name", e.name}, {"lie", e.lie_name}, {"params", pj}, {"complete", e.expected_complete}});
    else
      cx.out << e.name << "  lie " << e.lie_name << "  complete " << yes_no(e.expected_complete)
             << (ps.empty() ? "" : "  params " + ps) << "\n";
  }
  if (cx.json) cx.emit(Json{{"command", "catalog list"}, {"entries", arr}});
  return kOk;
}

inline int cmd_catalog_verify(Context& cx, const std::string& prefix) {
  CatalogReport rep = catalog_verify(prefix);
  if (rep.results.empty()) {
    cx.err << "no catalog entry matches '" << prefix << "'\n";
    return kUsage;
  }
  Json arr = Json::array();
  for (const auto& r : rep.results) {
    std::string label = r.name + "(" + format_params(r.params) + ")";
    if (cx.json) {
      std::vector<std::string> ps;
      for (const auto& p : r.params) ps.push_back(p.str());
      arr.push_back(Json{{"name", r.name},
                         {"params", ps},
                         {"pass", r.pass()},
                         {"axioms", r.axioms_ok},
                         {"lemma_suite", r.lemmas_ok},
                         {"complete", r.complete},
                         {"expected_complete", r.expected_complete},
                         {"message", r.message}});
    } else {
      cx.out << (r.pass() ? "PASS " : "FAIL ") << label << "  complete " << yes_no(r.complete);
      if (!r.message.empty()) cx.out << "  " << r.message;
      cx.out << "\n";
    }
  }
  if (cx.json)
    cx.emit(Json{{"command", "catalog verify"}, {"instances", rep.results.size()}, {"failures", rep.failures()}, {"results", arr}});
  else
    cx.out << rep.results.size() - rep.failures() << "/" << rep.results.size() << " instances pass\n";
  return rep.ok() ? kOk : kVerificationFailed;
}

inline int cmd_catalog_dump(Context& cx, const std::string& name, const std::vector<std::string>& raw) {
  const CatalogEntry& e = catalog_entry(name);
  std::vector<Rational> params = parse_rationals(raw);
  LRAlgebra a = catalog_get(name, params);
  std::vector<std::pair<std::string, Rational>> named;
  for (std::size_t i = 0; i < params.size(); ++i) named.push_back({e.params[i].name, params[i]});
  std::string text = print_algebra(name, a, named);
  if (cx.json)
    cx.emit(Json{{"command", "catalog dump"}, {"name", name}, {"file", text}});
  else
    cx.out << text;
  return kOk;
}

inline int write_construction(Context& cx, const std::string& kind, const std::string& name, const LRAlgebra& a,
                              const std::string& out_path) {
  std::string text = print_algebra(name, a);
  if (!out_path.empty()) {
    std::ofstream o(out_path, std::ios::binary);
    if (!o) throw std::runtime_error("cannot write '" + out_path + "'");
    o << text;
  }
  if (cx.json) {
    Json j{{"command", "construct " + kind}, {"name", name}, {"dim", a.dim()}, {"complete", a.complete()},
           {"lr_axioms", verify_axioms(a).ok() ? "PASS" : "FAIL"}};
    if (out_path.empty()) j["file"] = text;
    cx.emit(j);
  } else if (out_path.empty()) {
    cx.out << text;
  } else {
    cx.out << "wrote " << name << " (dim " << a.dim() << ") to " << out_path << "\n";
  }
  return kOk;
}

/// Lift for an extension file: split extensions use the product on b (zero
/// when absent and b is abelian); otherwise b must be abelian with an
/// invertible phi(e), e a basis vector or, failing that, the sum of all.
inline LRAlgebra lift_extension(const ExtensionFile& f, long generator) {
  const ExtensionData& d = f.data;
  require_valid(d);
  const std::size_t m = d.b_dim();
  if (cocycle_is_zero(d) && (f.b_product || d.b.is_abelian())) {
    BilinearTable bp = f.b_product ? *f.b_product : BilinearTable(m);
    return semidirect_lr(d, LRAlgebra::create(d.b, bp));
  }
  if (generator > 0) {
    if (std::size_t(generator) > m) throw IndexOutOfRange("generator index out of range");
    return invertible_generator_lift(d, unit_vector(m, std::size_t(generator) - 1));
  }
  std::vector<Vector> tries;
  for (std::size_t i = 0; i < m; ++i) tries.push_back(unit_vector(m, i));
  tries.push_back(Vector(m, Rational(1)));
  if (!d.b.is_abelian()) throw NotAbelian("non-split extension needs an abelian quotient");
  for (const auto& e : tries)
    if (!determinant(d.action(e)).is_zero()) return invertible_generator_lift(d, e);
  throw NotInvertible("no basis vector (or their sum) acts invertibly on the kernel");
}

inline int cmd_constraints(Context& cx, const std::string& file, bool reduce, const std::string& emit) {
  AlgebraFile f = load_algebra(file);
  LieAlgebra g = f.lie();
  ConstraintSystem s = generate_lr_system(g);
  Json j{{"command", "constraints"}, {"algebra", f.name}, {"variables", s.num_vars()}, {"equations", s.equations.size()},
         {"max_degree", s.max_degree()}};
  if (!cx.json)
    cx.out << "variables: " << s.num_vars() << "; equations: " << s.equations.size() << "; max degree: " << s.max_degree()
           << "\n";
  if (reduce) {
    s = structural_reduce(s, g);
    bool contradiction = false;
    for (const auto& e : s.equations)
      if (e.poly.is_unit()) contradiction = true;
    j["structural_constraints"] = s.structural.size();
    j["forced_zero"] = s.forced_zero.size();
    j["eliminated"] = s.eliminated.size();
    j["reduced_count"] = s.reduced_count();
    j["remaining_equations"] = s.equations.size();
    j["linear_contradiction"] = contradiction;
    if (!cx.json)
      cx.out << "structural constraints: " << s.structural.size() << "; forced zero: " << s.forced_zero.size()
             << "; eliminated: " << s.eliminated.size() << "; reduced count: " << s.reduced_count()
             << "; remaining equations: " << s.equations.size()
             << "; linear contradiction: " << yes_no(contradiction) << "\n";
  }
  if (!emit.empty()) {
    std::ofstream o(emit, std::ios::binary);
    if (!o) throw std::runtime_error("cannot write '" + emit + "'");
    std::string header = "LR constraint system for " + f.name + (reduce ? " (structurally reduced)" : "") + "\n" +
                         std::to_string(s.num_vars()) + " variables, " + std::to_string(s.equations.size()) +
                         " equations\nx[i][j][k] = entry (j,k) of L(e_i)";
    o << emit_polynomials(header, s.polynomials(), s.namer());
    j["emitted"] = emit;
    if (!cx.json) cx.out << "emitted " << s.equations.size() << " equations to " << emit << "\n";
  }
  if (cx.json) cx.emit(j);
  return kOk;
}

inline int cmd_solve(Context& cx, const std::string& file, std::size_t max_degree, double budget, std::size_t max_basis,
                     bool reduce) {
  AlgebraFile f = load_algebra(file);
  LieAlgebra g = f.lie();
  ConstraintSystem s = generate_lr_system(g);
  if (reduce) s = structural_reduce(s, g);
  CertifyResult r = buchberger_certify(s.polynomials(), {max_basis, max_degree, budget});
  std::string why;
  if (r.status == CertifyStatus::Inconsistent) {
    for (const auto& e : s.equations)
      if (e.poly.is_unit()) why = e.tag;
  }
  if (cx.json) {
    Json j{{"command", "solve"},
           {"algebra", f.name},
           {"reduced", reduce},
           {"equations", s.equations.size()},
           {"status", to_string(r.status)},
           {"reason", r.reason},
           {"basis_additions", r.trace.size()},
           {"pairs_processed", r.pairs_processed},
           {"certificate_size", r.certificate.size()}};
    if (!why.empty()) j["contradiction_tag"] = why;
    if (r.status == CertifyStatus::SolutionsMayExist) j["groebner_basis_size"] = r.basis.size();
    cx.emit(j);
  } else {
    cx.out << "status: " << to_string(r.status) << "\n";
    cx.out << "equations: " << s.equations.size() << "; basis additions: " << r.trace.size()
           << "; pairs processed: " << r.pairs_processed << "\n";
    if (!why.empty()) cx.out << "contradiction: " << why << "\n";
    if (r.status == CertifyStatus::Inconsistent) cx.out << "certificate: " << r.certificate.size() << " basis element(s)\n";
    if (r.status == CertifyStatus::SolutionsMayExist) cx.out << "groebner basis: " << r.basis.size() << " polynomial(s)\n";
    if (!r.reason.empty()) cx.out << "reason: " << r.reason << "\n";
  }
  return kOk;
}

inline int cmd_iso(Context& cx, const std::string& f1, const std::string& f2, double budget) {
  LRAlgebra a = load_algebra(f1).lr();
  LRAlgebra b = load_algebra(f2).lr();
  IsoBudget ib;
  ib.time_budget = budget;
  IsoResult r = iso_search(a, b, ib);
  if (cx.json) {
    Json j{{"command", "iso"}, {"status", to_string(r.status)}};
    if (r.map) j["map"] = matrix_json(*r.map);
    if (!r.invariant.empty()) j["invariant"] = r.invariant;
    if (!r.detail.empty()) j["detail"] = r.detail;
    cx.emit(j);
  } else {
    cx.out << to_string(r.status);
    if (!r.invariant.empty()) cx.out << ": " << r.invariant;
    if (!r.detail.empty()) cx.out << " (" << r.detail << ")";
    cx.out << "\n";
    if (r.map) cx.out << "map: " << r.map->str() << "\n";
  }
  return kOk;
}

}  // namespace detail

/// Runs one command line (without the program name). Exit codes: 0 on
/// success, 1 on a verification failure, 2 on usage or parse errors.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with LR-structures on nilpotent Lie algebras", "lralg"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Print reports as JSON");

  std::string file, file2, prefix, out_path, emit, name;
  std::vector<std::string> params, coeffs;
  std::size_t n = 0, max_degree = 8, max_basis = 20000;
  double budget = 60, iso_budget = 20;
  long generator = 0;
  bool reduce = false, no_reduce = false;

  auto* check = app.add_subcommand("check", "Jacobi, LR axioms, lemma suite and completeness");
  check->add_option("file", file, "Algebra file")->required();

  auto* series = app.add_subcommand("series", "Lower central, derived and upper central series dimensions");
  series->add_option("file", file, "Algebra file")->required();

  auto* catalog = app.add_subcommand("catalog", "Classification tables");
  catalog->require_subcommand(1);
  auto* cat_list = catalog->add_subcommand("list", "List entries");
  auto* cat_verify = catalog->add_subcommand("verify", "Verify sampled instances");
  cat_verify->add_option("prefix", prefix, "Only entries whose name starts with this");
  auto* cat_dump = catalog->add_subcommand("dump", "Print one instance as an algebra file");
  cat_dump->add_option("name", name, "Entry name, e.g. n3/A1")->required();
  cat_dump->add_option("--params", params, "Parameter values")->delimiter(',');

  auto* construct = app.add_subcommand("construct", "Build LR-structures from the standard constructions");
  construct->require_subcommand(1);
  auto* c_fil = construct->add_subcommand("filiform", "Filiform algebra with the given free coefficients");
  c_fil->add_option("--n", n, "Dimension")->required();
  c_fil->add_option("--coeffs", coeffs, "Free coefficients c[3][5..n]")->delimiter(',');
  auto* c_half = construct->add_subcommand("halfad", "x.y = [x,y]/2 on a 2-step nilpotent Lie algebra");
  c_half->add_option("file", file, "Algebra file")->required();
  auto* c_free3 = construct->add_subcommand("free3", "Free 3-step nilpotent Lie algebra");
  c_free3->add_option("--n", n, "Number of generators")->required();
  construct->add_subcommand("free4-2gen", "Free 4-step nilpotent Lie algebra on 2 generators");
  auto* c_ext = construct->add_subcommand("extension", "Lift an extension datum to an LR-structure");
  c_ext->add_option("file", file, "Extension file")->required();
  c_ext->add_option("--generator", generator, "Index of the basis vector of b acting invertibly");
  for (auto* sc : construct->get_subcommands([](CLI::App*) { return true; })) sc->add_option("--out", out_path, "Write the algebra file here");

  auto* cons = app.add_subcommand("constraints", "Polynomial system for LR-structures on a Lie algebra");
  cons->add_option("file", file, "Algebra file")->required();
  cons->add_flag("--reduce", reduce, "Apply the structural reduction");
  cons->add_option("--emit", emit, "Write the equations to this file");

  auto* solve = app.add_subcommand("solve", "Groebner certificate search on the (reduced) system");
  solve->add_option("file", file, "Algebra file")->required();
  solve->add_option("--max-degree", max_degree, "Skip S-pairs above this degree");
  solve->add_option("--time-budget", budget, "Seconds");
  solve->add_option("--max-basis", max_basis, "Basis size limit");
  solve->add_flag("--no-reduce", no_reduce, "Skip the structural reduction");

  auto* iso = app.add_subcommand("iso", "Bounded isomorphism search between two LR-algebras");
  iso->add_option("file1", file, "Algebra file")->required();
  iso->add_option("file2", file2, "Algebra file")->required();
  iso->add_option("--budget", iso_budget, "Seconds");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    if (code == 0) return kOk;
    err << app.help();
    return kUsage;
  }

  detail::Context cx{out, err, json};
  try {
    if (*check) return detail::cmd_check(cx, file);
    if (*series) return detail::cmd_series(cx, file);
    if (*cat_list) return detail::cmd_catalog_list(cx);
    if (*cat_verify) return detail::cmd_catalog_verify(cx, prefix);
    if (*cat_dump) return detail::cmd_catalog_dump(cx, name, params);
    if (*c_fil) {
      FiliformSpec spec = FiliformSpec::from_free_row(n, detail::parse_rationals(coeffs));
      return detail::write_construction(cx, "filiform", "filiform" + std::to_string(n), filiform_lr(spec), out_path);
    }
    if (*c_half) {
      AlgebraFile f = load_algebra(file);
      return detail::write_construction(cx, "halfad", f.name + "-halfad", halved_adjoint_lr(f.lie()), out_path);
    }
    if (*c_free3) return detail::write_construction(cx, "free3", "free3-" + std::to_string(n), free3_lr(n), out_path);
    if (construct->got_subcommand("free4-2gen"))
      return detail::write_construction(cx, "free4-2gen", "free4-2gen", free4_two_gen_lr(), out_path);
    if (*c_ext) {
      ExtensionFile f = load_extension(file);
      return detail::write_construction(cx, "extension", f.name, detail::lift_extension(f, generator), out_path);
    }
    if (*cons) return detail::cmd_constraints(cx, file, reduce, emit);
    if (*solve) return detail::cmd_solve(cx, file, max_degree, budget, max_basis, !no_reduce);
    if (*iso) return detail::cmd_iso(cx, file, file2, iso_budget);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnknownName& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParamOutOfDomain& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SpecViolation& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DimensionMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const IndexOutOfRange& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const AlgebraError& e) {
    err << "verification failed: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  err << app.help();
  return kUsage;
}

}  // namespace lralg::cli

#endif  // LRALG_CLI_HPP

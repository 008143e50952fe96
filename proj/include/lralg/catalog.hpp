#ifndef LRALG_CATALOG_HPP
#define LRALG_CATALOG_HPP

#include <lralg/errors.hpp>
#include <lralg/lie_algebra.hpp>
#include <lralg/lr_algebra.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lralg {

// ---------------------------------------------------------------------------
// Named Lie algebras
// ---------------------------------------------------------------------------

namespace detail {
inline Vector ev(std::size_t n, std::initializer_list<std::pair<std::size_t, Rational>> terms) {
  Vector v(n);
  for (const auto& [k, c] : terms) v[k - 1] += c;
  return v;
}
}  // namespace detail

/// [e1, e2] = e1
inline LieAlgebra r2_lie() { return lie_from_table(2, {{1, 2, detail::ev(2, {{1, 1}})}}); }

/// Heisenberg algebra: [e1, e2] = e3
inline LieAlgebra n3_lie() { return lie_from_table(3, {{1, 2, detail::ev(3, {{3, 1}})}}); }

/// [e1, e2] = e3, [e1, e3] = e4
inline LieAlgebra n4_lie() {
  return lie_from_table(4, {{1, 2, detail::ev(4, {{3, 1}})}, {1, 3, detail::ev(4, {{4, 1}})}});
}

/// n3 + R: [e1, e2] = e3 with e4 central
inline LieAlgebra n3r_lie() { return lie_from_table(4, {{1, 2, detail::ev(4, {{3, 1}})}}); }

/// 3-step nilpotent, 2-step solvable Lie algebra of dimension 13 on four
/// generators x1..x4 that admits no LR-structure.
inline LieAlgebra counterexample_g13() {
  auto x = [](std::initializer_list<std::pair<std::size_t, Rational>> t) { return detail::ev(13, t); };
  return lie_from_table(13, {
                                {1, 2, x({{5, 1}})},
                                {1, 4, x({{6, 1}})},
                                {1, 6, x({{10, 1}})},
                                {1, 7, x({{11, 1}})},
                                {1, 8, x({{12, 1}})},
                                {2, 3, x({{7, 1}})},
                                {2, 4, x({{8, 1}})},
                                {2, 5, x({{13, 1}})},
                                {2, 7, x({{13, 1}})},
                                {3, 4, x({{5, -1}})},
                                {3, 5, x({{11, -1}})},
                                {3, 8, x({{9, 1}})},
                                {4, 5, x({{12, -1}})},
                                {4, 6, x({{9, 1}})},
                                {4, 7, x({{9, 1}, {13, 1}})},
                            });
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

struct ParamDomain {
  enum class Kind { Real, Boolean, AtMost, AtLeast };
  Kind kind = Kind::Real;
  Rational bound;

  static ParamDomain real() { return {Kind::Real, Rational(0)}; }
  static ParamDomain boolean() { return {Kind::Boolean, Rational(0)}; }
  static ParamDomain at_most(Rational b) { return {Kind::AtMost, std::move(b)}; }
  static ParamDomain at_least(Rational b) { return {Kind::AtLeast, std::move(b)}; }

  bool contains(const Rational& v) const {
    switch (kind) {
      case Kind::Real: return true;
      case Kind::Boolean: return v.is_zero() || v.is_one();
      case Kind::AtMost: return v <= bound;
      case Kind::AtLeast: return v >= bound;
    }
    return false;
  }

  /// {-2, -1/2, 0, 1/2, 3} restricted to the domain, plus a finite endpoint.
  std::vector<Rational> sample() const {
    if (kind == Kind::Boolean) return {Rational(0), Rational(1)};
    std::vector<Rational> out;
    for (const Rational& v : {Rational(-2), Rational(-1, 2), Rational(0), Rational(1, 2), Rational(3)})
      if (contains(v)) out.push_back(v);
    if (kind != Kind::Real && std::find(out.begin(), out.end(), bound) == out.end()) out.push_back(bound);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::string str() const {
    switch (kind) {
      case Kind::Real: return "Q";
      case Kind::Boolean: return "{0,1}";
      case Kind::AtMost: return "<= " + bound.str();
      case Kind::AtLeast: return ">= " + bound.str();
    }
    return "?";
  }
};

struct CatalogParam {
  std::string name;
  ParamDomain domain;
};

/// A table entry of one of the classification lists, in the source basis.
struct CatalogEntry {
  std::string name;                     ///< "family/Ak", e.g. "n3/A2"
  std::string lie_name;                 ///< "r2", "n3", "n4" or "n3R"
  std::function<LieAlgebra()> lie;
  std::vector<CatalogParam> params;
  std::function<std::vector<TableEntry>(const std::vector<Rational>&)> table;
  bool expected_complete = true;

  std::vector<std::vector<Rational>> samples() const {
    std::vector<std::vector<Rational>> out{{}};
    for (const auto& p : params) {
      std::vector<std::vector<Rational>> next;
      for (const auto& prefix : out)
        for (const auto& v : p.domain.sample()) {
          auto s = prefix;
          s.push_back(v);
          next.push_back(std::move(s));
        }
      out = std::move(next);
    }
    return out;
  }
};

namespace detail {

using P = std::vector<Rational>;
using Tab = std::vector<TableEntry>;

/// Product entry (i, j) -> sum c_k e_k in dimension n.
inline TableEntry pe(std::size_t n, int i, int j, std::initializer_list<std::pair<std::size_t, Rational>> terms) {
  return {i, j, ev(n, terms)};
}

inline std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> c;
  const auto R = ParamDomain::real();
  const auto B = ParamDomain::boolean();
  auto add = [&](std::string name, std::string lie_name, std::function<LieAlgebra()> lie, std::vector<CatalogParam> params,
                 std::function<Tab(const P&)> table, bool complete = true) {
    c.push_back({std::move(name), std::move(lie_name), std::move(lie), std::move(params), std::move(table), complete});
  };

  // r2
  add("r2/A1", "r2", r2_lie, {}, [](const P&) { return Tab{pe(2, 1, 1, {{1, 1}}), pe(2, 2, 1, {{1, -1}})}; }, false);
  add("r2/A2", "r2", r2_lie, {}, [](const P&) { return Tab{pe(2, 1, 2, {{1, 1}})}; });
  add("r2/A3", "r2", r2_lie, {}, [](const P&) { return Tab{pe(2, 2, 1, {{1, -1}})}; }, false);

  // n3
  add("n3/A1", "n3", n3_lie, {{"alpha", R}}, [](const P& p) {
    return Tab{pe(3, 1, 1, {{3, 1}}), pe(3, 1, 2, {{3, 1}}), pe(3, 2, 2, {{3, p[0]}})};
  });
  add("n3/A2", "n3", n3_lie, {{"beta", R}}, [](const P& p) {
    return Tab{pe(3, 1, 2, {{3, p[0]}}), pe(3, 2, 1, {{3, p[0] - 1}}), pe(3, 2, 2, {{1, 1}})};
  });
  add("n3/A3", "n3", n3_lie, {}, [](const P&) {
    return Tab{pe(3, 1, 2, {{3, Rational(1, 2)}}), pe(3, 2, 1, {{3, Rational(-1, 2)}})};
  });
  add("n3/A4", "n3", n3_lie, {}, [](const P&) {
    return Tab{pe(3, 2, 1, {{3, -1}}), pe(3, 2, 2, {{2, 1}}), pe(3, 2, 3, {{3, 1}}), pe(3, 3, 2, {{3, 1}})};
  }, false);

  // n4
  add("n4/A1", "n4", n4_lie, {{"alpha", R}}, [](const P& p) {
    const Rational& a = p[0];
    return Tab{pe(4, 1, 1, {{2, a * (a - 1)}}), pe(4, 1, 2, {{3, a}}), pe(4, 1, 3, {{4, a}}),
               pe(4, 2, 1, {{3, a - 1}}),       pe(4, 2, 2, {{4, 1}}), pe(4, 3, 1, {{4, a - 1}})};
  });
  add("n4/A2", "n4", n4_lie, {}, [](const P&) {
    return Tab{pe(4, 1, 1, {{3, 1}}), pe(4, 2, 1, {{3, -1}}), pe(4, 2, 2, {{4, 1}}), pe(4, 3, 1, {{4, -1}})};
  });
  add("n4/A3", "n4", n4_lie, {}, [](const P&) {
    return Tab{pe(4, 1, 1, {{3, 1}}), pe(4, 1, 2, {{3, 1}}), pe(4, 1, 3, {{4, 1}}), pe(4, 2, 2, {{4, 1}})};
  });
  add("n4/A4", "n4", n4_lie, {{"alpha", B}, {"beta", B}, {"gamma", B}}, [](const P& p) {
    const Rational &a = p[0], &b = p[1], &g = p[2];
    return Tab{pe(4, 1, 1, {{2, a}}), pe(4, 1, 2, {{3, b}, {4, g}}), pe(4, 1, 3, {{4, b}}),
               pe(4, 2, 1, {{3, b - 1}, {4, g}}), pe(4, 3, 1, {{4, b - 1}})};
  });
  add("n4/A5", "n4", n4_lie, {{"alpha", B}}, [](const P& p) {
    return Tab{pe(4, 1, 1, {{4, p[0]}}), pe(4, 2, 1, {{3, -1}}), pe(4, 2, 2, {{3, 1}}),
               pe(4, 2, 3, {{4, 1}}),    pe(4, 3, 1, {{4, -1}}), pe(4, 3, 2, {{4, 1}})};
  });
  add("n4/A6", "n4", n4_lie, {}, [](const P&) {
    return Tab{pe(4, 2, 1, {{3, -1}}), pe(4, 2, 2, {{2, 1}}), pe(4, 2, 3, {{3, 1}}), pe(4, 2, 4, {{4, 1}}),
               pe(4, 3, 1, {{4, -1}}), pe(4, 3, 2, {{3, 1}}), pe(4, 3, 3, {{4, 1}}), pe(4, 4, 2, {{4, 1}})};
  }, false);

  // n3 + R, complete structures only
  add("n3R/A1", "n3R", n3r_lie, {{"alpha", R}}, [](const P& p) {
    return Tab{pe(4, 1, 2, {{3, p[0]}}), pe(4, 2, 1, {{3, p[0] - 1}}), pe(4, 2, 2, {{1, 1}}), pe(4, 4, 4, {{3, 1}})};
  });
  add("n3R/A2", "n3R", n3r_lie, {{"alpha", B}}, [](const P& p) {
    return Tab{pe(4, 1, 1, {{3, p[0]}}), pe(4, 1, 2, {{4, 1}}), pe(4, 2, 1, {{3, -1}, {4, 1}}),
               pe(4, 2, 2, {{1, 1}}),    pe(4, 2, 4, {{3, p[0]}}), pe(4, 4, 2, {{3, p[0]}})};
  });
  add("n3R/A3", "n3R", n3r_lie, {{"alpha", R}, {"beta", B}}, [](const P& p) {
    return Tab{pe(4, 1, 2, {{3, p[0]}}), pe(4, 2, 1, {{3, p[0] - 1}}), pe(4, 2, 2, {{1, 1}}),
               pe(4, 2, 4, {{3, p[1]}}), pe(4, 4, 2, {{3, p[1]}})};
  });
  add("n3R/A4", "n3R", n3r_lie, {{"alpha", B}}, [](const P& p) {
    return Tab{pe(4, 1, 1, {{4, 1}}), pe(4, 1, 4, {{3, 1}}), pe(4, 2, 1, {{3, -1}}), pe(4, 2, 2, {{3, p[0]}}),
               pe(4, 4, 1, {{3, 1}})};
  });
  add("n3R/A5", "n3R", n3r_lie, {{"alpha", B}}, [](const P& p) {
    return Tab{pe(4, 1, 4, {{3, 1}}), pe(4, 2, 1, {{3, -1}}), pe(4, 2, 2, {{3, p[0]}}), pe(4, 4, 1, {{3, 1}})};
  });
  add("n3R/A6", "n3R", n3r_lie, {{"alpha", R}}, [](const P& p) {
    return Tab{pe(4, 1, 1, {{3, p[0]}}), pe(4, 2, 1, {{3, -1}}), pe(4, 2, 2, {{3, 1}}), pe(4, 4, 4, {{3, 1}})};
  });
  add("n3R/A7", "n3R", n3r_lie, {{"alpha", ParamDomain::at_most(Rational(3, 4))}}, [](const P& p) {
    return Tab{pe(4, 1, 1, {{3, p[0]}}), pe(4, 2, 1, {{3, -1}}), pe(4, 2, 2, {{3, -1}}), pe(4, 4, 4, {{3, 1}})};
  });
  add("n3R/A8", "n3R", n3r_lie, {}, [](const P&) {
    return Tab{pe(4, 1, 2, {{3, Rational(1, 2)}}), pe(4, 2, 1, {{3, Rational(-1, 2)}}), pe(4, 4, 4, {{3, 1}})};
  });
  add("n3R/A9", "n3R", n3r_lie, {{"alpha", ParamDomain::at_least(Rational(1, 2))}}, [](const P& p) {
    return Tab{pe(4, 1, 1, {{4, 1}}), pe(4, 1, 2, {{3, p[0]}}), pe(4, 2, 1, {{3, p[0] - 1}}), pe(4, 2, 2, {{4, 1}})};
  });
  add("n3R/A10", "n3R", n3r_lie, {{"alpha", ParamDomain::at_least(Rational(1, 2))}}, [](const P& p) {
    return Tab{pe(4, 1, 1, {{4, 1}}), pe(4, 1, 2, {{3, p[0]}}), pe(4, 2, 1, {{3, p[0] - 1}}), pe(4, 2, 2, {{4, -1}})};
  });
  add("n3R/A11", "n3R", n3r_lie, {{"alpha", R}}, [](const P& p) {
    return Tab{pe(4, 1, 1, {{4, 1}}), pe(4, 1, 2, {{3, p[0]}}), pe(4, 2, 1, {{3, p[0] - 1}})};
  });
  add("n3R/A12", "n3R", n3r_lie, {}, [](const P&) {
    return Tab{pe(4, 1, 1, {{4, 1}}), pe(4, 2, 1, {{3, -1}}), pe(4, 2, 2, {{3, 1}})};
  });
  add("n3R/A13", "n3R", n3r_lie, {{"alpha", R}}, [](const P& p) {
    return Tab{pe(4, 1, 1, {{3, 1}}), pe(4, 2, 1, {{3, -1}}), pe(4, 2, 2, {{3, p[0]}})};
  });
  add("n3R/A14", "n3R", n3r_lie, {}, [](const P&) {
    return Tab{pe(4, 1, 2, {{3, Rational(1, 2)}}), pe(4, 2, 1, {{3, Rational(-1, 2)}})};
  });
  add("n3R/A15", "n3R", n3r_lie, {{"alpha", ParamDomain::at_least(Rational(1))}}, [](const P& p) {
    return Tab{pe(4, 1, 1, {{4, 1}}), pe(4, 2, 1, {{3, -1}}), pe(4, 2, 2, {{3, p[0]}, {4, -1}})};
  });
  return c;
}

}  // namespace detail

/// All registered entries in registration order.
inline const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = detail::build_catalog();
  return entries;
}

inline const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog_entries())
    if (e.name == name) return e;
  throw UnknownName("no catalog entry named '" + name + "'");
}

/// Lie algebra of a family by short name: r2, n3, n4, n3R or g13.
inline LieAlgebra catalog_lie(const std::string& name) {
  if (name == "r2") return r2_lie();
  if (name == "n3") return n3_lie();
  if (name == "n4") return n4_lie();
  if (name == "n3R") return n3r_lie();
  if (name == "g13") return counterexample_g13();
  throw UnknownName("no Lie algebra named '" + name + "'");
}

inline void check_params(const CatalogEntry& e, const std::vector<Rational>& params) {
  if (params.size() != e.params.size())
    throw ParamOutOfDomain(e.name + " takes " + std::to_string(e.params.size()) + " parameter(s), got " +
                           std::to_string(params.size()));
  for (std::size_t i = 0; i < params.size(); ++i)
    if (!e.params[i].domain.contains(params[i]))
      throw ParamOutOfDomain(e.name + ": " + e.params[i].name + " = " + params[i].str() + " is outside " +
                             e.params[i].domain.str());
}

/// Instantiates a registered entry; the product is verified on construction.
inline LRAlgebra catalog_get(const std::string& name, const std::vector<Rational>& params = {}) {
  const CatalogEntry& e = catalog_entry(name);
  check_params(e, params);
  return lr_from_table(e.lie(), e.table(params));
}

struct CatalogResult {
  std::string name;
  std::vector<Rational> params;
  bool axioms_ok = false;
  bool lemmas_ok = false;
  bool complete = false;
  bool expected_complete = false;
  std::string message;  ///< first failure, empty on pass

  bool pass() const { return axioms_ok && lemmas_ok && complete == expected_complete; }
};

struct CatalogReport {
  std::vector<CatalogResult> results;

  bool ok() const {
    return std::all_of(results.begin(), results.end(), [](const CatalogResult& r) { return r.pass(); });
  }
  std::size_t failures() const {
    return std::count_if(results.begin(), results.end(), [](const CatalogResult& r) { return !r.pass(); });
  }
};

inline std::string format_params(const std::vector<Rational>& params) {
  std::string s;
  for (std::size_t i = 0; i < params.size(); ++i) s += (i ? "," : "") + params[i].str();
  return s;
}

/// Instantiates every entry whose name starts with `prefix` at every sampled
/// parameter value and checks axioms, lemma suite and completeness.
inline CatalogReport catalog_verify(const std::string& prefix = "") {
  CatalogReport rep;
  for (const auto& e : catalog_entries()) {
    if (e.name.compare(0, prefix.size(), prefix) != 0) continue;
    LieAlgebra g = e.lie();
    for (const auto& params : e.samples()) {
      CatalogResult r;
      r.name = e.name;
      r.params = params;
      r.expected_complete = e.expected_complete;
      BilinearTable p;
      try {
        LRAlgebra probe = lr_from_table(g, e.table(params));
        p = probe.product();
      } catch (const IdentityViolation& ex) {
        r.message = ex.what();
        rep.results.push_back(std::move(r));
        continue;
      }
      r.axioms_ok = verify_product(g, p).ok();
      LRAlgebra a = LRAlgebra::create(g, p);
      VerificationReport lem = lemma_suite(a);
      r.lemmas_ok = lem.ok();
      if (!r.lemmas_ok)
        r.message = "lemma " + lem.violations.front().check + " fails at " +
                    IdentityViolation::format_indices(lem.violations.front().indices);
      r.complete = is_complete(a);
      if (r.message.empty() && r.complete != r.expected_complete)
        r.message = std::string("expected ") + (r.expected_complete ? "complete" : "incomplete");
      rep.results.push_back(std::move(r));
    }
  }
  return rep;
}

}  // namespace lralg

#endif  // LRALG_CATALOG_HPP

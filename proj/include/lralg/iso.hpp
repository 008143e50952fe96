#ifndef LRALG_ISO_HPP
#define LRALG_ISO_HPP

#include <lralg/groebner.hpp>
#include <lralg/lr_algebra.hpp>

#include <chrono>
#include <optional>
#include <string>
#include <vector>

namespace lralg {

enum class IsoStatus { Found, DistinguishedBy, Undecided };

inline const char* to_string(IsoStatus s) {
  switch (s) {
    case IsoStatus::Found: return "Found";
    case IsoStatus::DistinguishedBy: return "DistinguishedBy";
    case IsoStatus::Undecided: return "Undecided";
  }
  return "?";
}

struct IsoResult {
  IsoStatus status = IsoStatus::Undecided;
  std::optional<Matrix> map;  ///< column j = image of e_j, when Found
  std::string invariant;      ///< name of the distinguishing invariant
  std::string detail;
};

struct IsoBudget {
  double time_budget = 20.0;         ///< seconds for the whole search
  std::size_t max_basis_size = 20000;
  std::size_t max_degree = 12;
};

/// A named, basis-independent quantity of an LR-algebra.
struct Invariant {
  std::string name;
  std::string value;
};

namespace detail {

inline std::size_t operator_span_dim(const std::vector<Matrix>& ops) {
  std::vector<Vector> flat;
  for (const auto& m : ops) flat.push_back(m.entries());
  return ops.empty() ? 0 : Subspace::span(ops.front().rows() * ops.front().cols(), flat).dim();
}

/// Gram matrix of (x, y) -> tr(F(x) G(y)) on the standard basis.
inline Matrix trace_form(const std::vector<Matrix>& F, const std::vector<Matrix>& G) {
  const std::size_t n = F.size();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix p = F[i] * G[j];
      Rational t;
      for (std::size_t k = 0; k < p.rows(); ++k) t += p(k, k);
      m(i, j) = t;
    }
  return m;
}

}  // namespace detail

/// Invariants compared before any search, in this order.
inline std::vector<Invariant> iso_invariants(const LRAlgebra& a) {
  const std::size_t n = a.dim();
  std::vector<Invariant> out;
  auto put = [&](std::string name, std::size_t v) { out.push_back({std::move(name), std::to_string(v)}); };
  auto dims = [](const SeriesReport& s) {
    std::string r;
    for (auto d : s.dims()) r += (r.empty() ? "" : " ") + std::to_string(d);
    return r;
  };
  out.push_back({"completeness", a.complete() ? "complete" : "incomplete"});
  out.push_back({"lower-central-dims", dims(lower_central_series(a.lie()))});
  out.push_back({"derived-dims", dims(derived_series(a.lie()))});
  out.push_back({"upper-central-dims", dims(upper_central_series(a.lie()))});
  Subspace full = Subspace::full(n);
  Subspace aa = ideal_product(a, full, full);
  put("dim A.A", aa.dim());
  put("dim (A.A).A", ideal_product(a, aa, full).dim());
  put("dim A.(A.A)", ideal_product(a, full, aa).dim());
  std::vector<Matrix> L, R;
  for (std::size_t i = 0; i < n; ++i) {
    L.push_back(a.left_basis(i));
    R.push_back(a.right_basis(i));
  }
  // {x : x.y = 0 for all y} is the common kernel of the R(e_j); dually for L.
  auto common_kernel = [n](const std::vector<Matrix>& ops) {
    Matrix stacked(n * n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) stacked(i * n + r, c) = ops[i](r, c);
    return nullspace(stacked).dim();
  };
  put("dim left annihilator", common_kernel(R));
  put("dim right annihilator", common_kernel(L));
  put("dim span L", detail::operator_span_dim(L));
  put("dim span R", detail::operator_span_dim(R));
  put("rank tr(L L)", rank(detail::trace_form(L, L)));
  put("rank tr(R R)", rank(detail::trace_form(R, R)));
  put("rank tr(L R)", rank(detail::trace_form(L, R)));
  return out;
}

inline bool is_homomorphism(const LRAlgebra& a, const LRAlgebra& b, const Matrix& t) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (t * a.basis_product(i, j) != b.mult(t.column(i), t.column(j))) return false;
  return true;
}

inline bool is_isomorphism(const LRAlgebra& a, const LRAlgebra& b, const Matrix& t) {
  return t.rows() == a.dim() && t.cols() == b.dim() && !determinant(t).is_zero() && is_homomorphism(a, b, t);
}

/// Image of a table under x -> t x: the result r satisfies r(t u, t v) = t p(u, v).
inline BilinearTable transport_table(const BilinearTable& p, const Matrix& t) {
  const std::size_t n = p.dim();
  Matrix ti = inverse(t);
  std::vector<Rational> d(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector v = t * p.apply(ti.column(i), ti.column(j));
      for (std::size_t k = 0; k < n; ++k) d[(i * n + j) * n + k] = v[k];
    }
  return BilinearTable(n, std::move(d));
}

/// The same LR-algebra written in the basis t^{-1} e_i, so that t maps a onto the result.
inline LRAlgebra transport(const LRAlgebra& a, const Matrix& t) {
  if (!t.is_square() || t.rows() != a.dim()) throw DimensionMismatch("transport needs a square matrix of the algebra's size");
  if (determinant(t).is_zero()) throw NotInvertible("transport needs an invertible matrix");
  LieAlgebra g = LieAlgebra::from_tensor(transport_table(a.lie().structure(), t));
  return LRAlgebra::create(std::move(g), transport_table(a.product(), t));
}

/// Equations in T (variables 0..n^2-1, T(r,c) at r*n+c) and S (next n^2):
/// T(e_i . e_j) = T(e_i) . T(e_j) and S T = I.
inline std::vector<Polynomial> iso_equations(const LRAlgebra& a, const LRAlgebra& b) {
  const std::size_t n = a.dim();
  auto T = [n](std::size_t r, std::size_t c) { return Var(r * n + c); };
  auto S = [n](std::size_t r, std::size_t c) { return Var(n * n + r * n + c); };
  std::vector<Polynomial> eqs;
  const BilinearTable& pa = a.product();
  const BilinearTable& pb = b.product();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<Term> terms;
        for (const auto& t : pa.terms(i, j)) terms.push_back({t.value, Monomial::var(T(k, t.index))});
        for (std::size_t p = 0; p < n; ++p)
          for (std::size_t q = 0; q < n; ++q) {
            const Rational& c = pb(p, q, k);
            if (!c.is_zero()) terms.push_back({-c, Monomial({T(p, i), T(q, j)})});
          }
        Polynomial poly = Polynomial::from_terms(std::move(terms));
        if (!poly.is_zero()) eqs.push_back(std::move(poly));
      }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<Term> terms;
      for (std::size_t m = 0; m < n; ++m) terms.push_back({Rational(1), Monomial({S(r, m), T(m, c)})});
      if (r == c) terms.push_back({Rational(-1), Monomial()});
      eqs.push_back(Polynomial::from_terms(std::move(terms)));
    }
  return eqs;
}

/// Bounded isomorphism search. Non-isomorphism is only reported on a
/// verified invariant mismatch or when the isomorphism equations generate the
/// unit ideal; every Found map is checked exactly.
inline IsoResult iso_search(const LRAlgebra& a, const LRAlgebra& b, IsoBudget budget = {}) {
  if (a.dim() != b.dim()) throw DimensionMismatch("iso_search needs algebras of equal dimension");
  const std::size_t n = a.dim();
  const auto start = std::chrono::steady_clock::now();
  auto remaining = [&] {
    return budget.time_budget - std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };
  IsoResult res;

  std::vector<Invariant> ia = iso_invariants(a), ib = iso_invariants(b);
  for (std::size_t k = 0; k < ia.size(); ++k)
    if (ia[k].value != ib[k].value) {
      res.status = IsoStatus::DistinguishedBy;
      res.invariant = ia[k].name;
      res.detail = ia[k].value + " vs " + ib[k].value;
      return res;
    }

  Matrix id = Matrix::identity(n);
  if (is_isomorphism(a, b, id)) {
    res.status = IsoStatus::Found;
    res.map = id;
    return res;
  }

  std::vector<Polynomial> eqs = iso_equations(a, b);
  BuchbergerLimits lim{budget.max_basis_size, budget.max_degree, remaining()};
  CertifyResult gb = buchberger_certify(eqs, lim);
  if (gb.status == CertifyStatus::Inconsistent) {
    res.status = IsoStatus::DistinguishedBy;
    res.invariant = "isomorphism-equations";
    res.detail = "the equations for an invertible homomorphism generate the unit ideal";
    return res;
  }
  if (gb.status == CertifyStatus::BudgetExhausted) {
    res.detail = "Groebner basis of the isomorphism equations not reached: " + gb.reason;
    return res;
  }

  // Fix the entries of T one at a time to small rationals while the ideal
  // stays proper; S follows once T is fully determined.
  const std::vector<Rational> candidates{Rational(0), Rational(1), Rational(-1), Rational(2), Rational(-2),
                                         Rational(1, 2), Rational(-1, 2), Rational(3), Rational(-3)};
  std::vector<Polynomial> fixed = gb.basis;
  std::vector<Rational> values(n * n);
  for (Var v = 0; v < Var(n * n); ++v) {
    // Already determined by the basis: v - c in the ideal.
    Polynomial nf = normal_form(Polynomial::variable(v), fixed);
    if (nf.is_constant()) {
      values[v] = nf.constant_term();
      continue;
    }
    bool ok = false;
    for (const auto& c : candidates) {
      if (remaining() <= 0) {
        res.detail = "time budget exhausted during point search";
        return res;
      }
      auto trial = fixed;
      trial.push_back(Polynomial::variable(v) - Polynomial::constant(c));
      CertifyResult r = buchberger_certify(trial, {budget.max_basis_size, budget.max_degree, remaining()});
      if (r.status == CertifyStatus::SolutionsMayExist) {
        fixed = r.basis;
        values[v] = c;
        ok = true;
        break;
      }
    }
    if (!ok) {
      res.detail = "no small rational value for T entry " + std::to_string(v);
      return res;
    }
  }
  Matrix t(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) t(r, c) = values[r * n + c];
  if (is_isomorphism(a, b, t)) {
    res.status = IsoStatus::Found;
    res.map = t;
  } else {
    res.detail = "candidate map failed exact verification";
  }
  return res;
}

}  // namespace lralg

#endif  // LRALG_ISO_HPP

#ifndef LRALG_LIE_ALGEBRA_HPP
#define LRALG_LIE_ALGEBRA_HPP

#include <lralg/bilinear.hpp>
#include <lralg/errors.hpp>
#include <lralg/linalg.hpp>

#include <optional>
#include <string>
#include <vector>

namespace lralg {

/// One failed identity check: which identity, at which (1-based) basis
/// indices, and the nonzero residual.
struct Violation {
  std::string check;
  std::vector<int> indices;
  Vector residual;
};

struct VerificationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string check, std::vector<int> indices, Vector residual) {
    violations.push_back({std::move(check), std::move(indices), std::move(residual)});
  }
  void merge(const VerificationReport& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
};

/// Checks antisymmetry and the Jacobi identity of raw structure constants.
/// Antisymmetry failures are reported under "antisymmetry", Jacobi failures
/// under "jacobi".
inline VerificationReport check_lie_tensor(const BilinearTable& c) {
  VerificationReport rep;
  const std::size_t n = c.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Vector s = c.basis_value(i, j) + c.basis_value(j, i);
      if (!is_zero(s)) rep.add("antisymmetry", {int(i + 1), int(j + 1)}, s);
    }
  if (!rep.ok()) return rep;
  // The Jacobiator is alternating once antisymmetry holds.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector r = c.apply_right(c.basis_value(i, j), k);
        r = r + c.apply_right(c.basis_value(j, k), i);
        r = r + c.apply_right(c.basis_value(k, i), j);
        if (!is_zero(r)) rep.add("jacobi", {int(i + 1), int(j + 1), int(k + 1)}, r);
      }
  return rep;
}

/// Finite-dimensional Lie algebra given by structure constants
/// [e_i, e_j] = sum_k c[i][j][k] e_k. Always antisymmetric and Jacobi-valid.
class LieAlgebra {
 public:
  LieAlgebra() = default;

  /// Validates and wraps a full structure tensor.
  static LieAlgebra from_tensor(BilinearTable c, std::vector<std::string> names = {}) {
    VerificationReport rep = check_lie_tensor(c);
    if (!rep.ok()) {
      const Violation& v = rep.violations.front();
      if (v.check == "antisymmetry") throw AntisymmetryConflict("antisymmetry", v.indices, format_vector(v.residual));
      throw JacobiViolation("Jacobi identity", v.indices, format_vector(v.residual));
    }
    LieAlgebra g;
    g.c_ = std::move(c);
    g.names_ = std::move(names);
    return g;
  }

  static LieAlgebra abelian(std::size_t n) { return from_tensor(BilinearTable(n)); }

  std::size_t dim() const { return c_.dim(); }
  const BilinearTable& structure() const { return c_; }
  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return c_(i, j, k); }
  const std::vector<std::string>& basis_names() const { return names_; }

  Vector bracket(std::size_t i, std::size_t j) const { return c_.basis_value(i, j); }

  bool is_abelian() const { return c_.is_zero(); }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.c_ == b.c_; }

 private:
  BilinearTable c_;
  std::vector<std::string> names_;
};

/// Builds a Lie algebra from bracket entries [e_i, e_j] = value (1-based
/// indices). [e_j, e_i] is filled in by antisymmetry; giving both orientations
/// is allowed only when they agree.
inline LieAlgebra lie_from_table(std::size_t dim, const std::vector<TableEntry>& entries) {
  std::vector<Rational> d(dim * dim * dim);
  std::vector<bool> seen(dim * dim, false);
  for (const auto& e : entries) {
    if (e.i < 1 || e.j < 1 || std::size_t(e.i) > dim || std::size_t(e.j) > dim)
      throw IndexOutOfRange("bracket index out of range: [" + std::to_string(e.i) + "," + std::to_string(e.j) + "]");
    if (e.value.size() != dim) throw DimensionMismatch("bracket value has wrong length");
    std::size_t i = e.i - 1, j = e.j - 1;
    if (i == j) {
      if (!is_zero(e.value))
        throw AntisymmetryConflict("antisymmetry", {e.i, e.j}, format_vector(e.value));
      continue;
    }
    for (std::size_t k = 0; k < dim; ++k) {
      Rational& ij = d[(i * dim + j) * dim + k];
      Rational& ji = d[(j * dim + i) * dim + k];
      if (seen[i * dim + j] && ij != e.value[k])
        throw AntisymmetryConflict("antisymmetry", {e.i, e.j}, "conflicting entries");
      ij = e.value[k];
      ji = -e.value[k];
    }
    seen[i * dim + j] = seen[j * dim + i] = true;
  }
  return LieAlgebra::from_tensor(BilinearTable(dim, std::move(d)));
}

inline void check_vector(const LieAlgebra& g, const Vector& v) {
  if (v.size() != g.dim()) throw DimensionMismatch("vector length does not match algebra dimension");
}

inline Vector bracket_vec(const LieAlgebra& g, const Vector& u, const Vector& v) {
  return g.structure().apply(u, v);
}

/// Matrix of y -> [x, y].
inline Matrix ad_matrix(const LieAlgebra& g, const Vector& x) { return g.structure().left_matrix(x); }
inline Matrix ad_basis(const LieAlgebra& g, std::size_t i) { return g.structure().left_basis_matrix(i); }

/// span{[u, v] : u in a, v in b}
inline Subspace bracket_span(const LieAlgebra& g, const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != g.dim() || b.ambient_dim() != g.dim())
    throw DimensionMismatch("subspace dimension does not match algebra");
  std::vector<Vector> out;
  for (const auto& u : a.basis_vectors())
    for (const auto& v : b.basis_vectors()) {
      Vector w = bracket_vec(g, u, v);
      if (!is_zero(w)) out.push_back(std::move(w));
    }
  return Subspace::span(g.dim(), out);
}

/// Center of g: common kernel of all ad(e_i).
inline Subspace lie_center(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  Matrix stacked(n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix a = ad_basis(g, i);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) stacked(i * n + r, c) = a(r, c);
  }
  return nullspace(stacked);
}

inline bool is_lie_ideal(const LieAlgebra& g, const Subspace& s) {
  return s.contains(bracket_span(g, Subspace::full(g.dim()), s));
}

// ---------------------------------------------------------------------------
// Series
// ---------------------------------------------------------------------------

/// Terms of a central or derived series, strictly monotone, ending at the
/// first term that repeats. `stabilized` is always true for the finite
/// dimensional algebras handled here.
struct SeriesReport {
  std::vector<Subspace> terms;
  bool stabilized = false;

  std::vector<std::size_t> dims() const {
    std::vector<std::size_t> d;
    for (const auto& t : terms) d.push_back(t.dim());
    return d;
  }
};

/// gamma_1 = g, gamma_{i+1} = [g, gamma_i].
inline SeriesReport lower_central_series(const LieAlgebra& g) {
  SeriesReport rep;
  Subspace full = Subspace::full(g.dim());
  rep.terms.push_back(full);
  while (true) {
    Subspace next = bracket_span(g, full, rep.terms.back());
    if (next == rep.terms.back()) break;
    rep.terms.push_back(std::move(next));
  }
  rep.stabilized = true;
  return rep;
}

/// g, [g,g], [[g,g],[g,g]], ...
inline SeriesReport derived_series(const LieAlgebra& g) {
  SeriesReport rep;
  rep.terms.push_back(Subspace::full(g.dim()));
  while (true) {
    Subspace next = bracket_span(g, rep.terms.back(), rep.terms.back());
    if (next == rep.terms.back()) break;
    rep.terms.push_back(std::move(next));
  }
  rep.stabilized = true;
  return rep;
}

/// g / I on the complement spanned by the non-pivot standard basis vectors
/// of I's canonical basis.
struct Quotient {
  LieAlgebra algebra;
  Matrix projection;                    ///< q x n, coordinates of v + I
  std::vector<std::size_t> complement;  ///< representatives e_c of the quotient basis
};

inline Quotient quotient_by_ideal(const LieAlgebra& g, const Subspace& ideal) {
  const std::size_t n = g.dim();
  if (ideal.ambient_dim() != n) throw DimensionMismatch("ideal lives in the wrong space");
  for (std::size_t a = 0; a < n; ++a)
    for (const auto& v : ideal.basis_vectors()) {
      Vector w = g.structure().apply_left(a, v);
      if (!ideal.contains(w))
        throw NotAnIdeal("[e" + std::to_string(a + 1) + ", " + format_vector(v) + "] = " + format_vector(w) +
                         " is not in " + ideal.str());
    }
  std::vector<bool> is_pivot(n, false);
  for (auto p : ideal.pivots()) is_pivot[p] = true;
  Quotient q;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) q.complement.push_back(c);
  const std::size_t m = q.complement.size();
  q.projection = Matrix(m, n);
  for (std::size_t c = 0; c < n; ++c) {
    Vector red = ideal.reduce(unit_vector(n, c));
    for (std::size_t a = 0; a < m; ++a) q.projection(a, c) = red[q.complement[a]];
  }
  std::vector<Rational> d(m * m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      Vector img = q.projection * g.bracket(q.complement[a], q.complement[b]);
      for (std::size_t k = 0; k < m; ++k) d[(a * m + b) * m + k] = img[k];
    }
  q.algebra = LieAlgebra::from_tensor(BilinearTable(m, std::move(d)));
  return q;
}

/// Z_1 = Z(g), Z_{i+1}/Z_i = Z(g/Z_i), computed through explicit quotients.
inline SeriesReport upper_central_series(const LieAlgebra& g) {
  SeriesReport rep;
  rep.terms.push_back(lie_center(g));
  while (!rep.terms.back().is_full()) {
    const Subspace& cur = rep.terms.back();
    Quotient q = quotient_by_ideal(g, cur);
    Subspace zq = lie_center(q.algebra);
    std::vector<Vector> lifts = cur.basis_vectors();
    for (const auto& v : zq.basis_vectors()) {
      Vector lift(g.dim());
      for (std::size_t a = 0; a < v.size(); ++a) lift[q.complement[a]] = v[a];
      lifts.push_back(std::move(lift));
    }
    Subspace next = Subspace::span(g.dim(), lifts);
    if (next == cur) break;
    rep.terms.push_back(std::move(next));
  }
  rep.stabilized = true;
  return rep;
}

struct SolvabilityReport {
  std::optional<std::size_t> solvable_class;    ///< derived length, if solvable
  std::optional<std::size_t> nilpotency_class;  ///< c with gamma_{c+1} = 0, if nilpotent
  bool is_two_step_solvable = false;            ///< [[g,g],[g,g]] = 0
};

inline SolvabilityReport classify_solvability(const LieAlgebra& g) {
  SolvabilityReport r;
  SeriesReport der = derived_series(g);
  if (der.terms.back().is_zero()) r.solvable_class = der.terms.size() - 1;
  SeriesReport low = lower_central_series(g);
  if (low.terms.back().is_zero()) r.nilpotency_class = low.terms.size() - 1;
  r.is_two_step_solvable = der.terms.size() <= 3 && der.terms.back().is_zero();
  return r;
}

}  // namespace lralg

#endif  // LRALG_LIE_ALGEBRA_HPP

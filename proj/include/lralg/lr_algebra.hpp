#ifndef LRALG_LR_ALGEBRA_HPP
#define LRALG_LR_ALGEBRA_HPP

#include <lralg/bilinear.hpp>
#include <lralg/errors.hpp>
#include <lralg/lie_algebra.hpp>
#include <lralg/linalg.hpp>

#include <optional>
#include <string>
#include <vector>

namespace lralg {

/// Checks a product tensor p on the space of g against
///   LR1  x.(y.z) = y.(x.z)
///   LR2  (x.y).z = (x.z).y
///   compat  x.y - y.x = [x,y]
/// on all basis triples (pairs for compat). By trilinearity this is
/// equivalent to the identities on all vectors.
inline VerificationReport verify_product(const LieAlgebra& g, const BilinearTable& p) {
  if (g.dim() != p.dim()) throw DimensionMismatch("product and Lie algebra dimensions differ");
  const std::size_t n = g.dim();
  VerificationReport rep;
  std::vector<Matrix> L, R;
  for (std::size_t i = 0; i < n; ++i) {
    L.push_back(p.left_basis_matrix(i));
    R.push_back(p.right_basis_matrix(i));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix c = commutator(L[i], L[j]);
      if (c.is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k) {
        Vector col = c.column(k);
        if (!is_zero(col)) rep.add("LR1", {int(i + 1), int(j + 1), int(k + 1)}, col);
      }
    }
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) {
      // column x of [R(k), R(j)] is (x.y).z - (x.z).y for y = e_j, z = e_k
      Matrix c = commutator(R[k], R[j]);
      if (c.is_zero()) continue;
      for (std::size_t x = 0; x < n; ++x) {
        Vector col = c.column(x);
        if (!is_zero(col)) rep.add("LR2", {int(x + 1), int(j + 1), int(k + 1)}, col);
      }
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector r = p.basis_value(i, j) - p.basis_value(j, i) - g.bracket(i, j);
      if (!is_zero(r)) rep.add("compat", {int(i + 1), int(j + 1)}, r);
    }
  return rep;
}

/// LR-structure on a Lie algebra: a product whose left multiplications
/// commute, whose right multiplications commute, and whose commutator is the
/// Lie bracket. Instances are always verified; completeness is computed once.
class LRAlgebra {
 public:
  LRAlgebra() = default;

  static LRAlgebra create(LieAlgebra g, BilinearTable p) {
    VerificationReport rep = verify_product(g, p);
    if (!rep.ok()) throw_first(rep.violations.front());
    LRAlgebra a;
    a.g_ = std::move(g);
    a.p_ = std::move(p);
    const std::size_t n = a.g_.dim();
    a.complete_ = true;
    for (std::size_t i = 0; i < n; ++i) {
      a.left_.push_back(a.p_.left_basis_matrix(i));
      a.right_.push_back(a.p_.right_basis_matrix(i));
      if (a.complete_ && !matrix_is_nilpotent(a.left_.back())) a.complete_ = false;
    }
    return a;
  }

  std::size_t dim() const { return g_.dim(); }
  const LieAlgebra& lie() const { return g_; }
  const BilinearTable& product() const { return p_; }
  bool complete() const { return complete_; }

  Vector mult(const Vector& u, const Vector& v) const { return p_.apply(u, v); }
  Vector basis_product(std::size_t i, std::size_t j) const { return p_.basis_value(i, j); }

  const Matrix& left_basis(std::size_t i) const { return left_.at(i); }
  const Matrix& right_basis(std::size_t i) const { return right_.at(i); }

  friend bool operator==(const LRAlgebra& a, const LRAlgebra& b) { return a.g_ == b.g_ && a.p_ == b.p_; }

  [[noreturn]] static void throw_first(const Violation& v) {
    std::string r = format_vector(v.residual);
    if (v.check == "LR1") throw LR1Violation("LR1 x.(y.z) = y.(x.z)", v.indices, r);
    if (v.check == "LR2") throw LR2Violation("LR2 (x.y).z = (x.z).y", v.indices, r);
    throw CompatViolation("compatibility x.y - y.x = [x,y]", v.indices, r);
  }

 private:
  LieAlgebra g_;
  BilinearTable p_;
  bool complete_ = false;
  std::vector<Matrix> left_, right_;
};

/// Product entries e_i . e_j = value (1-based). Unlisted products are zero.
inline LRAlgebra lr_from_table(const LieAlgebra& g, const std::vector<TableEntry>& entries) {
  const std::size_t n = g.dim();
  std::vector<Rational> d(n * n * n);
  for (const auto& e : entries) {
    if (e.i < 1 || e.j < 1 || std::size_t(e.i) > n || std::size_t(e.j) > n)
      throw IndexOutOfRange("product index out of range: (" + std::to_string(e.i) + "," + std::to_string(e.j) + ")");
    if (e.value.size() != n) throw DimensionMismatch("product value has wrong length");
    for (std::size_t k = 0; k < n; ++k) d[((e.i - 1) * n + (e.j - 1)) * n + k] += e.value[k];
  }
  return LRAlgebra::create(g, BilinearTable(n, std::move(d)));
}

/// Product given by its left multiplication operators L(e_i).
inline LRAlgebra lr_from_left_mults(const LieAlgebra& g, const std::vector<Matrix>& left) {
  if (left.size() != g.dim()) throw DimensionMismatch("need one left multiplication per basis vector");
  return LRAlgebra::create(g, BilinearTable::from_left_matrices(left));
}

inline Matrix left_mult(const LRAlgebra& a, const Vector& x) { return a.product().left_matrix(x); }
inline Matrix right_mult(const LRAlgebra& a, const Vector& x) { return a.product().right_matrix(x); }

inline VerificationReport verify_axioms(const LRAlgebra& a) { return verify_product(a.lie(), a.product()); }

inline bool is_complete(const LRAlgebra& a) { return a.complete(); }

/// {x : x.y = y.x for all y}; coincides with the center of the Lie algebra.
inline Subspace center(const LRAlgebra& a) {
  const std::size_t n = a.dim();
  Matrix stacked(n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix d = a.left_basis(i) - a.right_basis(i);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) stacked(i * n + r, c) = d(r, c);
  }
  return nullspace(stacked);
}

/// span{u.v : u in I, v in J}
inline Subspace ideal_product(const LRAlgebra& a, const Subspace& I, const Subspace& J) {
  if (I.ambient_dim() != a.dim() || J.ambient_dim() != a.dim())
    throw DimensionMismatch("subspace dimension does not match algebra");
  std::vector<Vector> out;
  for (const auto& u : I.basis_vectors())
    for (const auto& v : J.basis_vectors()) {
      Vector w = a.mult(u, v);
      if (!is_zero(w)) out.push_back(std::move(w));
    }
  return Subspace::span(a.dim(), out);
}

inline Subspace bracket_span(const LRAlgebra& a, const Subspace& I, const Subspace& J) {
  return bracket_span(a.lie(), I, J);
}

/// A.I and I.A both contained in I. Returns the first witness when not.
inline std::optional<Violation> two_sided_ideal_witness(const LRAlgebra& a, const Subspace& I) {
  if (I.ambient_dim() != a.dim()) throw DimensionMismatch("subspace dimension does not match algebra");
  const auto basis = I.basis_vectors();
  for (std::size_t k = 0; k < a.dim(); ++k)
    for (std::size_t b = 0; b < basis.size(); ++b) {
      Vector l = a.left_basis(k) * basis[b];
      if (!I.contains(l)) return Violation{"left ideal", {int(k + 1), int(b + 1)}, I.reduce(l)};
      Vector r = a.right_basis(k) * basis[b];
      if (!I.contains(r)) return Violation{"right ideal", {int(k + 1), int(b + 1)}, I.reduce(r)};
    }
  return std::nullopt;
}

inline bool is_two_sided_ideal(const LRAlgebra& a, const Subspace& I) { return !two_sided_ideal_witness(a, I); }

namespace detail {

inline void check_matrix_zero(VerificationReport& rep, const std::string& name, std::vector<int> idx,
                              const Matrix& m) {
  if (m.is_zero()) return;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Vector col = m.column(c);
    if (is_zero(col)) continue;
    auto full = idx;
    full.push_back(int(c + 1));
    rep.add(name, full, col);
  }
}

inline void check_subset(VerificationReport& rep, const std::string& name, std::vector<int> idx,
                         const Subspace& big, const Subspace& small) {
  for (const auto& v : small.basis_vectors())
    if (!big.contains(v)) {
      rep.add(name, idx, big.reduce(v));
      return;
    }
}

inline const Subspace& series_term(const SeriesReport& s, std::size_t i) {
  // terms[0] is the first term; past the end the series has stabilized
  return i < s.terms.size() ? s.terms[i] : s.terms.back();
}

}  // namespace detail

/// Structural identities every LR-algebra satisfies, checked exhaustively on
/// basis tuples (or on canonical bases of the relevant spans, which is
/// equivalent by multilinearity):
///   cyclic-right [x,y].z + [y,z].x + [z,x].y = 0
///   cyclic-left  x.[y,z] + y.[z,x] + z.[x,y] = 0
///   ad-left      ad([x,y]) = [ad x, L y] + [L x, ad y]
///   ad-right     ad([x,y]) = -[ad x, R y] - [R x, ad y]
///   symmetry     (x.y).(u.v) = (u.v).(x.y)
///   two-step     [[x,y],[u,v]] = 0
///   gamma-ideal, center-series-ideal   gamma_i and Z_i are two-sided ideals
///   center-annihilation   Z(A).[A,A] = [A,A].Z(A) = 0
///   gamma-grading          gamma_{i+1}.gamma_{j+1} in gamma_{i+j+1}
///   product-ideal, bracket-ideal       I.J and [I,J] are two-sided ideals
///   left-derivation, right-derivation  L(a), R(a) are derivations of g
/// Series terms are considered up to index `depth` (0 means dim).
inline VerificationReport lemma_suite(const LRAlgebra& a, std::size_t depth = 0) {
  const std::size_t n = a.dim();
  if (depth == 0) depth = n;
  const LieAlgebra& g = a.lie();
  const BilinearTable& p = a.product();
  const BilinearTable& c = g.structure();
  VerificationReport rep;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        std::vector<int> idx{int(i + 1), int(j + 1), int(k + 1)};
        Vector r6 = p.apply_right(g.bracket(i, j), k) + p.apply_right(g.bracket(j, k), i) +
                    p.apply_right(g.bracket(k, i), j);
        if (!is_zero(r6)) rep.add("cyclic-right", idx, r6);
        Vector r7 = p.apply_left(i, g.bracket(j, k)) + p.apply_left(j, g.bracket(k, i)) +
                    p.apply_left(k, g.bracket(i, j));
        if (!is_zero(r7)) rep.add("cyclic-left", idx, r7);
      }

  std::vector<Matrix> ad;
  for (std::size_t i = 0; i < n; ++i) ad.push_back(ad_basis(g, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Matrix adxy = ad_matrix(g, g.bracket(i, j));
      std::vector<int> idx{int(i + 1), int(j + 1)};
      detail::check_matrix_zero(rep, "ad-left", idx,
                                adxy - commutator(ad[i], a.left_basis(j)) - commutator(a.left_basis(i), ad[j]));
      detail::check_matrix_zero(rep, "ad-right", idx,
                                adxy + commutator(ad[i], a.right_basis(j)) + commutator(a.right_basis(i), ad[j]));
    }

  Subspace full = Subspace::full(n);
  Subspace aa = ideal_product(a, full, full);
  {
    auto w = aa.basis_vectors();
    for (std::size_t x = 0; x < w.size(); ++x)
      for (std::size_t y = x + 1; y < w.size(); ++y) {
        Vector r = a.mult(w[x], w[y]) - a.mult(w[y], w[x]);
        if (!is_zero(r)) rep.add("symmetry", {int(x + 1), int(y + 1)}, r);
      }
  }
  SeriesReport derived = derived_series(g);
  Subspace gg = detail::series_term(derived, 1);
  {
    auto w = gg.basis_vectors();
    for (std::size_t x = 0; x < w.size(); ++x)
      for (std::size_t y = x + 1; y < w.size(); ++y) {
        Vector r = bracket_vec(g, w[x], w[y]);
        if (!is_zero(r)) rep.add("two-step", {int(x + 1), int(y + 1)}, r);
      }
  }

  SeriesReport gamma = lower_central_series(g);
  SeriesReport zs = upper_central_series(g);
  std::vector<Subspace> ideals;
  auto remember = [&](const Subspace& s) {
    for (const auto& t : ideals)
      if (t == s) return;
    ideals.push_back(s);
  };
  for (std::size_t i = 0; i < depth; ++i) {
    const Subspace& gi = detail::series_term(gamma, i);
    if (auto w = two_sided_ideal_witness(a, gi)) rep.add("gamma-ideal", {int(i + 1)}, w->residual);
    remember(gi);
    const Subspace& zi = detail::series_term(zs, i);
    if (auto w = two_sided_ideal_witness(a, zi)) rep.add("center-series-ideal", {int(i + 1)}, w->residual);
    remember(zi);
  }

  Subspace z = center(a);
  Subspace lz = lie_center(g);
  detail::check_subset(rep, "center", {1}, lz, z);
  detail::check_subset(rep, "center", {2}, z, lz);
  if (Subspace zl = ideal_product(a, z, gg); !zl.is_zero()) rep.add("center-annihilation", {1}, zl.basis().row(0));
  if (Subspace zr = ideal_product(a, gg, z); !zr.is_zero()) rep.add("center-annihilation", {2}, zr.basis().row(0));

  for (std::size_t i = 0; i < depth; ++i)
    for (std::size_t j = 0; i + j + 1 <= depth; ++j) {
      Subspace prod = ideal_product(a, detail::series_term(gamma, i), detail::series_term(gamma, j));
      detail::check_subset(rep, "gamma-grading", {int(i), int(j)}, detail::series_term(gamma, i + j), prod);
    }

  for (std::size_t x = 0; x < ideals.size(); ++x)
    for (std::size_t y = 0; y < ideals.size(); ++y) {
      if (auto w = two_sided_ideal_witness(a, ideal_product(a, ideals[x], ideals[y])))
        rep.add("product-ideal", {int(x + 1), int(y + 1)}, w->residual);
      if (auto w = two_sided_ideal_witness(a, bracket_span(g, ideals[x], ideals[y])))
        rep.add("bracket-ideal", {int(x + 1), int(y + 1)}, w->residual);
    }

  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        std::vector<int> idx{int(k + 1), int(i + 1), int(j + 1)};
        // a.[x,y] - [a.x, y] - [x, a.y]
        Vector l = p.apply_left(k, g.bracket(i, j)) - c.apply_right(p.basis_value(k, i), j) -
                   c.apply_left(i, p.basis_value(k, j));
        if (!is_zero(l)) rep.add("left-derivation", idx, l);
        // [x,y].a - [x.a, y] - [x, y.a]
        Vector r = p.apply_right(g.bracket(i, j), k) - c.apply_right(p.basis_value(i, k), j) -
                   c.apply_left(i, p.basis_value(j, k));
        if (!is_zero(r)) rep.add("right-derivation", idx, r);
      }
  return rep;
}

}  // namespace lralg

#endif  // LRALG_LR_ALGEBRA_HPP

#ifndef LRALG_EXTENSIONS_HPP
#define LRALG_EXTENSIONS_HPP

#include <lralg/errors.hpp>
#include <lralg/lie_algebra.hpp>
#include <lralg/lr_algebra.hpp>

#include <string>
#include <vector>

namespace lralg {

/// Extension g = (a, b, phi, Omega) of a Lie algebra b by an abelian kernel a.
/// phi[i] is the action of the i-th basis vector of b on a; omega[i*m + j]
/// holds Omega(x_i, x_j) in a, where m = dim b. The extension lives on a x b
/// with basis a_1..a_k followed by x_1..x_m.
struct ExtensionData {
  std::size_t a_dim = 0;
  LieAlgebra b;
  std::vector<Matrix> phi;
  std::vector<Vector> omega;

  std::size_t b_dim() const { return b.dim(); }
  std::size_t dim() const { return a_dim + b.dim(); }

  const Vector& cocycle(std::size_t i, std::size_t j) const { return omega.at(i * b.dim() + j); }

  /// phi(x) for a coordinate vector x of b.
  Matrix action(const Vector& x) const {
    Matrix m(a_dim, a_dim);
    for (std::size_t i = 0; i < x.size(); ++i)
      if (!x[i].is_zero()) m += x[i] * phi[i];
    return m;
  }

  /// Omega(u, v) for coordinate vectors of b.
  Vector cocycle(const Vector& u, const Vector& v) const {
    Vector out(a_dim);
    for (std::size_t i = 0; i < u.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j)
        if (!u[i].is_zero() && !v[j].is_zero()) axpy(out, u[i] * v[j], cocycle(i, j));
    return out;
  }

  void check_shapes() const {
    const std::size_t m = b.dim();
    if (phi.size() != m) throw DimensionMismatch("need one action matrix per basis vector of b");
    for (const auto& p : phi)
      if (p.rows() != a_dim || p.cols() != a_dim) throw DimensionMismatch("action matrix has wrong shape");
    if (omega.size() != m * m) throw DimensionMismatch("cocycle needs dim(b)^2 values");
    for (const auto& w : omega)
      if (w.size() != a_dim) throw DimensionMismatch("cocycle value has wrong length");
  }
};

/// Data lifting LR-products on a and b to the extension:
///   (a,x) o (b,y) = (a.b + phi1(y)a + phi2(x)b + w(x,y), x.y)
/// The product on a must be commutative and associative, and the product on
/// b must be an LR-structure on b.
struct LiftData {
  std::vector<Matrix> phi1;
  std::vector<Matrix> phi2;
  std::vector<Vector> omega;  ///< w(x_i, x_j) at i*m + j; not necessarily antisymmetric
  BilinearTable a_product;
  BilinearTable b_product;

  /// phi1 = phi2 = 0, w = 0 and zero products.
  static LiftData trivial(const ExtensionData& d) {
    LiftData l;
    const std::size_t m = d.b_dim();
    l.phi1.assign(m, Matrix(d.a_dim, d.a_dim));
    l.phi2 = l.phi1;
    l.omega.assign(m * m, Vector(d.a_dim));
    l.a_product = BilinearTable(d.a_dim);
    l.b_product = BilinearTable(m);
    return l;
  }

  const Vector& w(std::size_t i, std::size_t j, std::size_t m) const { return omega.at(i * m + j); }
};

namespace detail {

inline Matrix combine(const std::vector<Matrix>& basis_maps, const Vector& x, std::size_t k) {
  Matrix m(k, k);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) m += x[i] * basis_maps[i];
  return m;
}

/// w(u, v) extended bilinearly from basis values.
inline Vector bilinear(const std::vector<Vector>& w, const Vector& u, const Vector& v, std::size_t k) {
  const std::size_t m = u.size();
  Vector out(k);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (!u[i].is_zero() && !v[j].is_zero()) axpy(out, u[i] * v[j], w[i * m + j]);
  return out;
}

inline void report_matrix(VerificationReport& rep, const std::string& name, std::vector<int> idx, const Matrix& m) {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Vector col = m.column(c);
    if (is_zero(col)) continue;
    auto full = idx;
    full.push_back(int(c + 1));
    rep.add(name, full, col);
  }
}

inline void report_vector(VerificationReport& rep, const std::string& name, std::vector<int> idx, const Vector& v) {
  if (!is_zero(v)) rep.add(name, std::move(idx), v);
}

}  // namespace detail

/// Representation law phi([x,y]) = [phi(x), phi(y)], antisymmetry of Omega
/// and the 2-cocycle identity
///   phi(x)O(y,z) - phi(y)O(x,z) + phi(z)O(x,y) = O([x,y],z) - O([x,z],y) + O([y,z],x)
/// on all basis pairs and triples of b.
inline VerificationReport validate_extension(const ExtensionData& d) {
  d.check_shapes();
  const std::size_t m = d.b_dim();
  VerificationReport rep;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      detail::report_matrix(rep, "representation", {int(i + 1), int(j + 1)},
                            d.action(d.b.bracket(i, j)) - commutator(d.phi[i], d.phi[j]));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j)
      detail::report_vector(rep, "cocycle-antisymmetry", {int(i + 1), int(j + 1)}, d.cocycle(i, j) + d.cocycle(j, i));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        Vector x = unit_vector(m, i), y = unit_vector(m, j), z = unit_vector(m, k);
        Vector lhs = d.phi[i] * d.cocycle(j, k) - d.phi[j] * d.cocycle(i, k) + d.phi[k] * d.cocycle(i, j);
        Vector rhs = d.cocycle(d.b.bracket(i, j), z) - d.cocycle(d.b.bracket(i, k), y) + d.cocycle(d.b.bracket(j, k), x);
        detail::report_vector(rep, "cocycle", {int(i + 1), int(j + 1), int(k + 1)}, lhs - rhs);
      }
  return rep;
}

inline void require_valid(const ExtensionData& d) {
  VerificationReport rep = validate_extension(d);
  if (!rep.ok()) {
    const Violation& v = rep.violations.front();
    throw AlgebraError("invalid extension data: " + v.check + " fails at " + IdentityViolation::format_indices(v.indices) +
                       ", residual " + format_vector(v.residual, "a"));
  }
}

/// [(a,x),(b,y)] = (phi(x)b - phi(y)a + Omega(x,y), [x,y]), kernel basis first.
inline LieAlgebra extension_lie_algebra(const ExtensionData& d) {
  require_valid(d);
  const std::size_t k = d.a_dim, m = d.b_dim(), n = k + m;
  std::vector<Rational> t(n * n * n);
  auto at = [&](std::size_t i, std::size_t j, std::size_t c) -> Rational& { return t[(i * n + j) * n + c]; };
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t q = 0; q < k; ++q)
      for (std::size_t r = 0; r < k; ++r) {
        at(k + i, q, r) = d.phi[i](r, q);
        at(q, k + i, r) = -d.phi[i](r, q);
      }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Vector& w = d.cocycle(i, j);
      for (std::size_t r = 0; r < k; ++r) at(k + i, k + j, r) = w[r];
      for (std::size_t c = 0; c < m; ++c) at(k + i, k + j, k + c) = d.b.c(i, j, c);
    }
  return LieAlgebra::from_tensor(BilinearTable(n, std::move(t)));
}

/// Lifted product tensor on a x b, assembled without checking anything.
inline BilinearTable lift_product_tensor(const ExtensionData& d, const LiftData& l) {
  const std::size_t k = d.a_dim, m = d.b_dim(), n = k + m;
  std::vector<Rational> t(n * n * n);
  auto at = [&](std::size_t i, std::size_t j, std::size_t c) -> Rational& { return t[(i * n + j) * n + c]; };
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = 0; q < k; ++q)
      for (std::size_t r = 0; r < k; ++r) at(p, q, r) = l.a_product(p, q, r);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t p = 0; p < k; ++p)
      for (std::size_t r = 0; r < k; ++r) {
        at(p, k + j, r) = l.phi1[j](r, p);  // a_p o x_j = phi1(x_j) a_p
        at(k + j, p, r) = l.phi2[j](r, p);  // x_j o a_p = phi2(x_j) a_p
      }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Vector& w = l.w(i, j, m);
      for (std::size_t r = 0; r < k; ++r) at(k + i, k + j, r) = w[r];
      for (std::size_t c = 0; c < m; ++c) at(k + i, k + j, k + c) = l.b_product(i, j, c);
    }
  return BilinearTable(n, std::move(t));
}

inline void check_lift_shapes(const ExtensionData& d, const LiftData& l) {
  const std::size_t k = d.a_dim, m = d.b_dim();
  if (l.phi1.size() != m || l.phi2.size() != m) throw DimensionMismatch("lift maps need one matrix per basis vector of b");
  for (const auto* v : {&l.phi1, &l.phi2})
    for (const auto& p : *v)
      if (p.rows() != k || p.cols() != k) throw DimensionMismatch("lift matrix has wrong shape");
  if (l.omega.size() != m * m) throw DimensionMismatch("lift bilinear map needs dim(b)^2 values");
  for (const auto& w : l.omega)
    if (w.size() != k) throw DimensionMismatch("lift bilinear value has wrong length");
  if (l.a_product.dim() != k || l.b_product.dim() != m) throw DimensionMismatch("lift products have wrong dimension");
}

/// Throws unless the kernel product is commutative and associative and the
/// quotient product is an LR-structure on b.
inline void check_lift_invariants(const ExtensionData& d, const LiftData& l) {
  check_lift_shapes(d, l);
  const std::size_t k = d.a_dim;
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = 0; q < k; ++q) {
      if (l.a_product.basis_value(p, q) != l.a_product.basis_value(q, p))
        throw AlgebraError("kernel product is not commutative");
      for (std::size_t r = 0; r < k; ++r)
        if (l.a_product.apply_right(l.a_product.basis_value(p, q), r) !=
            l.a_product.apply_left(p, l.a_product.basis_value(q, r)))
          throw AlgebraError("kernel product is not associative");
    }
  VerificationReport rb = verify_product(d.b, l.b_product);
  if (!rb.ok()) throw AlgebraError("quotient product is not an LR-structure on b: " + rb.violations.front().check);
}

/// The twelve conditions under which the lifted product is an LR-structure on
/// the extension. Reported as "w-antisymmetric-part" .. "phi2-kernel-symmetric", with 1-based indices
/// (kernel indices refer to a_1..a_k, quotient indices to x_1..x_m).
inline const std::vector<std::string>& lift_condition_names() {
  static const std::vector<std::string> names{
      "w-antisymmetric-part", "phi-split",      "w-left-compat",         "w-kernel-left",
      "phi2-commute",         "phi2-kernel-derivation", "phi1-kernel-symmetric", "w-right-compat",
      "w-kernel-right",       "phi1-commute",   "phi1-kernel-derivation", "phi2-kernel-symmetric"};
  return names;
}

inline VerificationReport verify_lift_conditions(const ExtensionData& d, const LiftData& l) {
  d.check_shapes();
  check_lift_invariants(d, l);
  const std::size_t k = d.a_dim, m = d.b_dim();
  const BilinearTable& ap = l.a_product;
  const BilinearTable& bp = l.b_product;
  auto phi1 = [&](const Vector& x) { return detail::combine(l.phi1, x, k); };
  auto phi2 = [&](const Vector& x) { return detail::combine(l.phi2, x, k); };
  auto w = [&](const Vector& x, const Vector& y) { return detail::bilinear(l.omega, x, y, k); };
  auto ex = [&](std::size_t i) { return unit_vector(m, i); };
  auto ea = [&](std::size_t p) { return unit_vector(k, p); };
  auto I = [](std::size_t i) { return int(i + 1); };
  VerificationReport rep;

  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y)
      detail::report_vector(rep, "w-antisymmetric-part", {I(x), I(y)}, l.w(x, y, m) - l.w(y, x, m) - d.cocycle(x, y));
    detail::report_matrix(rep, "phi-split", {I(x)}, l.phi2[x] - l.phi1[x] - d.phi[x]);
  }
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      detail::report_matrix(rep, "phi2-commute", {I(x), I(y)}, commutator(l.phi2[x], l.phi2[y]));
      detail::report_matrix(rep, "phi1-commute", {I(x), I(y)}, commutator(l.phi1[x], l.phi1[y]));
      for (std::size_t z = 0; z < m; ++z) {
        Vector xz = bp.basis_value(x, z), yz = bp.basis_value(y, z), xy = bp.basis_value(x, y);
        detail::report_vector(rep, "w-left-compat", {I(x), I(y), I(z)},
                              l.phi2[x] * l.w(y, z, m) - l.phi2[y] * l.w(x, z, m) - w(ex(y), xz) + w(ex(x), yz));
        detail::report_vector(rep, "w-right-compat", {I(x), I(y), I(z)},
                              l.phi1[z] * l.w(x, y, m) - l.phi1[y] * l.w(x, z, m) - w(xz, ex(y)) + w(xy, ex(z)));
      }
    }
  for (std::size_t y = 0; y < m; ++y)
    for (std::size_t z = 0; z < m; ++z) {
      Vector yz = bp.basis_value(y, z);
      // a.w(y,z) + phi1(y.z)a - phi2(y)phi1(z)a, as an operator on a
      Matrix op12 = ap.left_matrix(l.w(y, z, m)) + phi1(yz) - l.phi2[y] * l.phi1[z];
      detail::report_matrix(rep, "w-kernel-left", {I(y), I(z)}, op12);
      // w(y,z).c + phi2(y.z)c - phi1(z)phi2(y)c, as an operator on a
      Matrix op17 = ap.right_matrix(l.w(y, z, m)) + phi2(yz) - l.phi1[z] * l.phi2[y];
      detail::report_matrix(rep, "w-kernel-right", {I(y), I(z)}, op17);
    }
  for (std::size_t y = 0; y < m; ++y)
    for (std::size_t p = 0; p < k; ++p)
      for (std::size_t q = 0; q < k; ++q) {
        Vector a = ea(p), b = ea(q);
        detail::report_vector(rep, "phi2-kernel-derivation", {I(y), I(p), I(q)},
                              l.phi2[y] * ap.apply(a, b) - ap.apply(a, l.phi2[y] * b));
        detail::report_vector(rep, "phi1-kernel-symmetric", {I(y), I(p), I(q)},
                              ap.apply(a, l.phi1[y] * b) - ap.apply(b, l.phi1[y] * a));
        detail::report_vector(rep, "phi1-kernel-derivation", {I(y), I(p), I(q)},
                              l.phi1[y] * ap.apply(a, b) - ap.apply(l.phi1[y] * a, b));
        detail::report_vector(rep, "phi2-kernel-symmetric", {I(y), I(p), I(q)},
                              ap.apply(l.phi2[y] * a, b) - ap.apply(l.phi2[y] * b, a));
      }
  return rep;
}

/// LR-structure on the extension from lift data satisfying all twelve
/// conditions; the result is re-verified against the LR axioms.
inline LRAlgebra lift_product(const ExtensionData& d, const LiftData& l) {
  VerificationReport rep = verify_lift_conditions(d, l);
  if (!rep.ok()) {
    const Violation& v = rep.violations.front();
    throw LiftConditionsFailed(std::to_string(rep.violations.size()) + " violation(s), first " + v.check + " at " +
                               IdentityViolation::format_indices(v.indices) + ", residual " +
                               format_vector(v.residual, "a"));
  }
  return LRAlgebra::create(extension_lie_algebra(d), lift_product_tensor(d, l));
}

inline bool cocycle_is_zero(const ExtensionData& d) {
  for (const auto& w : d.omega)
    if (!is_zero(w)) return false;
  return true;
}

/// Split extension: with Omega = 0 and an LR-structure on b whose products are
/// annihilated by phi, (a,x) o (b,y) = (phi(x)b, x.y) is an LR-structure.
inline LRAlgebra semidirect_lr(const ExtensionData& d, const LRAlgebra& b_lr) {
  d.check_shapes();
  if (!cocycle_is_zero(d)) throw HypothesisFailed("the extension is not split: Omega is nonzero");
  if (!(b_lr.lie() == d.b)) throw HypothesisFailed("the LR-structure lives on a different Lie algebra than b");
  const std::size_t m = d.b_dim();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Matrix img = d.action(b_lr.basis_product(i, j));
      if (!img.is_zero())
        throw HypothesisFailed("phi(x" + std::to_string(i + 1) + ".x" + std::to_string(j + 1) + ") = " + img.str() +
                               " is nonzero");
    }
  LiftData l = LiftData::trivial(d);
  l.phi2 = d.phi;
  l.b_product = b_lr.product();
  return lift_product(d, l);
}

/// Lift data for an extension of abelian b by a, given e in b with phi(e)
/// invertible: phi1 = 0, phi2 = phi, trivial products and
/// w(x, y) = phi(e)^{-1} phi(x) Omega(e, y).
inline LiftData invertible_generator_data(const ExtensionData& d, const Vector& e) {
  d.check_shapes();
  if (!d.b.is_abelian()) throw NotAbelian("the quotient algebra b is not abelian");
  if (e.size() != d.b_dim()) throw DimensionMismatch("generator has wrong length");
  Matrix pe = d.action(e);
  if (determinant(pe).is_zero()) throw NotInvertible("phi(e) is singular: " + pe.str());
  Matrix inv = inverse(pe);
  const std::size_t m = d.b_dim();
  LiftData l = LiftData::trivial(d);
  l.phi2 = d.phi;
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) l.omega[x * m + y] = inv * (d.phi[x] * d.cocycle(e, unit_vector(m, y)));
  return l;
}

inline LRAlgebra invertible_generator_lift(const ExtensionData& d, const Vector& e) {
  return lift_product(d, invertible_generator_data(d, e));
}

}  // namespace lralg

#endif  // LRALG_EXTENSIONS_HPP

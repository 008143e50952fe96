#ifndef LRALG_TESTS_SUPPORT_HPP
#define LRALG_TESTS_SUPPORT_HPP

// Random data generators shared by the unit tests and the acceptance binary.

#include <lralg/lralg.hpp>

#include <random>

namespace lralg::testing {

class Rng {
 public:
  explicit Rng(unsigned seed) : g_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g_); }
  bool coin() { return uniform(0, 1) == 1; }

  /// p/q with |p| <= num, 1 <= q <= den.
  Rational rational(int num = 3, int den = 3) { return Rational(uniform(-num, num), uniform(1, den)); }
  Rational nonzero(int num = 3, int den = 3) {
    Rational r;
    while (r.is_zero()) r = rational(num, den);
    return r;
  }

  Vector vector(std::size_t n) {
    Vector v(n);
    for (auto& x : v) x = rational();
    return v;
  }

  Matrix matrix(std::size_t r, std::size_t c) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rational();
    return m;
  }

  Matrix invertible(std::size_t n) {
    while (true) {
      Matrix m = matrix(n, n);
      if (!determinant(m).is_zero()) return m;
    }
  }

  std::mt19937& engine() { return g_; }

 private:
  std::mt19937 g_;
};

/// Extension of an abelian b (dim m) by a (dim k) with commuting phi(x_i)
/// that are polynomials in one matrix, phi(x_1) invertible, and
/// Omega(x, y) = phi(x) f(y) - phi(y) f(x) for a random linear f.
inline ExtensionData random_abelian_extension(Rng& rng, std::size_t k, std::size_t m) {
  ExtensionData d;
  d.a_dim = k;
  d.b = LieAlgebra::abelian(m);
  Matrix M = rng.matrix(k, k);
  Matrix M2 = M * M;
  Matrix I = Matrix::identity(k);
  while (true) {
    d.phi.clear();
    for (std::size_t i = 0; i < m; ++i) d.phi.push_back(rng.rational() * I + rng.rational() * M + rng.rational() * M2);
    if (!determinant(d.phi[0]).is_zero()) break;
  }
  Matrix F = rng.matrix(k, m);
  d.omega.assign(m * m, Vector(k));
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) d.omega[x * m + y] = d.phi[x] * F.column(y) - d.phi[y] * F.column(x);
  return d;
}

/// Lift data with one entry of phi1, phi2 or w changed by a nonzero amount.
inline LiftData perturb(Rng& rng, LiftData l, std::size_t k, std::size_t m) {
  int which = rng.uniform(0, 2);
  Rational delta = rng.nonzero();
  if (which == 0 || which == 1) {
    auto& v = which == 0 ? l.phi1 : l.phi2;
    v[rng.uniform(0, int(m) - 1)](rng.uniform(0, int(k) - 1), rng.uniform(0, int(k) - 1)) += delta;
  } else {
    l.omega[rng.uniform(0, int(m * m) - 1)][rng.uniform(0, int(k) - 1)] += delta;
  }
  return l;
}

/// Variable values x^i_{j,k} of the product of a.
inline std::vector<Rational> assignment_of(const LRAlgebra& a) { return assignment_from_product(a.product()); }

}  // namespace lralg::testing

#endif  // LRALG_TESTS_SUPPORT_HPP

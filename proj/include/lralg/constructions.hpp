#ifndef LRALG_CONSTRUCTIONS_HPP
#define LRALG_CONSTRUCTIONS_HPP

#include <lralg/errors.hpp>
#include <lralg/lie_algebra.hpp>
#include <lralg/lr_algebra.hpp>

#include <map>
#include <tuple>
#include <stdexcept>
#include <utility>
#include <vector>

namespace lralg {

// ---------------------------------------------------------------------------
// Filiform algebras in an adapted basis
// ---------------------------------------------------------------------------

/// Coefficients c[i][k] (1-based, 3 <= i <= n-2, i+2 <= k <= n) of
///   [e_1, e_i] = e_{i+1},  [e_2, e_i] = sum_k c[i][k] e_k,  [e_i, e_j] = 0 (i, j >= 3).
/// Jacobi holds iff c[i+1][k] = c[i][k-1] whenever i+3 <= k, so the whole
/// table is determined by its row i = 3.
struct FiliformSpec {
  std::size_t n = 0;
  std::map<std::pair<int, int>, Rational> coeffs;

  /// Fills every entry from the free row c[3][5..n].
  static FiliformSpec from_free_row(std::size_t n, const std::vector<Rational>& row3) {
    if (n < 3) throw SpecViolation("filiform dimension must be at least 3");
    std::size_t expected = n >= 5 ? n - 4 : 0;
    if (row3.size() != expected)
      throw SpecViolation("filiform of dimension " + std::to_string(n) + " has " + std::to_string(expected) +
                          " free coefficients, got " + std::to_string(row3.size()));
    FiliformSpec s;
    s.n = n;
    for (int i = 3; i <= int(n) - 2; ++i)
      for (int k = i + 2; k <= int(n); ++k) {
        const Rational& v = row3[k - i + 3 - 5];
        if (!v.is_zero()) s.coeffs[{i, k}] = v;
      }
    return s;
  }

  Rational c(int i, int k) const {
    auto it = coeffs.find({i, k});
    return it == coeffs.end() ? Rational(0) : it->second;
  }

  void validate() const {
    if (n < 3) throw SpecViolation("filiform dimension must be at least 3");
    for (const auto& [ik, v] : coeffs) {
      auto [i, k] = ik;
      if (i < 3 || i > int(n) - 2 || k < i + 2 || k > int(n))
        throw SpecViolation("coefficient c[" + std::to_string(i) + "][" + std::to_string(k) + "] out of range");
    }
    for (int i = 3; i + 1 <= int(n) - 2; ++i)
      for (int k = i + 3; k <= int(n); ++k)
        if (c(i + 1, k) != c(i, k - 1))
          throw SpecViolation("c[" + std::to_string(i + 1) + "][" + std::to_string(k) + "] = " + c(i + 1, k).str() +
                              " must equal c[" + std::to_string(i) + "][" + std::to_string(k - 1) + "] = " +
                              c(i, k - 1).str());
  }
};

inline LieAlgebra filiform_lie(const FiliformSpec& spec) {
  spec.validate();
  const std::size_t n = spec.n;
  std::vector<TableEntry> t;
  for (std::size_t i = 2; i + 1 <= n; ++i) t.push_back({1, int(i), unit_vector(n, i)});
  for (int i = 3; i <= int(n) - 2; ++i) {
    Vector v(n);
    for (int k = i + 2; k <= int(n); ++k) v[k - 1] = spec.c(i, k);
    t.push_back({2, i, v});
  }
  try {
    return lie_from_table(n, t);
  } catch (const JacobiViolation& e) {
    throw std::logic_error(std::string("filiform bracket failed Jacobi despite a valid spec: ") + e.what());
  }
}

/// L(e_1) = 0, L(e_i) = ad(e_1)^{i-2} ad(e_2) for i >= 2.
inline LRAlgebra filiform_lr(const FiliformSpec& spec) {
  LieAlgebra g = filiform_lie(spec);
  const std::size_t n = g.dim();
  Matrix ad1 = ad_basis(g, 0);
  std::vector<Matrix> left{Matrix(n, n)};
  Matrix cur = ad_basis(g, 1);
  for (std::size_t i = 1; i < n; ++i) {
    left.push_back(cur);
    cur = ad1 * cur;
  }
  return lr_from_left_mults(g, left);
}

// ---------------------------------------------------------------------------
// 2-step nilpotent algebras
// ---------------------------------------------------------------------------

/// x.y = 1/2 [x, y]; requires [g, [g, g]] = 0.
inline LRAlgebra halved_adjoint_lr(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector b = g.bracket(i, j);
      if (is_zero(b)) continue;
      for (std::size_t a = 0; a < n; ++a) {
        Vector w = g.structure().apply_left(a, b);
        if (!is_zero(w))
          throw NotTwoStepNilpotent("[e" + std::to_string(a + 1) + ", [e" + std::to_string(i + 1) + ", e" +
                                    std::to_string(j + 1) + "]] = " + format_vector(w));
      }
    }
  std::vector<Rational> d = g.structure().dense();
  for (auto& x : d) x *= Rational(1, 2);
  return LRAlgebra::create(g, BilinearTable(n, std::move(d)));
}

/// Free 2-step nilpotent Lie algebra on m generators: x_1..x_m, then
/// y_{i,j} = [x_i, x_j] (i < j) in lexicographic order.
inline LieAlgebra free2_lie(std::size_t m) {
  if (m < 1) throw SpecViolation("need at least one generator");
  const std::size_t n = m + m * (m - 1) / 2;
  std::vector<TableEntry> t;
  std::size_t y = m;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) t.push_back({int(i + 1), int(j + 1), unit_vector(n, y++)});
  return lie_from_table(n, t);
}

// ---------------------------------------------------------------------------
// Free 3-step nilpotent algebras
// ---------------------------------------------------------------------------

/// Basis bookkeeping for the free 3-step nilpotent Lie algebra on m
/// generators. Order: x_1..x_m; y_{i,j} (i < j) lexicographically; then the
/// Hall elements z_{i,j,k} = [x_i, y_{j,k}] (j < k, i >= j) grouped by
/// (j, k) lexicographically and by i inside a group. For m = 3 this is the
/// numbering x_1..x_14 of the classical worked example.
class Free3Basis {
 public:
  explicit Free3Basis(std::size_t m) : m_(m) {
    if (m < 2) throw SpecViolation("free 3-step algebra needs at least 2 generators");
    std::size_t idx = m;
    for (std::size_t i = 1; i <= m; ++i)
      for (std::size_t j = i + 1; j <= m; ++j) y_[{i, j}] = idx++;
    for (std::size_t j = 1; j <= m; ++j)
      for (std::size_t k = j + 1; k <= m; ++k)
        for (std::size_t i = j; i <= m; ++i) z_[{i, j, k}] = idx++;
    dim_ = idx;
  }

  std::size_t generators() const { return m_; }
  std::size_t dim() const { return dim_; }
  static std::size_t expected_dim(std::size_t m) { return m + m * (m - 1) / 2 + (m * m * m - m) / 3; }

  std::size_t x(std::size_t i) const { return i - 1; }
  std::size_t y(std::size_t i, std::size_t j) const { return y_.at({i, j}); }

  /// [x_i, y_{j,k}] (j < k) as a vector; non-Hall triples (i < j) expand as
  /// z_{j,i,k} - z_{k,i,j}.
  Vector z(std::size_t i, std::size_t j, std::size_t k) const {
    Vector v(dim_);
    if (i >= j) {
      v[z_.at({i, j, k})] = 1;
    } else {
      v[z_.at({j, i, k})] += 1;
      v[z_.at({k, i, j})] -= 1;
    }
    return v;
  }

 private:
  using Triple = std::tuple<std::size_t, std::size_t, std::size_t>;
  std::size_t m_;
  std::size_t dim_ = 0;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> y_;
  std::map<Triple, std::size_t> z_;
};

inline LieAlgebra free3_lie(std::size_t m) {
  Free3Basis b(m);
  const std::size_t n = b.dim();
  std::vector<TableEntry> t;
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = i + 1; j <= m; ++j) t.push_back({int(b.x(i) + 1), int(b.x(j) + 1), unit_vector(n, b.y(i, j))});
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j)
      for (std::size_t k = j + 1; k <= m; ++k) t.push_back({int(b.x(i) + 1), int(b.y(j, k) + 1), b.z(i, j, k)});
  return lie_from_table(n, t);
}

/// The LR-product
///   x_j . x_i = -y_{i,j}                        (i < j)
///   x_i . y_{j,k} = z_{i,j,k}  (k <= i),  z_{k,j,i}  (j < i < k)
///   y_{j,k} . x_i = z_{k,j,i} - z_{i,j,k}  (j < i < k),  -z_{i,j,k}  (i <= j)
/// with every other product zero.
inline LRAlgebra free3_lr(std::size_t m) {
  Free3Basis b(m);
  LieAlgebra g = free3_lie(m);
  const std::size_t n = b.dim();
  std::vector<TableEntry> t;
  auto idx = [](std::size_t v) { return int(v + 1); };
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = i + 1; j <= m; ++j) t.push_back({idx(b.x(j)), idx(b.x(i)), -unit_vector(n, b.y(i, j))});
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j)
      for (std::size_t k = j + 1; k <= m; ++k) {
        if (k <= i)
          t.push_back({idx(b.x(i)), idx(b.y(j, k)), b.z(i, j, k)});
        else if (j < i)
          t.push_back({idx(b.x(i)), idx(b.y(j, k)), b.z(k, j, i)});
        if (j < i && i < k)
          t.push_back({idx(b.y(j, k)), idx(b.x(i)), b.z(k, j, i) - b.z(i, j, k)});
        else if (i <= j)
          t.push_back({idx(b.y(j, k)), idx(b.x(i)), -b.z(i, j, k)});
      }
  return lr_from_table(g, t);
}

// ---------------------------------------------------------------------------
// Free 4-step nilpotent algebra on two generators
// ---------------------------------------------------------------------------

/// x3 = [x1,x2], x4 = [x1,x3], x5 = [x2,x3], x6 = [x1,x4],
/// x7 = [x2,x4] = [x1,x5], x8 = [x2,x5].
inline LieAlgebra free4_two_gen_lie() {
  const std::size_t n = 8;
  auto e = [](std::size_t k) { return unit_vector(8, k - 1); };
  return lie_from_table(n, {{1, 2, e(3)}, {1, 3, e(4)}, {2, 3, e(5)}, {1, 4, e(6)}, {2, 4, e(7)}, {1, 5, e(7)},
                            {2, 5, e(8)}});
}

/// L(x1) = 0, L(x2) = ad(x2), and for an iterated bracket x_i the matching
/// composition of ad(x1), ad(x2) applied to ad(x2).
inline LRAlgebra free4_two_gen_lr() {
  LieAlgebra g = free4_two_gen_lie();
  Matrix a1 = ad_basis(g, 0), a2 = ad_basis(g, 1);
  std::vector<Matrix> left{
      Matrix(8, 8),
      a2,
      a1 * a2,
      a1 * a1 * a2,
      a2 * a1 * a2,
      a1 * a1 * a1 * a2,
      a2 * a1 * a1 * a2,
      a2 * a2 * a1 * a2,
  };
  return lr_from_left_mults(g, left);
}

}  // namespace lralg

#endif  // LRALG_CONSTRUCTIONS_HPP

#ifndef LRALG_BILINEAR_HPP
#define LRALG_BILINEAR_HPP

#include <lralg/linalg.hpp>

#include <cstdint>
#include <utility>
#include <vector>

namespace lralg {

/// One nonzero coordinate of a sparse vector.
struct SparseEntry {
  std::uint32_t index;
  Rational value;
  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};
using SparseVector = std::vector<SparseEntry>;

/// Structure constants T(e_i, e_j) = sum_k t[i][j][k] e_k of a bilinear map
/// on an n-dimensional space. Indices are 0-based. Immutable once built; a
/// sparse copy of every T(e_i, e_j) is kept for fast evaluation.
class BilinearTable {
 public:
  BilinearTable() = default;
  explicit BilinearTable(std::size_t n) : n_(n), dense_(n * n * n), sparse_(n * n) {}
  BilinearTable(std::size_t n, std::vector<Rational> dense) : n_(n), dense_(std::move(dense)) {
    if (dense_.size() != n * n * n) throw DimensionMismatch("structure tensor must have n^3 entries");
    rebuild();
  }

  /// Table whose T(e_i, .) is given by the columns of left[i].
  static BilinearTable from_left_matrices(const std::vector<Matrix>& left) {
    const std::size_t n = left.size();
    std::vector<Rational> d(n * n * n);
    for (std::size_t i = 0; i < n; ++i) {
      if (left[i].rows() != n || left[i].cols() != n) throw DimensionMismatch("operator has wrong shape");
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) d[(i * n + j) * n + k] = left[i](k, j);
    }
    return BilinearTable(n, std::move(d));
  }

  std::size_t dim() const { return n_; }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const { return dense_[(i * n_ + j) * n_ + k]; }
  const std::vector<Rational>& dense() const { return dense_; }

  const SparseVector& terms(std::size_t i, std::size_t j) const { return sparse_[i * n_ + j]; }

  Vector basis_value(std::size_t i, std::size_t j) const {
    Vector v(n_);
    for (const auto& t : terms(i, j)) v[t.index] = t.value;
    return v;
  }

  /// T(u, v) for coordinate vectors u, v.
  Vector apply(const Vector& u, const Vector& v) const {
    check(u);
    check(v);
    Vector out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (u[i].is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (v[j].is_zero()) continue;
        const auto& ts = terms(i, j);
        if (ts.empty()) continue;
        Rational s = u[i] * v[j];
        for (const auto& t : ts) out[t.index].add_product(s, t.value);
      }
    }
    return out;
  }

  /// T(e_i, v)
  Vector apply_left(std::size_t i, const Vector& v) const {
    check(v);
    Vector out(n_);
    for (std::size_t j = 0; j < n_; ++j) {
      if (v[j].is_zero()) continue;
      for (const auto& t : terms(i, j)) out[t.index].add_product(v[j], t.value);
    }
    return out;
  }

  /// T(u, e_j)
  Vector apply_right(const Vector& u, std::size_t j) const {
    check(u);
    Vector out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (u[i].is_zero()) continue;
      for (const auto& t : terms(i, j)) out[t.index].add_product(u[i], t.value);
    }
    return out;
  }

  /// Matrix of y -> T(x, y).
  Matrix left_matrix(const Vector& x) const {
    check(x);
    Matrix m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (x[i].is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j)
        for (const auto& t : terms(i, j)) m(t.index, j).add_product(x[i], t.value);
    }
    return m;
  }

  /// Matrix of y -> T(y, x).
  Matrix right_matrix(const Vector& x) const {
    check(x);
    Matrix m(n_, n_);
    for (std::size_t j = 0; j < n_; ++j) {
      if (x[j].is_zero()) continue;
      for (std::size_t i = 0; i < n_; ++i)
        for (const auto& t : terms(i, j)) m(t.index, i).add_product(x[j], t.value);
    }
    return m;
  }

  Matrix left_basis_matrix(std::size_t i) const { return left_matrix(unit_vector(n_, i)); }
  Matrix right_basis_matrix(std::size_t i) const { return right_matrix(unit_vector(n_, i)); }

  bool is_zero() const {
    for (const auto& s : sparse_)
      if (!s.empty()) return false;
    return true;
  }

  friend bool operator==(const BilinearTable& a, const BilinearTable& b) {
    return a.n_ == b.n_ && a.dense_ == b.dense_;
  }

 private:
  void check(const Vector& v) const {
    if (v.size() != n_) throw DimensionMismatch("vector length does not match algebra dimension");
  }

  void rebuild() {
    sparse_.assign(n_ * n_, {});
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k) {
          const Rational& v = dense_[(i * n_ + j) * n_ + k];
          if (!v.is_zero()) sparse_[i * n_ + j].push_back({static_cast<std::uint32_t>(k), v});
        }
  }

  std::size_t n_ = 0;
  std::vector<Rational> dense_;
  std::vector<SparseVector> sparse_;
};

/// Entry of a bracket or product table: (e_i, e_j) -> value, 1-based indices.
struct TableEntry {
  int i;
  int j;
  Vector value;
};

}  // namespace lralg

#endif  // LRALG_BILINEAR_HPP

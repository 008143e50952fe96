#ifndef LRALG_LINALG_HPP
#define LRALG_LINALG_HPP

#include <lralg/errors.hpp>
#include <lralg/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace lralg {

using Vector = std::vector<Rational>;

// ---------------------------------------------------------------------------
// Vector helpers
// ---------------------------------------------------------------------------

inline Vector zero_vector(std::size_t n) { return Vector(n); }

inline Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

inline bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r.is_zero(); });
}

inline void check_same_length(const Vector& a, const Vector& b) {
  if (a.size() != b.size())
    throw DimensionMismatch("vector lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
}

inline Vector operator+(Vector a, const Vector& b) {
  check_same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Vector operator-(Vector a, const Vector& b) {
  check_same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline Vector operator-(Vector a) {
  for (auto& x : a) x = -x;
  return a;
}

inline Vector operator*(const Rational& s, Vector v) {
  for (auto& x : v) x *= s;
  return v;
}

/// acc += s * v
inline void axpy(Vector& acc, const Rational& s, const Vector& v) {
  check_same_length(acc, v);
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) acc[i].add_product(s, v[i]);
}

inline Rational dot(const Vector& a, const Vector& b) {
  check_same_length(a, b);
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s.add_product(a[i], b[i]);
  return s;
}

/// Renders a coordinate vector as a linear combination of named basis
/// vectors, e.g. "e1 - 1/2*e3". The zero vector prints as "0".
inline std::string format_vector(const Vector& v, const std::string& prefix = "e") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Rational& c = v[i];
    if (c.is_zero()) continue;
    Rational mag = abs(c);
    std::string term = mag.is_one() ? "" : mag.str() + "*";
    term += prefix + std::to_string(i + 1);
    if (out.empty())
      out = (c.sign() < 0 ? "-" : "") + term;
    else
      out += (c.sign() < 0 ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Matrix
// ---------------------------------------------------------------------------

/// Dense row-major matrix of rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
      : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows * cols) throw DimensionMismatch("matrix entry count does not match shape");
  }
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
      a_.insert(a_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw DimensionMismatch("row length mismatch");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].size() != rows) throw DimensionMismatch("column length mismatch");
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const std::vector<Rational>& entries() const { return a_; }

  Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  Vector row(std::size_t r) const { return Vector(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_); }
  Vector column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }
  void set_column(std::size_t c, const Vector& v) {
    if (v.size() != rows_) throw DimensionMismatch("column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return x.is_zero(); });
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
  }
  Matrix& operator*=(const Rational& s) {
    for (auto& x : a_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) { return a *= Rational(-1); }
  friend Matrix operator*(const Rational& s, Matrix m) { return m *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Rational& bkj = b(k, j);
          if (!bkj.is_zero()) c(i, j).add_product(aik, bkj);
        }
      }
    return c;
  }

  friend Vector operator*(const Matrix& m, const Vector& v) {
    if (m.cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
    Vector out(m.rows_);
    for (std::size_t c = 0; c < m.cols_; ++c) {
      if (v[c].is_zero()) continue;
      for (std::size_t r = 0; r < m.rows_; ++r)
        if (!m(r, c).is_zero()) out[r].add_product(m(r, c), v[c]);
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  std::string str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
      os << (r ? "; " : "") << "[";
      for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
      os << "]";
    }
    os << "]";
    return os.str();
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

inline Matrix power(const Matrix& m, unsigned e) {
  if (!m.is_square()) throw DimensionMismatch("power of a non-square matrix");
  Matrix r = Matrix::identity(m.rows());
  for (unsigned i = 0; i < e; ++i) r = r * m;
  return r;
}

// ---------------------------------------------------------------------------
// Row reduction
// ---------------------------------------------------------------------------

struct RowEchelon {
  Matrix reduced;                   ///< RREF, zero rows at the bottom
  std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
};

inline RowEchelon row_echelon(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t p = lead_row;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != lead_row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(lead_row, j));
    Rational inv = m(lead_row, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!m(lead_row, j).is_zero()) m(lead_row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, c).is_zero()) continue;
      Rational f = m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(lead_row, j).is_zero()) m(r, j).sub_product(f, m(lead_row, j));
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return {std::move(m), std::move(pivots)};
}

inline Matrix rref(const Matrix& m) { return row_echelon(m).reduced; }

inline std::size_t rank(const Matrix& m) { return row_echelon(m).pivots.size(); }

inline Rational determinant(Matrix m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    Rational inv = m(c, c).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      Rational f = m(r, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(r, j).sub_product(f, m(c, j));
    }
  }
  return det;
}

inline Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  RowEchelon e = row_echelon(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw NotInvertible("matrix is singular: " + m.str());
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

/// True iff m^n = 0 for the n×n matrix m.
inline bool matrix_is_nilpotent(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("nilpotency test needs a square matrix");
  Matrix p = m;
  for (std::size_t k = 1; k < m.rows(); ++k) {
    if (p.is_zero()) return true;
    p = p * m;
  }
  return p.is_zero();
}

// ---------------------------------------------------------------------------
// Subspace
// ---------------------------------------------------------------------------

/// Subspace of Q^n stored by its canonical basis: the nonzero rows of the
/// reduced row echelon form of any spanning set. Equal subspaces therefore
/// have identical basis matrices.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  static Subspace zero(std::size_t n) { return Subspace(n); }
  static Subspace full(std::size_t n) { return from_matrix(Matrix::identity(n)); }

  static Subspace span(std::size_t n, const std::vector<Vector>& vectors) {
    for (const auto& v : vectors)
      if (v.size() != n) throw DimensionMismatch("spanning vector has wrong length");
    return from_matrix(Matrix::from_rows(vectors, n));
  }

  static Subspace from_matrix(const Matrix& rows) {
    RowEchelon e = row_echelon(rows);
    Subspace s(rows.cols());
    s.pivots_ = e.pivots;
    s.basis_ = Matrix(e.pivots.size(), rows.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      for (std::size_t c = 0; c < rows.cols(); ++c) s.basis_(r, c) = e.reduced(r, c);
    return s;
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  std::vector<Vector> basis_vectors() const {
    std::vector<Vector> out;
    for (std::size_t r = 0; r < dim(); ++r) out.push_back(basis_.row(r));
    return out;
  }

  /// Remainder of v after clearing the pivot coordinates; zero iff v lies in the subspace.
  Vector reduce(Vector v) const {
    if (v.size() != ambient_) throw DimensionMismatch("vector length does not match ambient dimension");
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      Rational f = v[pivots_[r]];
      if (f.is_zero()) continue;
      for (std::size_t c = pivots_[r]; c < ambient_; ++c)
        if (!basis_(r, c).is_zero()) v[c].sub_product(f, basis_(r, c));
    }
    return v;
  }

  bool contains(const Vector& v) const { return lralg::is_zero(reduce(v)); }

  bool contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionMismatch("subspaces live in different ambient spaces");
    for (std::size_t r = 0; r < other.dim(); ++r)
      if (!contains(other.basis_.row(r))) return false;
    return true;
  }

  /// Rows w with w·v = 0 for every v in the subspace; membership of a vector x
  /// is equivalent to w·x = 0 for all returned w.
  std::vector<Vector> annihilator() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

  std::string str() const {
    std::string s = "span{";
    for (std::size_t r = 0; r < dim(); ++r) s += (r ? ", " : "") + format_vector(basis_.row(r));
    return s + "}";
  }

 private:
  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Canonical basis of {v : m·v = 0}.
inline Subspace nullspace(const Matrix& m) {
  RowEchelon e = row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), basis);
}

inline std::vector<Vector> Subspace::annihilator() const { return nullspace(basis_).basis_vectors(); }

inline Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspaces live in different ambient spaces");
  auto rows = a.basis_vectors();
  auto more = b.basis_vectors();
  rows.insert(rows.end(), more.begin(), more.end());
  return Subspace::span(a.ambient_dim(), rows);
}

inline bool subspace_contains(const Subspace& a, const Vector& v) { return a.contains(v); }

inline Subspace intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("subspaces live in different ambient spaces");
  std::vector<Vector> conditions = a.annihilator();
  auto more = b.annihilator();
  conditions.insert(conditions.end(), more.begin(), more.end());
  if (conditions.empty()) return Subspace::full(a.ambient_dim());
  return nullspace(Matrix::from_rows(conditions, a.ambient_dim()));
}

}  // namespace lralg

#endif  // LRALG_LINALG_HPP

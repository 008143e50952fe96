#include "support.hpp"

#include <gtest/gtest.h>

using namespace lralg;
using lralg::testing::Rng;

TEST(Rational, ParseAndPrintRoundTrip) {
  for (const char* s : {"0", "7", "-7", "1/2", "-3/4", "22/7"}) EXPECT_EQ(Rational::parse(s).str(), s);
  EXPECT_EQ(Rational::parse("2/4").str(), "1/2");
  EXPECT_EQ(Rational::parse("+6/3").str(), "2");
  EXPECT_EQ(Rational::parse("-0/5").str(), "0");
}

TEST(Rational, RejectsMalformedText) {
  for (const char* s : {"1/0", "", "abc", "1/-2", "1.5", "--1", "1/", "/2"})
    EXPECT_THROW(Rational::parse(s), std::invalid_argument) << s;
}

TEST(Rational, FieldAxiomsOnRandomValues) {
  Rng rng(1);
  for (int t = 0; t < 200; ++t) {
    Rational a = rng.rational(9, 9), b = rng.rational(9, 9), c = rng.rational(9, 9);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ(a - a, Rational(0));
    if (!b.is_zero()) { EXPECT_EQ(a / b * b, a); }
  }
}

TEST(Matrix, InverseTimesMatrixIsIdentity) {
  Rng rng(2);
  for (std::size_t n = 1; n <= 5; ++n) {
    Matrix a = rng.invertible(n);
    EXPECT_EQ(a * inverse(a), Matrix::identity(n));
    EXPECT_EQ(inverse(a) * a, Matrix::identity(n));
  }
}

TEST(Matrix, SingularInverseThrows) {
  Matrix a(2, 2);
  a(0, 0) = 1;
  a(0, 1) = 2;
  a(1, 0) = 2;
  a(1, 1) = 4;
  EXPECT_THROW(inverse(a), NotInvertible);
}

// Leibniz expansion as an independent oracle for the elimination-based determinant.
static Rational leibniz(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Rational total;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Rational term(inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

TEST(Matrix, DeterminantMatchesLeibnizAndIsMultiplicative) {
  Rng rng(3);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = std::size_t(rng.uniform(1, 5));
    Matrix a = rng.matrix(n, n), b = rng.matrix(n, n);
    EXPECT_EQ(determinant(a), leibniz(a));
    EXPECT_EQ(determinant(a * b), determinant(a) * determinant(b));
  }
}

TEST(Matrix, RankNullityAndNullspaceVectors) {
  Rng rng(4);
  for (int t = 0; t < 40; ++t) {
    std::size_t r = std::size_t(rng.uniform(1, 5)), c = std::size_t(rng.uniform(1, 6));
    // low-rank product to make kernels nontrivial
    std::size_t k = std::size_t(rng.uniform(1, 3));
    Matrix a = rng.matrix(r, k) * rng.matrix(k, c);
    Subspace ker = nullspace(a);
    EXPECT_EQ(rank(a) + ker.dim(), c);
    for (const auto& v : ker.basis_vectors()) EXPECT_TRUE(is_zero(a * v));
    EXPECT_EQ(rref(rref(a)), rref(a));
    EXPECT_EQ(rank(a), rank(a.transpose()));
  }
}

TEST(Subspace, SumAndIntersectionDimensions) {
  Rng rng(5);
  for (int t = 0; t < 30; ++t) {
    std::size_t n = 5;
    std::vector<Vector> us, ws;
    for (int i = 0; i < rng.uniform(0, 4); ++i) us.push_back(rng.vector(n));
    for (int i = 0; i < rng.uniform(0, 4); ++i) ws.push_back(rng.vector(n));
    Subspace u = Subspace::span(n, us), w = Subspace::span(n, ws);
    Subspace s = subspace_sum(u, w), x = intersection(u, w);
    EXPECT_EQ(s.dim() + x.dim(), u.dim() + w.dim());
    EXPECT_TRUE(s.contains(u));
    EXPECT_TRUE(u.contains(x));
    EXPECT_TRUE(w.contains(x));
  }
}

TEST(Subspace, ReduceGivesCanonicalRepresentative) {
  Subspace s = Subspace::span(3, {Vector{1, 1, 0}});
  EXPECT_TRUE(s.contains(Vector{2, 2, 0}));
  EXPECT_FALSE(s.contains(Vector{1, 0, 0}));
  EXPECT_EQ(s.reduce(Vector{1, 0, 0}), s.reduce(Vector{0, -1, 0}));
}

TEST(LinearCombination, FormatsSignsAndCoefficients) {
  EXPECT_EQ(format_vector(Vector{1, 0, Rational(-1, 2)}), "e1 - 1/2*e3");
  EXPECT_EQ(format_vector(Vector{0, 0}), "0");
  EXPECT_EQ(format_vector(Vector{-1, 2}, "x"), "-x1 + 2*x2");
}

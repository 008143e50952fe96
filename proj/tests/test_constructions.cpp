#include "support.hpp"

#include <gtest/gtest.h>

using namespace lralg;
using lralg::testing::Rng;

namespace {

FiliformSpec random_filiform(Rng& rng, std::size_t n) {
  std::vector<Rational> row(n >= 5 ? n - 4 : 0);
  for (auto& c : row) c = rng.rational();
  return FiliformSpec::from_free_row(n, row);
}

}  // namespace

TEST(Filiform, RightMultiplicationsAreIteratedAdjoints) {
  Rng rng(31);
  for (std::size_t n = 4; n <= 9; ++n)
    for (int t = 0; t < 10; ++t) {
      FiliformSpec spec = random_filiform(rng, n);
      LRAlgebra a = filiform_lr(spec);
      ASSERT_TRUE(verify_axioms(a).ok());
      EXPECT_TRUE(a.complete());
      EXPECT_EQ(a.lie(), filiform_lie(spec));
      Matrix ad1 = ad_basis(a.lie(), 0), ad2 = ad_basis(a.lie(), 1);
      EXPECT_EQ(a.right_basis(0), -Rational(1) * ad1);
      EXPECT_TRUE(a.right_basis(1).is_zero());
      Matrix pw = ad1;
      for (std::size_t i = 3; i <= n; ++i) {
        EXPECT_EQ(a.right_basis(i - 1), ad2 * pw) << "n=" << n << " i=" << i;
        pw = pw * ad1;
      }
    }
}

TEST(Filiform, JacobiConstraintOnCoefficients) {
  FiliformSpec s;
  s.n = 7;
  s.coeffs[{3, 6}] = 1;  // forces c[4][7] = 1
  EXPECT_THROW(s.validate(), SpecViolation);
  s.coeffs[{4, 7}] = 1;
  EXPECT_NO_THROW(filiform_lie(s));
  EXPECT_THROW(FiliformSpec::from_free_row(7, {1}), SpecViolation);
}

TEST(Filiform, IsFiliform) {
  Rng rng(32);
  for (std::size_t n = 4; n <= 9; ++n) {
    LieAlgebra g = filiform_lie(random_filiform(rng, n));
    auto dims = lower_central_series(g).dims();
    ASSERT_EQ(dims.size(), n);  // n, n-2, n-3, ..., 1, 0
    EXPECT_EQ(dims[1], n - 2);
    EXPECT_EQ(dims.back(), 0u);
  }
}

TEST(HalvedAdjoint, TwoStepNilpotentAlgebras) {
  for (const LieAlgebra& g : {n3_lie(), n3r_lie(), free2_lie(2), free2_lie(3), free2_lie(4)}) {
    LRAlgebra a = halved_adjoint_lr(g);
    EXPECT_TRUE(verify_axioms(a).ok());
    EXPECT_TRUE(a.complete());
    for (std::size_t i = 0; i < g.dim(); ++i)
      for (std::size_t j = 0; j < g.dim(); ++j) EXPECT_EQ(a.basis_product(i, j), -Rational(1) * a.basis_product(j, i));
  }
}

TEST(HalvedAdjoint, ReproducesCatalogA3) {
  EXPECT_EQ(halved_adjoint_lr(n3_lie()).product(), catalog_get("n3/A3").product());
}

TEST(HalvedAdjoint, RejectsThreeStepAlgebra) { EXPECT_THROW(halved_adjoint_lr(n4_lie()), NotTwoStepNilpotent); }

TEST(Free2, Dimensions) {
  for (std::size_t m = 1; m <= 5; ++m) {
    LieAlgebra g = free2_lie(m);
    EXPECT_EQ(g.dim(), m + m * (m - 1) / 2);
    if (m >= 2) { EXPECT_EQ(lower_central_series(g).dims(), (std::vector<std::size_t>{g.dim(), m * (m - 1) / 2, 0})); }
  }
}

TEST(Free3, DimensionFormula) {
  const std::size_t expected[] = {5, 14, 30, 55};
  for (std::size_t m = 2; m <= 5; ++m) {
    LieAlgebra g = free3_lie(m);
    EXPECT_EQ(g.dim(), expected[m - 2]);
    EXPECT_EQ(g.dim(), Free3Basis::expected_dim(m));
    auto dims = lower_central_series(g).dims();
    ASSERT_EQ(dims.size(), 4u);
    EXPECT_EQ(dims[3], 0u);
    EXPECT_EQ(dims[1] - dims[2], m * (m - 1) / 2);
  }
}

TEST(Free3, LRStructureIsComplete) {
  for (std::size_t m = 2; m <= 4; ++m) {
    LRAlgebra a = free3_lr(m);
    EXPECT_TRUE(verify_axioms(a).ok());
    EXPECT_TRUE(a.complete());
    EXPECT_TRUE(lemma_suite(a).ok());
  }
}

TEST(Free3, ThreeGeneratorTables) {
  auto e = [](std::size_t k) { return unit_vector(14, k - 1); };
  LieAlgebra expected_lie = lie_from_table(
      14, {{1, 2, e(4)}, {1, 3, e(5)}, {2, 3, e(6)}, {1, 4, e(7)}, {2, 4, e(8)}, {3, 4, e(9)}, {1, 5, e(10)},
           {2, 5, e(11)}, {3, 5, e(12)}, {1, 6, e(11) - e(9)}, {2, 6, e(13)}, {3, 6, e(14)}});
  LRAlgebra a = free3_lr(3);
  EXPECT_EQ(a.lie(), expected_lie);
  LRAlgebra expected = lr_from_table(expected_lie, {{2, 1, -e(4)},
                                                    {2, 4, e(8)},
                                                    {2, 5, e(9)},
                                                    {3, 1, -e(5)},
                                                    {3, 2, -e(6)},
                                                    {3, 4, e(9)},
                                                    {3, 5, e(12)},
                                                    {3, 6, e(14)},
                                                    {4, 1, -e(7)},
                                                    {5, 1, -e(10)},
                                                    {5, 2, e(9) - e(11)},
                                                    {6, 1, e(9) - e(11)},
                                                    {6, 2, -e(13)}});
  EXPECT_EQ(a.product(), expected.product());
}

TEST(Free4, TwoGeneratorStructure) {
  LRAlgebra a = free4_two_gen_lr();
  EXPECT_EQ(a.dim(), 8u);
  EXPECT_EQ(classify_solvability(a.lie()).nilpotency_class, std::optional<std::size_t>(4));
  EXPECT_TRUE(verify_axioms(a).ok());
  EXPECT_TRUE(a.complete());
  for (std::size_t i = 5; i < 8; ++i) EXPECT_TRUE(a.left_basis(i).is_zero());
  Matrix a1 = ad_basis(a.lie(), 0), a2 = ad_basis(a.lie(), 1);
  EXPECT_EQ(a2 * a1 * a1 * a2, a1 * a2 * a1 * a2);
  EXPECT_TRUE(a.left_basis(0).is_zero());
  EXPECT_EQ(a.left_basis(1), a2);
}

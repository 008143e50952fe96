#include "support.hpp"

#include <gtest/gtest.h>

using namespace lralg;
using lralg::testing::Rng;

using Dims = std::vector<std::size_t>;

TEST(Series, R2) {
  LieAlgebra g = r2_lie();
  EXPECT_EQ(derived_series(g).dims(), (Dims{2, 1, 0}));
  EXPECT_EQ(lower_central_series(g).dims(), (Dims{2, 1}));
  EXPECT_FALSE(classify_solvability(g).nilpotency_class.has_value());
  EXPECT_EQ(classify_solvability(g).solvable_class, std::optional<std::size_t>(2));
}

TEST(Series, Heisenberg) {
  LieAlgebra g = n3_lie();
  EXPECT_EQ(lower_central_series(g).dims(), (Dims{3, 1, 0}));
  EXPECT_EQ(upper_central_series(g).dims(), (Dims{1, 3}));
  EXPECT_EQ(derived_series(g).dims(), (Dims{3, 1, 0}));
}

TEST(Series, N4) {
  LieAlgebra g = n4_lie();
  EXPECT_EQ(lower_central_series(g).dims(), (Dims{4, 2, 1, 0}));
  EXPECT_EQ(upper_central_series(g).dims(), (Dims{1, 2, 4}));
  EXPECT_EQ(classify_solvability(g).nilpotency_class, std::optional<std::size_t>(3));
}

TEST(Series, ThirteenDimensionalCounterexample) {
  LieAlgebra g = counterexample_g13();
  EXPECT_EQ(g.dim(), 13u);
  EXPECT_EQ(lower_central_series(g).dims(), (Dims{13, 9, 5, 0}));
  EXPECT_EQ(derived_series(g).dims(), (Dims{13, 9, 0}));
  EXPECT_EQ(upper_central_series(g).dims(), (Dims{5, 9, 13}));
  EXPECT_TRUE(classify_solvability(g).is_two_step_solvable);
  EXPECT_EQ(classify_solvability(g).nilpotency_class, std::optional<std::size_t>(3));
}

TEST(Series, TermsAreIdeals) {
  for (const LieAlgebra& g : {n4_lie(), counterexample_g13(), n3r_lie(), r2_lie()}) {
    for (const auto& s : lower_central_series(g).terms) EXPECT_TRUE(is_lie_ideal(g, s));
    for (const auto& s : derived_series(g).terms) EXPECT_TRUE(is_lie_ideal(g, s));
    for (const auto& s : upper_central_series(g).terms) EXPECT_TRUE(is_lie_ideal(g, s));
  }
}

TEST(LieAlgebra, JacobiViolationIsReported) {
  // [e1,[e2,e3]] + [e2,[e3,e1]] + [e3,[e1,e2]] = -e1
  Vector e1{1, 0, 0}, e2{0, 1, 0};
  EXPECT_THROW(lie_from_table(3, {{1, 2, e2}, {2, 3, e1}}), JacobiViolation);
}

TEST(LieAlgebra, ConflictingOrientationsAreRejected) {
  Vector e3{0, 0, 1};
  EXPECT_THROW(lie_from_table(3, {{1, 2, e3}, {2, 1, e3}}), AntisymmetryConflict);
  EXPECT_NO_THROW(lie_from_table(3, {{1, 2, e3}, {2, 1, Vector{0, 0, -1}}}));
  EXPECT_THROW(lie_from_table(3, {{1, 1, e3}}), AntisymmetryConflict);
  EXPECT_THROW(lie_from_table(3, {{1, 4, e3}}), IndexOutOfRange);
}

TEST(LieAlgebra, AdjointIsARepresentation) {
  Rng rng(11);
  for (const LieAlgebra& g : {counterexample_g13(), n4_lie(), r2_lie(), free3_lie(3)}) {
    for (int t = 0; t < 10; ++t) {
      Vector x = rng.vector(g.dim()), y = rng.vector(g.dim());
      EXPECT_EQ(ad_matrix(g, bracket_vec(g, x, y)), commutator(ad_matrix(g, x), ad_matrix(g, y)));
    }
  }
}

TEST(LieAlgebra, CenterOfHeisenbergIsSpannedByE3) {
  Subspace z = lie_center(n3_lie());
  EXPECT_EQ(z.dim(), 1u);
  EXPECT_TRUE(z.contains(Vector{0, 0, 1}));
  EXPECT_EQ(lie_center(n3r_lie()).dim(), 2u);
}

TEST(LieAlgebra, QuotientByDerivedAlgebraIsAbelian) {
  for (const LieAlgebra& g : {counterexample_g13(), n4_lie(), free3_lie(2)}) {
    Subspace d = bracket_span(g, Subspace::full(g.dim()), Subspace::full(g.dim()));
    Quotient q = quotient_by_ideal(g, d);
    EXPECT_EQ(q.algebra.dim(), g.dim() - d.dim());
    EXPECT_TRUE(q.algebra.is_abelian());
  }
}

TEST(LieAlgebra, BracketRejectsWrongLength) {
  EXPECT_THROW(bracket_vec(n3_lie(), Vector{1, 0}, Vector{0, 1, 0}), DimensionMismatch);
}

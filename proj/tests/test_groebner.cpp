#include "support.hpp"

#include <gtest/gtest.h>

using namespace lralg;
using lralg::testing::Rng;

namespace {

Polynomial x(Var v) { return Polynomial::variable(v); }
Polynomial c(Rational r) { return Polynomial::constant(r); }

Polynomial random_poly(Rng& rng, Var vars, int terms, std::size_t max_deg) {
  Polynomial p;
  for (int t = 0; t < terms; ++t) {
    std::vector<Var> m;
    std::size_t d = std::size_t(rng.uniform(0, int(max_deg)));
    for (std::size_t k = 0; k < d; ++k) m.push_back(Var(rng.uniform(0, int(vars) - 1)));
    p += Polynomial::monomial(rng.nonzero(), Monomial(m));
  }
  return p;
}

}  // namespace

TEST(Monomial, GradedLexOrder) {
  // x0 > x1 > x2; degree first
  EXPECT_GT(compare(Monomial({0}), Monomial({1})), 0);
  EXPECT_GT(compare(Monomial({2, 2}), Monomial({0})), 0);
  EXPECT_GT(compare(Monomial({0, 2}), Monomial({1, 1})), 0);
  EXPECT_EQ(compare(Monomial({1, 0}), Monomial({0, 1})), 0);
  EXPECT_TRUE(Monomial({0, 1}).divides(Monomial({0, 0, 1})));
  EXPECT_EQ(lcm(Monomial({0, 1}), Monomial({1, 1, 2})), Monomial({0, 1, 1, 2}));
}

TEST(Polynomial, RingAxiomsByEvaluation) {
  Rng rng(51);
  for (int t = 0; t < 50; ++t) {
    Polynomial p = random_poly(rng, 3, 4, 3), q = random_poly(rng, 3, 4, 3), r = random_poly(rng, 3, 3, 2);
    std::vector<Rational> pt{rng.rational(), rng.rational(), rng.rational()};
    EXPECT_EQ((p * q).evaluate(pt), p.evaluate(pt) * q.evaluate(pt));
    EXPECT_EQ((p + q).evaluate(pt), p.evaluate(pt) + q.evaluate(pt));
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_TRUE((p - p).is_zero());
  }
}

TEST(Polynomial, TermsAreSortedAndNonzero) {
  Rng rng(52);
  for (int t = 0; t < 30; ++t) {
    Polynomial p = random_poly(rng, 4, 6, 3) * random_poly(rng, 4, 3, 2);
    for (std::size_t k = 0; k < p.size(); ++k) {
      EXPECT_FALSE(p.terms()[k].coeff.is_zero());
      if (k) { EXPECT_GT(compare(p.terms()[k - 1].mono, p.terms()[k].mono), 0); }
    }
  }
}

TEST(Polynomial, EvaluateNeedsEveryVariable) {
  EXPECT_THROW((x(0) * x(3)).evaluate({Rational(1)}), IncompleteAssignment);
}

TEST(Polynomial, PrintsGradedLex) {
  Polynomial p = x(1) * x(1) - c(2) * x(0) + c(Rational(1, 2));
  EXPECT_EQ(p.str(), "x1^2 - 2*x0 + 1/2");
}

TEST(Buchberger, ToySystemIsInconsistent) {
  CertifyResult r = buchberger_certify({x(0) * x(0), x(0) - c(1)});
  EXPECT_EQ(r.status, CertifyStatus::Inconsistent);
  EXPECT_FALSE(r.certificate.empty());
}

TEST(Buchberger, ConsistentSystemGivesReducedBasis) {
  // x^2 - y, x*y - 1 has solutions (cube roots of unity); basis must not contain 1
  CertifyResult r = buchberger_certify({x(0) * x(0) - x(1), x(0) * x(1) - c(1)});
  ASSERT_EQ(r.status, CertifyStatus::SolutionsMayExist);
  for (const auto& g : r.basis) EXPECT_FALSE(g.is_constant());
  EXPECT_TRUE(ideal_contains(r.basis, x(1) * x(1) * x(1) - c(1)));
  EXPECT_FALSE(ideal_contains(r.basis, x(1) - c(1)));
}

TEST(Buchberger, BasisIsGroebnerForRandomSystems) {
  // every S-polynomial of the returned basis reduces to zero
  Rng rng(53);
  for (int t = 0; t < 15; ++t) {
    std::vector<Polynomial> sys;
    for (int k = 0; k < 3; ++k) sys.push_back(random_poly(rng, 3, 3, 2));
    auto gb = groebner_basis(sys, {5000, 12, 10.0});
    if (!gb) continue;
    for (const auto& p : sys) EXPECT_TRUE(ideal_contains(*gb, p));
    for (std::size_t i = 0; i < gb->size(); ++i)
      for (std::size_t j = i + 1; j < gb->size(); ++j) {
        const Polynomial& f = (*gb)[i];
        const Polynomial& g = (*gb)[j];
        Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
        Polynomial s = Polynomial::monomial(Rational(1), quotient(l, f.leading_monomial())) * f -
                       Polynomial::monomial(Rational(1), quotient(l, g.leading_monomial())) * g;
        EXPECT_TRUE(normal_form(s, *gb).is_zero());
      }
  }
}

TEST(Buchberger, RandomInfeasibleSystemsAreInconsistent) {
  // A feasible quadratic system plus a polynomial that is forced nonzero on its zero set.
  Rng rng(54);
  for (int t = 0; t < 8; ++t) {
    Rational a = rng.nonzero(), b = rng.rational();
    std::vector<Polynomial> sys{x(0) * x(1) - c(a), x(1) - x(2) * x(2) - c(b), x(0) * x(2) + x(1)};
    // multiply the third by y and add: y * (x*z + y) - (x*y - a) * z = y^2 + a z; also insist x*y = 0
    sys.push_back(x(0) * x(1) * c(rng.nonzero()));
    CertifyResult r = buchberger_certify(sys);
    EXPECT_EQ(r.status, CertifyStatus::Inconsistent);
  }
}

TEST(Buchberger, BudgetExhaustionIsReported) {
  std::vector<Polynomial> sys;
  for (Var v = 0; v < 6; ++v) sys.push_back(x(v) * x((v + 1) % 6) - x((v + 2) % 6) - c(1));
  CertifyResult r = buchberger_certify(sys, {20000, 2, 60.0});
  EXPECT_EQ(r.status, CertifyStatus::BudgetExhausted);
  EXPECT_FALSE(r.reason.empty());
  CertifyResult s = buchberger_certify(sys, {3, 8, 60.0});
  EXPECT_EQ(s.status, CertifyStatus::BudgetExhausted);
}

TEST(Buchberger, TraceRecordsParents) {
  CertifyResult r = buchberger_certify({x(0) * x(1) - c(1), x(0) * x(0) - x(1), x(1) * x(1) - c(2)});
  for (const auto& st : r.trace) {
    if (st.input >= 0) {
      EXPECT_EQ(st.parent_a, -1);
    } else {
      EXPECT_LT(st.parent_a, long(st.index));
      EXPECT_LT(st.parent_b, long(st.index));
    }
  }
}

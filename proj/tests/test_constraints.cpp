#include "support.hpp"

#include <gtest/gtest.h>

using namespace lralg;
using lralg::testing::Rng;

namespace {

Polynomial p(Var v) { return Polynomial::variable(v); }
Polynomial k(Rational r) { return Polynomial::constant(r); }

using Ansatz = std::vector<std::vector<std::vector<Polynomial>>>;  // L(e_i) as rows of polynomials

std::vector<std::optional<Polynomial>> images_of(const Ansatz& l) {
  const std::size_t n = l.size();
  std::vector<std::optional<Polynomial>> img(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t c = 0; c < n; ++c) img[lr_var(n, i, j, c)] = l[i][j][c];
  return img;
}

bool all_vanish(const std::vector<Polynomial>& ps, const std::vector<Rational>& pt) {
  for (const auto& q : ps)
    if (!q.evaluate(pt).is_zero()) return false;
  return true;
}

std::vector<LRAlgebra> catalog_instances() {
  std::vector<LRAlgebra> out;
  for (const auto& e : catalog_entries())
    for (const auto& s : e.samples()) out.push_back(catalog_get(e.name, s));
  return out;
}

}  // namespace

TEST(Variables, IndexRoundTrip) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (Var v = 0; v < n * n * n; ++v) {
      LRVarIndex ix = lr_var_index(n, v);
      EXPECT_EQ(lr_var(n, ix.i, ix.j, ix.k), v);
    }
  EXPECT_EQ(lr_var_name(3, lr_var(3, 0, 2, 1)), "x[1][3][2]");
}

TEST(Generate, CatalogTensorsAreZeros) {
  for (const auto& a : catalog_instances()) {
    ConstraintSystem s = generate_lr_system(a.lie());
    EXPECT_LE(s.max_degree(), 2u);
    EXPECT_TRUE(evaluate_candidate(s, assignment_from_product(a.product())).ok());
  }
}

TEST(Generate, ZerosAgreeWithDirectVerification) {
  Rng rng(61);
  for (const auto& a : catalog_instances()) {
    std::vector<Rational> d = a.product().dense();
    d[std::size_t(rng.uniform(0, int(d.size()) - 1))] += rng.nonzero();
    BilinearTable q(a.dim(), d);
    ConstraintSystem s = generate_lr_system(a.lie());
    EXPECT_EQ(evaluate_candidate(s, assignment_from_product(q)).ok(), verify_product(a.lie(), q).ok());
  }
}

TEST(Generate, AssignmentRoundTrip) {
  for (const auto& a : catalog_instances())
    EXPECT_EQ(product_from_assignment(a.dim(), assignment_from_product(a.product())), a.product());
  EXPECT_THROW(product_from_assignment(2, std::vector<Rational>(7)), IncompleteAssignment);
  EXPECT_THROW(evaluate_candidate(generate_lr_system(n3_lie()), std::vector<Rational>(26)), IncompleteAssignment);
}

TEST(Ansatz, R2LeavesOneQuadric) {
  // L(e1) = [[a, b], [0, 0]], L(e2) = [[b - 1, c], [0, 0]]
  const Var a = 0, b = 1, c = 2;
  Ansatz l{{{p(a), p(b)}, {k(0), k(0)}}, {{p(b) - k(1), p(c)}, {k(0), k(0)}}};
  std::vector<Polynomial> sub = substitute_system(generate_lr_system(r2_lie()), images_of(l));
  Polynomial rel = p(a) * p(c) - p(b) * (p(b) - k(1));
  ASSERT_FALSE(sub.empty());
  for (const auto& q : sub) EXPECT_EQ(q, rel.monic());

  Rng rng(62);
  for (int t = 0; t < 20; ++t) {
    Rational av = rng.nonzero(), bv = rng.rational(), cv = bv * (bv - 1) / av;
    std::vector<Rational> on{av, bv, cv}, off{av, bv, cv + rng.nonzero()};
    EXPECT_TRUE(all_vanish(sub, on));
    EXPECT_FALSE(all_vanish(sub, off));
  }
}

TEST(Ansatz, N3SevenParameterFamily) {
  enum : Var { al, be, ga, de, la, mu, nu };
  Ansatz l{{{k(0), k(0), k(0)}, {p(al), p(ga), k(0)}, {p(be), p(de), p(ga)}},
           {{k(0), p(la), k(0)}, {p(ga), p(mu), k(0)}, {p(de) - k(1), p(nu), p(mu)}},
           {{k(0), k(0), k(0)}, {k(0), k(0), k(0)}, {p(ga), p(mu), k(0)}}};
  std::vector<Polynomial> sub = substitute_system(generate_lr_system(n3_lie()), images_of(l));
  std::vector<Polynomial> expected{p(al) * p(la), p(ga) * p(la), p(ga) * p(ga) - p(al) * p(mu),
                                   p(ga) * (k(2) * p(de) - k(1)) - p(al) * p(nu) - p(be) * p(mu), p(be) * p(la)};
  // the ideals agree
  auto gb_sub = groebner_basis(sub);
  auto gb_exp = groebner_basis(expected);
  ASSERT_TRUE(gb_sub && gb_exp);
  for (const auto& q : expected) EXPECT_TRUE(ideal_contains(*gb_sub, q)) << q.str();
  for (const auto& q : sub) EXPECT_TRUE(ideal_contains(*gb_exp, q)) << q.str();

  // and the zero sets agree pointwise on points drawn from every branch and generically
  Rng rng(63);
  int on_variety = 0;
  for (int t = 0; t < 100; ++t) {
    std::vector<Rational> x(7);
    for (auto& v : x) v = rng.rational();
    switch (t % 4) {
      case 0:
        x[la] = rng.nonzero();
        x[al] = x[be] = x[ga] = 0;
        break;
      case 1:
        x[la] = 0;
        x[al] = rng.nonzero();
        x[mu] = x[ga] * x[ga] / x[al];
        x[nu] = (x[ga] * (2 * x[de] - 1) - x[be] * x[mu]) / x[al];
        break;
      case 2:
        x[la] = x[al] = x[ga] = 0;
        (rng.coin() ? x[be] : x[mu]) = 0;
        break;
      default:
        break;
    }
    bool e = all_vanish(expected, x);
    EXPECT_EQ(all_vanish(sub, x), e);
    if (t % 4 != 3) { EXPECT_TRUE(e); }
    if (e) ++on_variety;
    if (e) {
      std::vector<Rational> a(27);
      auto img = images_of(l);
      for (Var v = 0; v < 27; ++v) a[v] = img[v]->evaluate(x);
      EXPECT_TRUE(verify_product(n3_lie(), product_from_assignment(3, a)).ok());
    }
  }
  EXPECT_GE(on_variety, 75);
}

TEST(Reduce, SoundOnCatalog) {
  for (const auto& a : catalog_instances()) {
    ConstraintSystem r = structural_reduce(generate_lr_system(a.lie()), a.lie());
    VerificationReport rep = evaluate_candidate(r, assignment_from_product(a.product()));
    EXPECT_TRUE(rep.ok()) << a.dim() << ": " << (rep.ok() ? "" : rep.violations.front().check);
    EXPECT_GT(r.reduced_count(), 0u);
  }
}

TEST(Reduce, R2LeavesSingleQuadric) {
  ConstraintSystem r = structural_reduce(generate_lr_system(r2_lie()), r2_lie());
  EXPECT_EQ(r.reduced_count(), 5u);
  ASSERT_EQ(r.equations.size(), 1u);
  EXPECT_EQ(r.equations[0].poly.degree(), 2u);
}

TEST(Reduce, DimensionMismatch) {
  EXPECT_THROW(structural_reduce(generate_lr_system(r2_lie()), n3_lie()), DimensionMismatch);
}

TEST(G13, ReducedSystemIsInconsistent) {
  LieAlgebra g = counterexample_g13();
  ConstraintSystem s = generate_lr_system(g);
  EXPECT_EQ(s.num_vars(), 2197u);
  ConstraintSystem r = structural_reduce(s, g);
  EXPECT_EQ(r.reduced_count(), 2139u);
  CertifyResult c = buchberger_certify(r.polynomials());
  EXPECT_EQ(c.status, CertifyStatus::Inconsistent);
}

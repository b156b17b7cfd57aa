#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>

#include "generators.hpp"
#include "torusdyn/hodge_riemann.hpp"

using namespace torusdyn;
namespace tg = torusdyn::testgen;

namespace {

CohomClass diag_class(std::vector<long> d) {
  GaussRatMatrix h(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) h(i, i) = GaussRat(Rat(d[i]));
  return CohomClass::from_hermitian(h);
}

CohomClass identity_class(unsigned k) { return CohomClass::from_hermitian(GaussRatMatrix::identity(k)); }

Eigen::MatrixXcd to_eigen(const GaussRatMatrix& h) {
  Eigen::MatrixXcd m(h.rows(), h.cols());
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) m(i, j) = {h(i, j).re.get_d(), h(i, j).im.get_d()};
  return m;
}

// Oracle: integral of H_1 ^ ... ^ H_k by inclusion-exclusion over determinants,
// sum over S of (-1)^{k-|S|} det(sum_{i in S} H_i), in double precision.
double volume_oracle(const std::vector<Eigen::MatrixXcd>& hs) {
  const std::size_t k = hs.size();
  double total = 0;
  for (unsigned s = 1; s < (1U << k); ++s) {
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(hs[0].rows(), hs[0].cols());
    int size = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (s & (1U << i)) {
        sum += hs[i];
        ++size;
      }
    double sign = ((k - size) % 2) ? -1.0 : 1.0;
    total += sign * sum.determinant().real();
  }
  return total;
}

std::vector<CohomClass> repeat(const CohomClass& c, std::size_t n) { return std::vector<CohomClass>(n, c); }

}  // namespace

TEST(QForm, SpecifiedValues) {
  EXPECT_EQ(q_form(diag_class({1, 0}), diag_class({0, 1}), {}), Rat(-1));
  EXPECT_EQ(q_form(identity_class(2), identity_class(2), {}), Rat(-2));
  EXPECT_EQ(q_form(identity_class(3), identity_class(3), {identity_class(3)}), Rat(-6));
}

TEST(QForm, GramMatchesDeterminantOracle) {
  tg::Rng rng(11);
  for (unsigned k : {2U, 3U, 4U}) {
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<CohomClass> ctx;
      for (unsigned i = 0; i + 2 < k; ++i) ctx.push_back(CohomClass::from_hermitian(tg::positive_definite(rng, k, 2)));
      QForm q = make_q_form(k, ctx);
      const auto basis = hermitian_basis(k);
      for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = 0; b < basis.size(); ++b) {
          std::vector<Eigen::MatrixXcd> hs{to_eigen(basis[a]), to_eigen(basis[b])};
          for (const auto& c : ctx) hs.push_back(to_eigen(c.m));
          double expect = -volume_oracle(hs);
          EXPECT_NEAR(q.gram(a, b).get_d(), expect, 1e-6 * (1 + std::abs(expect))) << k << " " << a << " " << b;
        }
    }
  }
}

TEST(QForm, GramAgreesWithDirectEvaluation) {
  tg::Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned k = 3;
    std::vector<CohomClass> ctx{CohomClass::from_hermitian(tg::hermitian(rng, k, 3))};
    QForm q = make_q_form(k, ctx);
    std::vector<Rat> x(k * k), y(k * k);
    for (auto& v : x) v = Rat(tg::uniform(rng, -4, 4));
    for (auto& v : y) v = Rat(tg::uniform(rng, -4, 4));
    Rat direct = q_form(class_from_coordinates(k, x), class_from_coordinates(k, y), ctx);
    EXPECT_EQ(q(x, y), direct);
    EXPECT_EQ(q(x, y), q(y, x));
  }
}

TEST(PrimitiveSpace, IdentityContext) {
  PrimitiveSpace p = primitive_space(2, {identity_class(2)});
  EXPECT_FALSE(p.degenerate);
  EXPECT_EQ(p.dimension(), 3U);
  EXPECT_TRUE(p.contains(diag_class({1, -1})));
  EXPECT_FALSE(p.contains(diag_class({1, 0})));
  for (std::size_t i = 0; i < p.dimension(); ++i) {
    std::vector<Rat> row(p.basis.cols());
    for (std::size_t j = 0; j < row.size(); ++j) row[j] = p.basis(i, j);
    EXPECT_TRUE(p.contains(class_from_coordinates(2, row)));
  }
}

TEST(PrimitiveSpace, ZeroWedgeIsDegenerate) {
  CohomClass e1 = diag_class({1, 0, 0});
  PrimitiveSpace p = primitive_space(3, {e1, e1});
  EXPECT_TRUE(p.degenerate);
  EXPECT_EQ(p.dimension(), 9U);
}

TEST(HodgeRiemann, IdentityIsDefinite) {
  for (unsigned k : {2U, 3U, 4U}) {
    PositivityReport r = check_hodge_riemann_definite(identity_class(k));
    EXPECT_TRUE(r.holds) << k;
    EXPECT_EQ(r.dimension, k * k - 1);
    EXPECT_EQ(r.rank, k * k - 1);
    EXPECT_FALSE(r.witness);
    for (const auto& p : r.pivots) EXPECT_GT(p, 0);
  }
}

TEST(HodgeRiemann, RejectsNonKahler) {
  EXPECT_THROW(check_hodge_riemann_definite(diag_class({1, 0})), std::invalid_argument);
  EXPECT_THROW(check_hodge_riemann_definite(diag_class({1, -1})), std::invalid_argument);
}

TEST(HodgeRiemann, RandomKahlerClasses) {
  tg::Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned k = trial < 70 ? 2 : 3;
    CohomClass omega = CohomClass::from_hermitian(tg::positive_definite(rng, k, 2));
    PositivityReport r = check_hodge_riemann_definite(omega);
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.rank, k * k - 1);
  }
}

TEST(Semipositivity, SweepPositiveDefiniteContexts) {
  SemipositivitySweep s = sweep_gromov(3, 100, 2024);
  EXPECT_EQ(s.samples, 100U);
  EXPECT_EQ(s.failed, 0U);
  EXPECT_EQ(s.degenerate, 0U);
  EXPECT_EQ(s.passed, 100U);
  EXPECT_GT(s.smallest_pivot, 0);
  EXPECT_FALSE(s.first_failure);
}

TEST(Semipositivity, SweepNefContexts) {
  SemipositivitySweep s = sweep_gromov(3, 120, 7, ContextDraw::nef);
  EXPECT_EQ(s.failed, 0U);
  EXPECT_EQ(s.passed + s.degenerate, 120U);
  EXPECT_GT(s.passed, 0U);
}

TEST(Semipositivity, SweepFourDimensional) {
  SemipositivitySweep s = sweep_gromov(4, 10, 5);
  EXPECT_EQ(s.failed, 0U);
  EXPECT_EQ(s.passed, 10U);
}

TEST(Semipositivity, DrawsReplay) {
  auto a = context_for_draw(3, 99, 17, ContextDraw::nef);
  auto b = context_for_draw(3, 99, 17, ContextDraw::nef);
  auto c = context_for_draw(3, 99, 18, ContextDraw::nef);
  ASSERT_EQ(a.size(), 2U);
  EXPECT_EQ(a[0], b[0]);
  EXPECT_EQ(a[1], b[1]);
  EXPECT_FALSE(a[0] == c[0] && a[1] == c[1]);
}

TEST(Semipositivity, SemidefiniteWithKernel) {
  // context (diag(1,1,0), diag(1,1,0)) has wedge 2 e_33 and leaves a null direction
  CohomClass c = diag_class({1, 1, 0});
  PositivityReport r = check_gromov_semipositive({c, c});
  EXPECT_FALSE(r.degenerate);
  EXPECT_TRUE(r.holds);
  EXPECT_LT(r.rank, r.dimension);
}

TEST(Semipositivity, FlagsZeroWedgeAndRejectsNonNef) {
  CohomClass e1 = diag_class({1, 0, 0});
  PositivityReport r = check_gromov_semipositive({e1, e1});
  EXPECT_TRUE(r.degenerate);
  EXPECT_FALSE(r.holds);
  EXPECT_THROW(check_gromov_semipositive({diag_class({1, -1, 0}), e1}), std::invalid_argument);
}

TEST(Colinearity, Examples) {
  auto r = colinearity_witness(diag_class({1, 0}), diag_class({2, 0}));
  EXPECT_EQ(r.relation, PairRelation::colinear);
  ASSERT_TRUE(r.ratio);
  EXPECT_EQ(*r.ratio, Rat(2));
  EXPECT_EQ(colinearity_witness(identity_class(2), diag_class({1, 0})).relation, PairRelation::wedge_nonzero);
  EXPECT_EQ(colinearity_witness(diag_class({1, 0, 0}), diag_class({0, 1, 0})).relation, PairRelation::wedge_nonzero);
  auto z = colinearity_witness(CohomClass::zero(2, 1), diag_class({0, 1}));
  EXPECT_EQ(z.relation, PairRelation::colinear);
  EXPECT_FALSE(z.ratio);
  EXPECT_THROW(colinearity_witness(diag_class({1, -1}), diag_class({1, 0})), std::invalid_argument);
}

TEST(Colinearity, RandomPairs) {
  tg::Rng rng(14);
  for (int trial = 0; trial < 150; ++trial) {
    const unsigned k = 2 + trial % 3;
    auto w = tg::gauss_vector(rng, k, 3);
    CohomClass c = rank_one_class(w);
    if (trial % 2 == 0) {
      GaussRat t = tg::gauss(rng, 2);
      std::vector<GaussRat> v(w);
      for (auto& x : v) x = x * t;
      auto r = colinearity_witness(c, rank_one_class(v));
      EXPECT_EQ(r.relation, PairRelation::colinear);
    } else {
      CohomClass d = CohomClass::from_hermitian(tg::positive_definite(rng, k, 2));
      auto r = colinearity_witness(c.structurally_zero() ? d : c, d);
      EXPECT_NE(r.relation, PairRelation::violation);
    }
  }
}

TEST(AbPair, EqualRankOneClasses) {
  CohomClass c = diag_class({1, 0});
  AbPair ab = solve_ab_pair(c, c, {});
  EXPECT_EQ(ab.status, AbStatus::solved);
  EXPECT_EQ(ab.a, Rat(1));
  EXPECT_EQ(ab.b, Rat(-1));
  EXPECT_TRUE(ab.uniqueness_required);
  EXPECT_EQ(ab.kernel_dimension, 1U);
}

TEST(AbPair, HypothesisViolation) {
  AbPair ab = solve_ab_pair(identity_class(2), identity_class(2), {});
  EXPECT_EQ(ab.status, AbStatus::hypothesis_violated);
  EXPECT_THROW(solve_ab_pair(diag_class({1, -1}), identity_class(2), {}), std::invalid_argument);
  EXPECT_THROW(solve_ab_pair(identity_class(2), identity_class(2), {identity_class(2)}), std::invalid_argument);
}

TEST(AbPair, BothWedgesZero) {
  CohomClass e1 = diag_class({1, 0, 0});
  AbPair ab = solve_ab_pair(e1, e1, {e1});
  EXPECT_EQ(ab.status, AbStatus::solved);
  EXPECT_FALSE(ab.uniqueness_required);
  EXPECT_EQ(ab.kernel_dimension, 2U);
}

// c = w w^*, c' = v v^*, c_1 = u u^* with u = alpha w + beta v: the pair is (|alpha|^2, -|beta|^2)
// up to scale, since w ^ u = beta (w ^ v) and v ^ u = -alpha (w ^ v).
TEST(AbPair, SpannedRankOneTriples) {
  tg::Rng rng(15);
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned k = trial < 80 ? 3 : 4;
    auto w = tg::gauss_vector(rng, k, 2), v = tg::gauss_vector(rng, k, 2);
    GaussRat alpha = tg::gauss(rng, 2), beta = tg::gauss(rng, 2);
    std::vector<GaussRat> u(k);
    for (unsigned i = 0; i < k; ++i) u[i] = alpha * w[i] + beta * v[i];
    CohomClass c = rank_one_class(w), cp = rank_one_class(v), c1 = rank_one_class(u);
    AbPair ab = solve_ab_pair(c, cp, {c1});
    ASSERT_EQ(ab.status, AbStatus::solved) << ab.detail;
    Rat na = alpha.re * alpha.re + alpha.im * alpha.im, nb = beta.re * beta.re + beta.im * beta.im;
    if (wedge(c, c1).structurally_zero() || wedge(cp, c1).structurally_zero()) {
      // degenerate draws only need a vanishing combination
      EXPECT_TRUE((GaussRat(ab.a) * wedge(c, c1) + GaussRat(ab.b) * wedge(cp, c1)).structurally_zero());
      continue;
    }
    EXPECT_EQ(ab.kernel_dimension, 1U);
    // cross ratio against the closed form
    EXPECT_EQ(ab.a * nb, -ab.b * na) << trial;
    ++checked;
  }
  EXPECT_GT(checked, 60);
}

TEST(AbPair, SolutionKillsOracleIntersections) {
  tg::Rng rng(16);
  for (int trial = 0; trial < 20; ++trial) {
    const unsigned k = 3;
    auto w = tg::gauss_vector(rng, k, 2), v = tg::gauss_vector(rng, k, 2);
    std::vector<GaussRat> u(k);
    for (unsigned i = 0; i < k; ++i) u[i] = w[i] + GaussRat(Rat(2)) * v[i];
    CohomClass c = rank_one_class(w), cp = rank_one_class(v), c1 = rank_one_class(u);
    AbPair ab = solve_ab_pair(c, cp, {c1});
    ASSERT_EQ(ab.status, AbStatus::solved);
    GaussRatMatrix comb = GaussRat(ab.a) * c.m + GaussRat(ab.b) * cp.m;
    for (int z = 0; z < 5; ++z) {
      GaussRatMatrix probe = tg::hermitian(rng, k, 3);
      double val = volume_oracle({to_eigen(comb), to_eigen(c1.m), to_eigen(probe)});
      EXPECT_NEAR(val, 0.0, 1e-6);
    }
  }
}

namespace {

struct CubicField {
  std::shared_ptr<AlgebraicPool> pool = std::make_shared<AlgebraicPool>();
  std::vector<AlgNum> mu;  // the three real roots of x^3 - x^2 - 2x + 1
  TorusAutomorphism g = TorusAutomorphism::from_int(IntMatrix{{0, 0, -1}, {1, 0, 2}, {0, 1, 1}});
  CubicField() {
    for (auto id : pool->add_all_roots(IntPoly{1, -2, -1, 1})) mu.push_back(AlgNum::generator(pool, id));
  }
  // (1, mu, mu^2) is an eigenvector of the transpose, so its rank-one class scales by mu^2
  AlgClass eigenclass(std::size_t i) const {
    return rank_one_class(std::vector<AlgNum>{AlgNum(1L), mu[i], mu[i] * mu[i]});
  }
};

}  // namespace

TEST(EigenclassWedge, CubicInstanceHolds) {
  CubicField f;
  AlgClass c1 = f.eigenclass(0), c2 = f.eigenclass(1);
  AlgNum l = f.mu[0] * f.mu[0] * f.mu[1] * f.mu[1];
  LemmaReport r = check_eigenclass_wedge_lemma(f.g, c2, c1, {c1}, l, f.mu[0] * f.mu[0]);
  EXPECT_EQ(r.verdict, Verdict::holds) << r.reason;
}

TEST(EigenclassWedge, ZeroSecondClassHolds) {
  CubicField f;
  AlgClass c = f.eigenclass(2);
  AlgClass zero = AlgClass::zero(3, 1);
  LemmaReport r = check_eigenclass_wedge_lemma(f.g, c, zero, {}, f.mu[2] * f.mu[2], AlgNum(5L));
  EXPECT_EQ(r.verdict, Verdict::holds) << r.reason;
}

TEST(EigenclassWedge, FailedHypothesesAreVacuous) {
  CubicField f;
  AlgClass c1 = f.eigenclass(0), c2 = f.eigenclass(1), c3 = f.eigenclass(2);
  AlgNum l1 = f.mu[0] * f.mu[0];
  // W ^ c ^ c' != 0
  auto r = check_eigenclass_wedge_lemma(f.g, c2, c3, {c1}, l1 * f.mu[1] * f.mu[1], l1 * f.mu[2] * f.mu[2]);
  EXPECT_EQ(r.verdict, Verdict::vacuous);
  // equal eigenvalues
  r = check_eigenclass_wedge_lemma(f.g, c1, c2, {}, l1, l1);
  EXPECT_EQ(r.verdict, Verdict::vacuous);
  // wrong eigenvalue
  r = check_eigenclass_wedge_lemma(f.g, c1, AlgClass::zero(3, 1), {}, AlgNum(3L), AlgNum(5L));
  EXPECT_EQ(r.verdict, Verdict::vacuous);
  EXPECT_EQ(to_string(r.verdict), "vacuous");
}

TEST(EigenclassWedge, PellPairIsVacuous) {
  auto pool = std::make_shared<AlgebraicPool>();
  std::vector<AlgNum> mu;
  for (auto id : pool->add_all_roots(IntPoly{-1, -2, 1})) mu.push_back(AlgNum::generator(pool, id));
  // transpose of [[1,2],[1,1]] has eigenvectors (1, mu - 1) for mu = 1 +- sqrt 2
  auto cls = [&](const AlgNum& m) { return rank_one_class(std::vector<AlgNum>{AlgNum(1L), m - AlgNum(1L)}); };
  TorusAutomorphism g = TorusAutomorphism::from_int(IntMatrix{{1, 2}, {1, 1}});
  auto r = check_eigenclass_wedge_lemma(g, cls(mu[0]), cls(mu[1]), {}, mu[0] * mu[0], mu[1] * mu[1]);
  EXPECT_EQ(r.verdict, Verdict::vacuous);
}

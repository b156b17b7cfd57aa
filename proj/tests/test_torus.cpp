#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <set>

#include "generators.hpp"
#include "torusdyn/charpoly.hpp"
#include "torusdyn/cyclotomic.hpp"
#include "torusdyn/torus.hpp"

using namespace torusdyn;
namespace tg = torusdyn::testgen;

namespace {

const GaussInt kI(0, 1);

TorusAutomorphism cat_map() { return TorusAutomorphism::from_int(IntMatrix{{2, 1}, {1, 1}}, "cat"); }
TorusAutomorphism pell() { return TorusAutomorphism::from_int(IntMatrix{{1, 2}, {1, 1}}, "pell"); }
TorusAutomorphism a_mn(long m, long n) {
  return TorusAutomorphism(GaussIntMatrix{{GaussInt(1), GaussInt(m, n)}, {GaussInt(0), GaussInt(1)}});
}
TorusAutomorphism i_times_identity(unsigned k) { return TorusAutomorphism(GaussIntMatrix::identity(k) * kI); }

// Double-precision oracle: (product of the p largest eigenvalue moduli of A)^2, via Eigen.
double eigen_degree(const GaussIntMatrix& a, unsigned p) {
  const auto k = static_cast<Eigen::Index>(a.rows());
  Eigen::MatrixXcd m(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) {
      const auto& z = a(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      m(i, j) = std::complex<double>(z.re.get_d(), z.im.get_d());
    }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m);
  std::vector<double> mods;
  for (Eigen::Index i = 0; i < k; ++i) mods.push_back(std::abs(es.eigenvalues()(i)));
  std::sort(mods.rbegin(), mods.rend());
  double prod = 1;
  for (unsigned i = 0; i < p; ++i) prod *= mods[i];
  return prod * prod;
}

double eigen_entropy(const GaussIntMatrix& a) {
  double best = 1;
  for (unsigned p = 0; p <= a.rows(); ++p) best = std::max(best, eigen_degree(a, p));
  return std::log(best);
}

std::vector<TorusAutomorphism> builtin_maps() {
  return {cat_map(),
          pell(),
          a_mn(1, 0),
          a_mn(0, 1),
          a_mn(1, 1),
          i_times_identity(2),
          TorusAutomorphism::from_int(IntMatrix{{0, -1}, {1, 0}}),
          // multiplication by theta and 1 + theta, theta a root of x^3 - x^2 - 2x + 1
          TorusAutomorphism::from_int(IntMatrix{{0, 0, -1}, {1, 0, 2}, {0, 1, 1}}),
          TorusAutomorphism::from_int(IntMatrix{{1, 0, -1}, {1, 1, 2}, {0, 1, 2}})};
}

}  // namespace

TEST(H11, SpecifiedExamples) {
  EXPECT_TRUE(h11_matrix(TorusAutomorphism::identity(3)).is_identity());
  IntMatrix h = h11_matrix(TorusAutomorphism::from_int(IntMatrix{{0, -1}, {1, 0}}));
  // column of E_11 is the coordinate vector of E_22
  EXPECT_EQ(h.col(0), (std::vector<Int>{0, 1, 0, 0}));
  IntMatrix hc = h11_matrix(cat_map());
  ASSERT_EQ(hc.rows(), 4u);
  auto roots = AlgebraicReal::real_roots(squarefree_part(charpoly(hc)));
  EXPECT_NEAR(roots.back().approx(), eigen_degree(cat_map().matrix(), 1), 1e-9);
  EXPECT_TRUE(hpp_matrix(cat_map(), 0).is_identity());
  EXPECT_TRUE(hpp_matrix(cat_map(), 2).is_identity());
  EXPECT_THROW(hpp_matrix(cat_map(), 3), std::invalid_argument);
}

TEST(H11, MatchesPullbackOfClasses) {
  tg::Rng rng(41);
  for (int t = 0; t < 50; ++t) {
    unsigned k = static_cast<unsigned>(tg::uniform(rng, 1, 3));
    TorusAutomorphism f = TorusAutomorphism::from_int(tg::unimodular(rng, k, 5));
    for (unsigned p = 0; p <= k; ++p) {
      IntMatrix h = hpp_matrix(f, p);
      GaussRatMatrix x = tg::hermitian(rng, static_cast<unsigned>(binomial(k, p)), 3);
      CohomClass c(k, p, x);
      auto coords = hermitian_coordinates(x);
      std::vector<Int> icoords;
      for (const auto& r : coords) icoords.push_back(r.get_num());
      auto image = h * icoords;
      auto expected = hermitian_coordinates(pullback(f, c).m);
      for (std::size_t i = 0; i < image.size(); ++i) ASSERT_EQ(Rat(image[i]), expected[i]);
    }
  }
}

TEST(Degrees, SpecifiedValues) {
  for (unsigned p = 0; p <= 3; ++p) EXPECT_EQ(dynamical_degree(TorusAutomorphism::identity(3), p), AlgebraicReal(Rat(1)));
  // (7 + 3 sqrt5) / 2 is the larger root of x^2 - 7x + 1
  AlgebraicReal cat = dynamical_degree(cat_map(), 1);
  EXPECT_EQ(cat, AlgebraicReal::isolate(IntPoly{1, -7, 1}, Rat(6), Rat(7)));
  cat.refine_to(pow2(-40));
  EXPECT_LT(cat.width(), Rat(1) / 10000000000);
  // 3 + 2 sqrt2 is the larger root of x^2 - 6x + 1
  EXPECT_EQ(dynamical_degree(pell(), 1), AlgebraicReal::isolate(IntPoly{1, -6, 1}, Rat(5), Rat(6)));
}

TEST(Entropy, SpecifiedValues) {
  EXPECT_TRUE(entropy(a_mn(1, 1)).zero);
  EXPECT_TRUE(entropy(i_times_identity(2)).zero);
  EntropyValue e = entropy(cat_map(), 40);
  EXPECT_FALSE(e.zero);
  EXPECT_EQ(e.argmax, 1u);
  // 2 ln((3 + sqrt5) / 2)
  const double oracle = 2 * std::log((3 + std::sqrt(5.0)) / 2);
  EXPECT_LT(e.value.width(), Rat(1) / 1000000000);
  EXPECT_NEAR(to_double(e.value.mid()), oracle, 1e-12);
  EXPECT_NEAR(to_double(entropy(pell()).value.mid()), 2 * std::log(1 + std::sqrt(2.0)), 1e-12);
}

TEST(Classify, SpecifiedValues) {
  EXPECT_EQ(classify(cat_map()), Classification::positive_entropy);
  EXPECT_EQ(classify(a_mn(1, 1)), Classification::parabolic);
  EXPECT_EQ(classify(a_mn(1, 0)), Classification::parabolic);
  EXPECT_EQ(classify(TorusAutomorphism::from_int(IntMatrix{{0, -1}, {1, 0}})), Classification::finite_order_on_cohomology);
  EXPECT_EQ(classify(i_times_identity(2)), Classification::finite_order_on_cohomology);
  EXPECT_EQ(to_string(Classification::parabolic), "parabolic");
}

TEST(Automorphism, RejectsNonUnitDeterminant) {
  EXPECT_THROW(TorusAutomorphism::from_int(IntMatrix{{2, 0}, {0, 1}}), std::invalid_argument);
  EXPECT_THROW(TorusAutomorphism(GaussIntMatrix{{GaussInt(1, 1)}}), std::invalid_argument);
  EXPECT_NO_THROW(TorusAutomorphism(GaussIntMatrix{{kI}}));
  auto f = cat_map();
  EXPECT_TRUE((f * f.inverse()).matrix().is_identity());
  EXPECT_EQ(f.power(3), f * f * f);
  EXPECT_EQ(f.power(-2), f.inverse() * f.inverse());
}

TEST(Enumerate, SpecifiedValues) {
  auto e1 = enumerate_degree_values(2, 1);
  ASSERT_EQ(e1.values.size(), 1u);
  EXPECT_EQ(e1.values[0], AlgebraicReal(Rat(1)));
  EXPECT_FALSE(e1.min_positive_entropy.has_value());
  auto e0 = enumerate_degree_values(3, 0);
  ASSERT_EQ(e0.values.size(), 1u);
  EXPECT_THROW(enumerate_degree_values(4, 2), BudgetExceeded);
  try {
    enumerate_degree_values(3, 3);
    FAIL();
  } catch (const BudgetExceeded& b) {
    EXPECT_EQ(b.estimate, Int(40353607));
  }
}

TEST(Enumerate, MinimalPositiveValueMatchesTraceOracle) {
  auto e = enumerate_degree_values(2, 2);
  ASSERT_TRUE(e.min_positive_entropy.has_value());
  // oracle: for SL(2,Z), d_1 = lambda^2 with lambda^2 - t lambda + 1 = 0, so d_1 is the larger
  // root of x^2 - (t^2 - 2) x + 1; minimize over |t| > 2 among matrices with entries in [-2, 2]
  long best_t = 0;
  std::set<long> traces;
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b)
      for (long c = -2; c <= 2; ++c)
        for (long d = -2; d <= 2; ++d)
          if (a * d - b * c == 1) {
            long t = std::abs(a + d);
            traces.insert(t);
            if (t > 2 && (best_t == 0 || t < best_t)) best_t = t;
          }
  ASSERT_EQ(best_t, 3);
  long s = best_t * best_t - 2;
  EXPECT_EQ(*e.min_positive_entropy, AlgebraicReal::isolate(IntPoly{1, -s, 1}, Rat(1), Rat(s)));
  // distinct values: 1 plus one per trace above 2
  std::size_t hyperbolic = static_cast<std::size_t>(std::count_if(traces.begin(), traces.end(), [](long t) { return t > 2; }));
  EXPECT_EQ(e.values.size(), 1 + hyperbolic);
  for (std::size_t i = 1; i < e.values.size(); ++i) EXPECT_LT(e.values[i - 1], e.values[i]);
}

TEST(DegreeProperties, RandomMatricesAgreeWithEigenOracle) {
  // 100 random unit-determinant matrices, entries in [-3, 3], k <= 4: spectral radius on
  // H^{p,p} against the closed form (dynamical_degree cross-checks internally as well)
  tg::Rng rng(42);
  for (int t = 0; t < 100; ++t) {
    unsigned k = static_cast<unsigned>(tg::uniform(rng, 1, 4));
    TorusAutomorphism f = TorusAutomorphism::from_int(tg::bounded_unimodular(rng, k, 3));
    DegreeProfile prof = degree_profile(f, 40);
    for (unsigned p = 0; p <= k; ++p) {
      double o = eigen_degree(f.matrix(), p);
      ASSERT_NEAR(prof.degrees[p].approx(), o, 1e-7 * o) << to_string(f.matrix()) << " p=" << p;
      ASSERT_TRUE(prof.degrees[p].compare(Rat(1)) >= 0);
      // d_p <= d_1^p
      ASSERT_LE(prof.degrees[p], prof.degrees[1].pow(p));
    }
    ASSERT_EQ(prof.degrees[0], AlgebraicReal(Rat(1)));
    ASSERT_EQ(prof.degrees[k], AlgebraicReal(Rat(1)));
    ASSERT_NEAR(to_double(prof.entropy.value.mid()), eigen_entropy(f.matrix()), 1e-7);
  }
}

TEST(DegreeProperties, BuiltinPowersAndInverse) {
  for (const auto& f : builtin_maps()) {
    for (unsigned p = 0; p <= f.k(); ++p) {
      AlgebraicReal d = dynamical_degree(f, p);
      EXPECT_EQ(dynamical_degree(f.power(2), p), d.pow(2)) << to_string(f.matrix());
      EXPECT_EQ(dynamical_degree(f.power(3), p), d.pow(3)) << to_string(f.matrix());
      EXPECT_LE(d, dynamical_degree(f, 1).pow(p));
    }
    EXPECT_EQ(entropy(f).max_degree, entropy(f.inverse()).max_degree);
  }
}

TEST(DegreeProperties, KroneckerThreeWayAgreement) {
  tg::Rng rng(43);
  auto maps = builtin_maps();
  for (int t = 0; t < 100; ++t) {
    unsigned k = static_cast<unsigned>(tg::uniform(rng, 1, 3));
    // mix in unipotent and finite-order matrices so all three classes occur
    IntMatrix m = t % 3 == 0 ? tg::bounded_unimodular(rng, k, 2) : tg::unimodular(rng, k, 4);
    if (t % 5 == 0) {
      m = IntMatrix::identity(k);
      for (unsigned i = 0; i + 1 < k; ++i) m(i, i + 1) = tg::uniform(rng, -2, 2);
    }
    maps.push_back(TorusAutomorphism::from_int(m));
  }
  for (const auto& f : maps) {
    bool positive = classify(f) == Classification::positive_entropy;
    bool entropy_positive = !entropy(f).zero;
    bool noncyclotomic = !is_cyclotomic_product(charpoly(h11_matrix(f)));
    bool radius_above_one = dynamical_degree(f, 1).compare(Rat(1)) > 0;
    ASSERT_EQ(positive, entropy_positive) << to_string(f.matrix());
    ASSERT_EQ(positive, noncyclotomic);
    ASSERT_EQ(positive, radius_above_one);
  }
}

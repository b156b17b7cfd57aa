#include <gtest/gtest.h>

#include "generators.hpp"
#include "torusdyn/cohomology.hpp"

using namespace torusdyn;
namespace tg = torusdyn::testgen;

namespace {

CohomClass diag_class(std::initializer_list<long> d) {
  const unsigned k = static_cast<unsigned>(d.size());
  GaussRatMatrix h(k, k);
  unsigned i = 0;
  for (long x : d) {
    h(i, i) = GaussRat(x);
    ++i;
  }
  return CohomClass::from_hermitian(h);
}

CohomClass cls(const GaussRatMatrix& h) { return CohomClass::from_hermitian(h); }

long factorial(unsigned k) { return k <= 1 ? 1 : static_cast<long>(k) * factorial(k - 1); }

}  // namespace

TEST(Subsets, LexOrderAndSigns) {
  const auto& s = subsets(4, 2);
  ASSERT_EQ(s.size(), 6u);
  // {0,1} {0,2} {0,3} {1,2} {1,3} {2,3}
  EXPECT_EQ(s[0], 0b0011u);
  EXPECT_EQ(s[1], 0b0101u);
  EXPECT_EQ(s[3], 0b0110u);
  EXPECT_EQ(s[5], 0b1100u);
  for (std::size_t i = 0; i < s.size(); ++i) EXPECT_EQ(subset_index(4, s[i]), i);
  EXPECT_EQ(shuffle_sign(0b01, 0b10), 1);
  EXPECT_EQ(shuffle_sign(0b10, 0b01), -1);
  EXPECT_EQ(shuffle_sign(0b11, 0b01), 0);
  // {1,2} followed by {0}: two transpositions
  EXPECT_EQ(shuffle_sign(0b110, 0b001), 1);
  EXPECT_EQ(binomial(5, 2), 10u);
  EXPECT_EQ(binomial(2, 3), 0u);
}

TEST(Intersection, SpecifiedValues) {
  EXPECT_EQ(intersection_number({diag_class({1, 0}), diag_class({0, 1})}), 1);
  EXPECT_EQ(intersection_number({diag_class({1, 1}), diag_class({1, 1})}), 2);
  EXPECT_EQ(intersection_number({diag_class({1, 1}), CohomClass::zero(2, 1)}), 0);
  for (unsigned k = 1; k <= 4; ++k) {
    std::vector<CohomClass> cs(k, cls(GaussRatMatrix::identity(k)));
    EXPECT_EQ(intersection_number(cs), factorial(k)) << k;
  }
}

TEST(Intersection, DiagonalIsFactorialTimesDeterminant) {
  tg::Rng rng(31);
  for (int t = 0; t < 100; ++t) {
    unsigned k = static_cast<unsigned>(tg::uniform(rng, 1, 4));
    GaussRatMatrix h = tg::hermitian(rng, k, 3);
    std::vector<CohomClass> cs(k, cls(h));
    GaussRat d = bareiss_determinant(h);
    ASSERT_EQ(d.im, 0);
    ASSERT_EQ(intersection_number(cs), Rat(factorial(k) * d.re));
  }
}

TEST(Wedge, VolumeCoefficientMatchesPolarizedDeterminant) {
  // calibration of the sign convention against the independent polarization formula
  tg::Rng rng(32);
  for (int t = 0; t < 120; ++t) {
    unsigned k = static_cast<unsigned>(tg::uniform(rng, 1, 4));
    std::vector<CohomClass> cs;
    std::vector<GaussRatMatrix> hs;
    for (unsigned i = 0; i < k; ++i) {
      hs.push_back(tg::hermitian(rng, k, 3));
      cs.push_back(cls(hs.back()));
    }
    ASSERT_EQ(volume_coefficient(cs), polarized_determinant(hs));
  }
}

TEST(Wedge, MixedDegreesAreAssociative) {
  tg::Rng rng(33);
  for (int t = 0; t < 100; ++t) {
    unsigned k = static_cast<unsigned>(tg::uniform(rng, 2, 4));
    std::vector<CohomClass> cs;
    std::vector<GaussRatMatrix> hs;
    for (unsigned i = 0; i < k; ++i) {
      hs.push_back(tg::hermitian(rng, k, 2));
      cs.push_back(cls(hs.back()));
    }
    CohomClass first_two = wedge(cs[0], cs[1]);
    std::vector<CohomClass> grouped{first_two};
    for (unsigned i = 2; i < k; ++i) grouped.push_back(cs[i]);
    ASSERT_EQ(intersection_number(grouped), intersection_number(cs));
    // graded commutativity for (p,p)-classes
    ASSERT_EQ(wedge(cs[0], cs[1]), wedge(cs[1], cs[0]));
    if (k == 4) {
      CohomClass last_two = wedge(cs[2], cs[3]);
      ASSERT_EQ(wedge(first_two, last_two), wedge(last_two, first_two));
    }
  }
}

TEST(Wedge, RankOneClasses) {
  using V = std::vector<GaussRat>;
  V w{GaussRat(1L), GaussRat(Rat(2), Rat(1))};
  V v{GaussRat(Rat(0), Rat(1)), GaussRat(3L)};
  auto cw = rank_one_class(w), cv = rank_one_class(v);
  EXPECT_FALSE(wedge(cw, cv).structurally_zero());
  EXPECT_TRUE(wedge(cw, cw).structurally_zero());
  // w w* ^ v v* = |det[w v]|^2 on T^2
  GaussRat det = w[0] * v[1] - w[1] * v[0];
  EXPECT_EQ(volume_coefficient<GaussRat>({cw, cv}), det * det.conj());
  EXPECT_TRUE(wedge(cw, CohomClass::zero(2, 1)).structurally_zero());
}

TEST(Intersection, SymmetricAndMultilinear) {
  tg::Rng rng(34);
  for (int t = 0; t < 100; ++t) {
    unsigned k = static_cast<unsigned>(tg::uniform(rng, 2, 4));
    std::vector<CohomClass> cs;
    for (unsigned i = 0; i < k; ++i) cs.push_back(cls(tg::hermitian(rng, k, 3)));
    Rat base = intersection_number(cs);
    // symmetry under a random transposition
    std::size_t a = static_cast<std::size_t>(tg::uniform(rng, 0, k - 1));
    std::size_t b = static_cast<std::size_t>(tg::uniform(rng, 0, k - 1));
    auto swapped = cs;
    std::swap(swapped[a], swapped[b]);
    ASSERT_EQ(intersection_number(swapped), base);
    // linearity in slot a
    CohomClass extra = cls(tg::hermitian(rng, k, 3));
    Rat s = Rat(tg::uniform(rng, -5, 5)) / tg::uniform(rng, 1, 4);
    auto lin = cs;
    lin[a] = cs[a] + GaussRat(s) * extra;
    auto other = cs;
    other[a] = extra;
    ASSERT_EQ(intersection_number(lin), base + s * intersection_number(other));
  }
}

TEST(Pullback, SpecifiedExamples) {
  GaussRatMatrix e11(2, 2);
  e11(0, 0) = GaussRat(1L);
  GaussRatMatrix a{{GaussRat(0L), GaussRat(-1L)}, {GaussRat(1L), GaussRat(0L)}};
  auto pc = pullback_by(a, cls(e11));
  GaussRatMatrix e22(2, 2);
  e22(1, 1) = GaussRat(1L);
  EXPECT_EQ(pc.m, e22);
  tg::Rng rng(1);
  auto c = cls(tg::hermitian(rng, 3, 3));
  EXPECT_EQ(pullback_by(GaussRatMatrix::identity(3), c), c);
}

TEST(Pullback, PreservesIntersectionsPositivityAndWedge) {
  tg::Rng rng(35);
  for (int t = 0; t < 100; ++t) {
    unsigned k = static_cast<unsigned>(tg::uniform(rng, 2, 4));
    GaussRatMatrix a = to_gauss(to_rat(tg::unimodular(rng, k, 6)));
    if (t % 3 == 0) a = a * GaussRat(Rat(0), Rat(1));  // Gaussian unit scalar, |det| = 1
    std::vector<CohomClass> cs, pcs;
    for (unsigned i = 0; i < k; ++i) {
      cs.push_back(cls(tg::hermitian(rng, k, 3)));
      pcs.push_back(pullback_by(a, cs.back()));
    }
    ASSERT_EQ(intersection_number(pcs), intersection_number(cs));
    // wedge commutes with pullback (compound matrices are multiplicative)
    ASSERT_EQ(pullback_by(a, wedge(cs[0], cs[1])), wedge(pcs[0], pcs[1]));
    GaussRatMatrix p = tg::positive_definite(rng, k, 2);
    ASSERT_TRUE(is_kahler(pullback_by(a, cls(p))));
  }
}

TEST(Cones, NefAndKahler) {
  EXPECT_TRUE(is_kahler(diag_class({1, 1})));
  EXPECT_TRUE(is_nef(diag_class({1, 0})));
  EXPECT_FALSE(is_kahler(diag_class({1, 0})));
  EXPECT_FALSE(is_nef(diag_class({1, -1})));
  EXPECT_FALSE(is_kahler(diag_class({1, -1})));
  // zero diagonal with an off-diagonal entry is indefinite
  GaussRatMatrix h{{GaussRat(0L), GaussRat(Rat(0), Rat(1))}, {GaussRat(Rat(0), Rat(-1)), GaussRat(0L)}};
  EXPECT_FALSE(is_nef(cls(h)));
  EXPECT_TRUE(is_nef(rank_one_class(std::vector<GaussRat>{GaussRat(1L), GaussRat(Rat(1), Rat(1)), GaussRat(2L)})));
}

TEST(Cones, DefinitenessWitnessesAndRandomAgreement) {
  tg::Rng rng(36);
  for (int t = 0; t < 200; ++t) {
    unsigned k = static_cast<unsigned>(tg::uniform(rng, 1, 4));
    GaussRatMatrix h;
    switch (t % 4) {
      case 0:
        h = tg::hermitian(rng, k, 3);
        break;
      case 1:
        h = tg::positive_definite(rng, k, 2);
        break;
      case 2: {
        // singular PSD: sum of fewer rank-one terms than k
        h = GaussRatMatrix(k, k);
        for (unsigned r = 0; r + 1 < k; ++r) h += rank_one_class(tg::gauss_vector(rng, k, 2)).m;
        break;
      }
      default:
        h = tg::positive_definite(rng, k, 2) - GaussRatMatrix::identity(k) * GaussRat(3L);
    }
    auto res = definiteness(h);
    // oracle: Sylvester-type test, all principal minors nonnegative (PSD) / leading minors positive (PD)
    bool psd = true, pd = true;
    for (unsigned mask = 1; mask < (1U << k); ++mask) {
      std::vector<unsigned> idx;
      for (unsigned i = 0; i < k; ++i)
        if (mask >> i & 1U) idx.push_back(i);
      GaussRatMatrix sub(idx.size(), idx.size());
      for (std::size_t x = 0; x < idx.size(); ++x)
        for (std::size_t y = 0; y < idx.size(); ++y) sub(x, y) = h(idx[x], idx[y]);
      Rat d = bareiss_determinant(sub).re;
      if (d < 0) psd = false;
      if (d <= 0) pd = false;
    }
    ASSERT_EQ(res.psd, psd) << to_string(h);
    ASSERT_EQ(res.pd, pd) << to_string(h);
    if (!res.psd) {
      ASSERT_TRUE(res.witness.has_value());
      ASSERT_LT(hermitian_value(h, *res.witness).re, 0);
    }
  }
}

TEST(HermitianBasis, CoordinatesRoundTrip) {
  tg::Rng rng(37);
  for (int t = 0; t < 100; ++t) {
    unsigned n = static_cast<unsigned>(tg::uniform(rng, 1, 6));
    GaussRatMatrix h = tg::hermitian(rng, n, 5);
    auto x = hermitian_coordinates(h);
    ASSERT_EQ(x.size(), n * n);
    ASSERT_EQ(hermitian_from_coordinates(x, n), h);
    auto basis = hermitian_basis(n);
    GaussRatMatrix sum(n, n);
    for (std::size_t i = 0; i < basis.size(); ++i) sum += basis[i] * GaussRat(x[i]);
    ASSERT_EQ(sum, h);
  }
}

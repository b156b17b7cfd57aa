#include <gtest/gtest.h>

#include <cmath>

#include "generators.hpp"
#include "torusdyn/charpoly.hpp"
#include "torusdyn/forge.hpp"

using namespace torusdyn;
namespace tg = torusdyn::testgen;

namespace {

const IntPoly kSqrt2{-2, 0, 1};
const IntPoly kGolden{-1, -1, 1};
const IntPoly kCubic{1, -2, -1, 1};

std::vector<Int> ints(std::initializer_list<long> xs) { return std::vector<Int>(xs.begin(), xs.end()); }

}  // namespace

TEST(Builtins, Catalog) {
  GroupSpec par = builtin("parabolic_T2");
  ASSERT_EQ(par.size(), 2U);
  EXPECT_TRUE(par.generators[0].matrix() == (GaussIntMatrix{{GaussInt(1), GaussInt(1)}, {GaussInt(0), GaussInt(1)}}));
  EXPECT_TRUE(par.generators[1].matrix() ==
              (GaussIntMatrix{{GaussInt(1), GaussInt(0, 1)}, {GaussInt(0), GaussInt(1)}}));
  EntropyValue h = entropy(builtin("cat_T2").generators[0], 80);
  double expect = 2 * std::log((3 + std::sqrt(5.0)) / 2);
  EXPECT_NEAR(h.value.mid().get_d(), expect, 1e-12);
  EXPECT_EQ(classify(builtin("torsion_i").generators[0]), Classification::finite_order_on_cohomology);
  EXPECT_THROW(builtin("nope"), std::invalid_argument);
  for (const auto& name : builtin_names()) EXPECT_TRUE(check_commuting(builtin(name)).commuting) << name;
}

TEST(Builtins, CubicIsSpecialLinear) {
  GroupSpec g = builtin("cubic_T3");
  NumberFieldSpec f = make_number_field(kCubic);
  EXPECT_TRUE(g.generators[0].matrix() == to_gauss(multiplication_matrix(ints({0, -1}), f)));
  EXPECT_TRUE(g.generators[1].matrix() == to_gauss(multiplication_matrix(ints({-1, -1}), f)));
  for (const auto& a : g.generators) EXPECT_EQ(bareiss_determinant(a.matrix()), GaussInt(1));
}

TEST(NumberField, Validation) {
  EXPECT_NO_THROW(make_number_field(kSqrt2));
  EXPECT_NO_THROW(make_number_field(kCubic));
  EXPECT_THROW(make_number_field(IntPoly{-2, 0, 0, 1}), std::invalid_argument);    // x^3 - 2
  EXPECT_THROW(make_number_field(IntPoly{-1, 0, 1}), std::invalid_argument);       // (x - 1)(x + 1)
  EXPECT_THROW(make_number_field(IntPoly{-1, 0, 2}), std::invalid_argument);       // not monic
  EXPECT_THROW(make_number_field(IntPoly{2, 0, -3, 0, 1}), std::invalid_argument);  // (x^2 - 1)(x^2 - 2)
}

TEST(NumberField, IrreducibilityAgainstConstructedProducts) {
  tg::Rng rng(41);
  for (int trial = 0; trial < 120; ++trial) {
    auto random_monic = [&](int d) {
      std::vector<Int> c(static_cast<std::size_t>(d) + 1);
      for (int i = 0; i < d; ++i) c[static_cast<std::size_t>(i)] = tg::uniform(rng, -3, 3);
      c[static_cast<std::size_t>(d)] = 1;
      return IntPoly(c);
    };
    IntPoly a = random_monic(1 + trial % 2), b = random_monic(1 + (trial / 2) % 3);
    EXPECT_FALSE(is_irreducible(a * b)) << to_string(a * b);
  }
  // Eisenstein at 2 or 3
  EXPECT_TRUE(is_irreducible(IntPoly{2, 0, 0, 0, 1}));
  EXPECT_TRUE(is_irreducible(IntPoly{3, 3, 0, 1}));
  EXPECT_TRUE(is_irreducible(IntPoly{-2, 2, 0, 0, 0, 1}));
  EXPECT_TRUE(is_irreducible(kCubic));
}

TEST(RegularRepresentation, Examples) {
  NumberFieldSpec golden = make_number_field(kGolden);
  EXPECT_TRUE(regular_representation(ints({0, 1}), golden).matrix() == to_gauss(IntMatrix{{0, 1}, {1, 1}}));
  NumberFieldSpec r2 = make_number_field(kSqrt2);
  EXPECT_TRUE(regular_representation(ints({1, 1}), r2).matrix() == to_gauss(IntMatrix{{1, 2}, {1, 1}}));
  EXPECT_TRUE(regular_representation(ints({1}), r2).matrix() == GaussIntMatrix::identity(2));
  EXPECT_THROW(regular_representation(ints({0, 1}), r2), std::invalid_argument);
  EXPECT_EQ(field_norm(ints({1, 1}), r2), Int(-1));
}

TEST(UnitSearch, Examples) {
  UnitSystem s2 = unit_search(make_number_field(kSqrt2), 3);
  ASSERT_EQ(s2.units.size(), 1U);
  EXPECT_EQ(s2.units[0], ints({1, 1}));
  UnitSystem sg = unit_search(make_number_field(kGolden), 2);
  ASSERT_EQ(sg.units.size(), 1U);
  EXPECT_EQ(sg.units[0], ints({0, 1}));
  NumberFieldSpec cubic = make_number_field(kCubic);
  UnitSystem sc = unit_search(cubic, 4);
  ASSERT_EQ(sc.units.size(), 2U);
  // independence oracle: 2 x 2 minor of the double-precision log embedding
  double l[2][2];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) l[i][j] = std::log(std::fabs(embed(sc.units[i], cubic, j).mid().get_d()));
  EXPECT_GT(std::fabs(l[0][0] * l[1][1] - l[0][1] * l[1][0]), 1e-3);
  EXPECT_THROW(unit_search(cubic, 0), UnitSearchFailure);
}

TEST(Forge, MaxRankGroups) {
  ForgedGroup q = build_max_rank_group(make_number_field(kSqrt2), 3);
  EXPECT_EQ(q.pi.r, 1U);
  EXPECT_TRUE(q.spec.generators[0].matrix() == to_gauss(IntMatrix{{1, 2}, {1, 1}}));
  ForgedGroup c = build_max_rank_group(make_number_field(kCubic), 4);
  EXPECT_EQ(c.pi.r, 2U);
  for (const auto& g : c.spec.generators) EXPECT_EQ(bareiss_determinant(g.matrix()), GaussInt(1));
  EXPECT_TRUE(check_commuting(c.spec).commuting);
}

// Forged generators: real spectrum, unit determinant, pairwise commuting, and cohomological
// entropy equal to 2 sum_{|sigma(u)| > 1} log |sigma(u)|.
TEST(Forge, UnitMatrixProperties) {
  int cases = 0;
  for (const auto& [poly, bound] : std::vector<std::pair<IntPoly, long>>{{kSqrt2, 12}, {kGolden, 12}, {kCubic, 3}}) {
    NumberFieldSpec f = make_number_field(poly);
    const unsigned k = f.degree();
    std::vector<std::vector<Int>> units;
    std::vector<long> a(k, -bound);
    for (;;) {
      std::vector<Int> u(a.begin(), a.end());
      Int n = field_norm(u, f);
      bool trivial = true;
      for (std::size_t i = 1; i < k; ++i) trivial = trivial && a[i] == 0;
      if ((n == 1 || n == -1) && !(trivial && std::labs(a[0]) == 1)) units.push_back(u);
      std::size_t t = 0;
      while (t < k && a[t] == bound) a[t++] = -bound;
      if (t == k) break;
      ++a[t];
    }
    std::vector<TorusAutomorphism> mats;
    for (const auto& u : units) {
      TorusAutomorphism m = regular_representation(u, f);
      IntPoly cp = charpoly(multiplication_matrix(u, f));
      EXPECT_EQ(real_root_count(cp), static_cast<int>(k));
      Int det = bareiss_determinant(multiplication_matrix(u, f));
      EXPECT_TRUE(det == 1 || det == -1);
      RatInterval cohom = entropy(m, 60).value, emb = embedding_entropy(u, f, 60);
      EXPECT_LT(abs(cohom.mid() - emb.mid()), Rat(1, 1000000000)) << to_string(poly);
      mats.push_back(m);
      ++cases;
    }
    for (std::size_t i = 0; i < mats.size() && i < 12; ++i)
      for (std::size_t j = i + 1; j < mats.size() && j < 12; ++j)
        EXPECT_TRUE(mats[i] * mats[j] == mats[j] * mats[i]);
  }
  EXPECT_GE(cases, 100);
}

TEST(Forge, ExtendedByTorsionHasFiniteU) {
  for (const auto& poly : {kSqrt2, kCubic}) {
    ForgedGroup g = build_max_rank_group(make_number_field(poly), 4);
    auto gens = g.spec.generators;
    gens.emplace_back(GaussIntMatrix::identity(g.spec.k) * GaussInt(0, 1), "iI");
    GroupSpec ext(gens);
    ASSERT_TRUE(check_commuting(ext).commuting);
    DecompositionResult d = decompose(ext);
    EXPECT_EQ(d.r + 1, g.spec.k);
    EXPECT_TRUE(d.u.finite);
    ASSERT_TRUE(d.u.order);
    EXPECT_EQ(*d.u.order, Int(4));
  }
}

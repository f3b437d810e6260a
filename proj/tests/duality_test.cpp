#include <gtest/gtest.h>

#include "cmgraph/duality.hpp"
#include "cmgraph/random.hpp"
#include "support.hpp"

namespace cmg {
namespace {

using testing::definitional_dual;
using testing::example_family;
using testing::render;

SimplicialComplex hollow_triangle() { return SimplicialComplex::from_faces(3, {0b011, 0b101, 0b110}); }

TEST(Complex, FacetsAreMaximalAndSorted) {
  const SimplicialComplex c = SimplicialComplex::from_faces(4, {0b0001, 0b0011, 0b1100, 0b0100});
  EXPECT_EQ(c.facets(), (std::vector<Mask>{0b0011, 0b1100}));
  EXPECT_EQ(c.dimension(), 1);
  EXPECT_TRUE(c.has_face(0));
  EXPECT_FALSE(c.has_face(0b0101));
}

TEST(Complex, VoidAndEmptyFaceDiffer) {
  const auto v = SimplicialComplex::void_complex(3);
  const auto e = SimplicialComplex::from_faces(3, {0});
  EXPECT_TRUE(v.is_void());
  EXPECT_FALSE(e.is_void());
  EXPECT_FALSE(v == e);
  EXPECT_EQ(v.dimension(), -2);
  EXPECT_EQ(e.dimension(), -1);
}

TEST(Complex, FromIdealOfFiveCycle) {
  const Grid g(1, 5);
  std::vector<Monomial> edges;
  for (int i = 1; i <= 5; ++i) edges.push_back(Monomial::of(g, {{1, i}, {1, i % 5 + 1}}));
  const SimplicialComplex c = complex_of_ideal(minimalize(g, edges));
  // Independent sets of C_5 are the five non-adjacent pairs.
  EXPECT_EQ(c.facets().size(), 5U);
  for (Mask f : c.facets()) EXPECT_EQ(popcount(f), 2);
  EXPECT_EQ(stanley_reisner_ideal(c, g), minimalize(g, edges));
}

TEST(Complex, ZeroIdealIsSimplex) {
  const Grid g(1, 3);
  EXPECT_EQ(complex_of_ideal(minimalize(g, {})), SimplicialComplex::simplex(3));
}

TEST(Complex, UnitIdealRejected) {
  const Grid g(1, 3);
  try {
    complex_of_ideal(minimalize(g, {Monomial()}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Unit);
  }
}

TEST(Complex, BudgetEnforced) {
  const Grid g(5, 5);
  try {
    complex_of_ideal(minimalize(g, {}), 24);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Size);
  }
}

TEST(AlexanderDual, HollowTriangleDualIsEmptyFace) {
  const SimplicialComplex d = alexander_dual_complex(hollow_triangle());
  EXPECT_EQ(d.facets(), std::vector<Mask>{0});
  EXPECT_FALSE(d.is_void());
}

TEST(AlexanderDual, SimplexDualIsVoid) {
  EXPECT_TRUE(alexander_dual_complex(SimplicialComplex::simplex(3)).is_void());
}

TEST(AlexanderDual, ProductAndVariablesSwap) {
  const Grid g(1, 2);
  const Monomial x = Monomial::of(g, {{1, 1}});
  const Monomial y = Monomial::of(g, {{1, 2}});
  const MonomialIdeal xy = minimalize(g, {product(x, y)});
  const MonomialIdeal vars = minimalize(g, {x, y});
  EXPECT_EQ(dual_ideal_bruteforce(xy, g), vars);
  EXPECT_EQ(dual_ideal_bruteforce(vars, g), xy);
}

TEST(AlexanderDual, UnitAndZeroSwap) {
  const Grid g(1, 3);
  EXPECT_TRUE(dual_ideal_bruteforce(minimalize(g, {Monomial()}), g).is_zero());
  EXPECT_TRUE(dual_ideal_bruteforce(minimalize(g, {}), g).is_unit());
}

TEST(AlexanderDual, MatchesDefinitionOnRandomComplexes) {
  Rng rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    const int v = 1 + static_cast<int>(rng() % 7);
    std::vector<Mask> faces;
    const int count = static_cast<int>(rng() % 5);
    for (int k = 0; k < count; ++k) faces.push_back(rng() & low_bits(v));
    const SimplicialComplex c = SimplicialComplex::from_faces(v, faces);
    ASSERT_EQ(alexander_dual_complex(c), definitional_dual(c));
    ASSERT_EQ(alexander_dual_complex(alexander_dual_complex(c)), c);
  }
}

TEST(AlexanderDual, DoubleDualOfRandomIdeals) {
  Rng rng(59);
  for (int trial = 0; trial < 200; ++trial) {
    const int v = 1 + static_cast<int>(rng() % 10);
    const Grid g(1, v);
    const MonomialIdeal ideal = minimalize(g, random_monomials(rng, v, 1 + static_cast<int>(rng() % 8), std::min(v, 4)));
    ASSERT_EQ(dual_ideal_bruteforce(dual_ideal_bruteforce(ideal, g), g), ideal);
  }
}

TEST(DualHr, ExampleHasThirteenQuadrics) {
  const RelationFamily f = example_family();
  const MonomialIdeal fast = dual_hr_fast(f);
  EXPECT_EQ(fast.size(), 13U);
  for (Monomial u : fast.generators()) EXPECT_EQ(u.degree(), 2);
  EXPECT_EQ(fast, dual_ideal_bruteforce(build_hr(f), grid_of(f)));
  const auto text = render(grid_of(f), fast.generators());
  for (const char* strict : {"X[1,2]*X[2,3]", "X[2,1]*X[3,2]", "X[1,1]*X[3,2]", "X[1,2]*X[3,3]"})
    EXPECT_NE(std::find(text.begin(), text.end(), strict), text.end()) << strict;
  EXPECT_EQ(std::find(text.begin(), text.end(), "X[1,1]*X[3,3]"), text.end());
}

TEST(DualHr, IdentityLevelsGiveDiagonalPairs) {
  for (int n = 1; n <= 3; ++n)
    for (int r = 2; r <= 4; ++r) {
      const MonomialIdeal d = dual_hr_fast(RelationFamily::identity(n, r));
      EXPECT_EQ(d.size(), static_cast<std::size_t>(r * (r - 1) / 2 * n));
      for (Monomial u : d.generators()) {
        const auto vars = bits_of(u.support());
        EXPECT_EQ(variable_at(grid_of(RelationFamily::identity(n, r)), vars[0]).index,
                  variable_at(grid_of(RelationFamily::identity(n, r)), vars[1]).index);
      }
    }
}

TEST(DualHr, TwoPartsGiveThePosetPairs) {
  const Poset p = close_relation(3, {{1, 3}, {2, 3}});
  const RelationFamily f(3, {p});
  std::vector<Monomial> expected;
  for (auto [i, j] : p.relation().pairs()) expected.push_back(Monomial::of(grid_of(f), {{1, i + 1}, {2, j + 1}}));
  EXPECT_EQ(dual_hr_fast(f), minimalize(grid_of(f), expected));
}

TEST(DualHr, MatchesBruteForceOnRandomFamilies) {
  Rng rng(61);
  for (int trial = 0; trial < 150; ++trial) {
    const RelationFamily f = random_family(rng, 4, 4);
    const MonomialIdeal fast = dual_hr_fast(f);
    ASSERT_EQ(fast, dual_ideal_bruteforce(build_hr(f), grid_of(f)));
    for (Monomial u : fast.generators()) {
      const auto vars = bits_of(u.support());
      ASSERT_EQ(vars.size(), 2U);
      const Variable s = variable_at(grid_of(f), vars[0]);
      const Variable t = variable_at(grid_of(f), vars[1]);
      ASSERT_LT(s.level, t.level);
      ASSERT_LE(s.index, t.index);
    }
  }
}

}  // namespace
}  // namespace cmg

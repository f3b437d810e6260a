#include <gtest/gtest.h>

#include "cmgraph/hr.hpp"
#include "cmgraph/random.hpp"
#include "support.hpp"

namespace cmg {
namespace {

using testing::brute_chains;
using testing::brute_composite;
using testing::example_family;
using testing::render;
using testing::set_of;

// Generators of H_3 for the example family, in the order the chains are listed.
const std::vector<std::string> kExampleGenerators = {
    "X[2,1]*X[2,2]*X[2,3]*X[3,1]*X[3,2]*X[3,3]", "X[1,1]*X[2,2]*X[2,3]*X[3,1]*X[3,2]*X[3,3]",
    "X[1,1]*X[2,1]*X[2,2]*X[2,3]*X[3,2]*X[3,3]", "X[1,2]*X[2,1]*X[2,3]*X[3,1]*X[3,2]*X[3,3]",
    "X[1,1]*X[1,2]*X[2,3]*X[3,1]*X[3,2]*X[3,3]", "X[1,1]*X[1,2]*X[2,1]*X[2,3]*X[3,2]*X[3,3]",
    "X[1,1]*X[1,2]*X[2,1]*X[2,2]*X[2,3]*X[3,3]", "X[1,2]*X[1,3]*X[2,1]*X[3,1]*X[3,2]*X[3,3]",
    "X[1,2]*X[1,3]*X[2,1]*X[2,3]*X[3,1]*X[3,2]", "X[1,1]*X[1,2]*X[1,3]*X[3,1]*X[3,2]*X[3,3]",
    "X[1,1]*X[1,2]*X[1,3]*X[2,1]*X[3,2]*X[3,3]", "X[1,1]*X[1,2]*X[1,3]*X[2,3]*X[3,1]*X[3,2]",
    "X[1,1]*X[1,2]*X[1,3]*X[2,1]*X[2,2]*X[3,3]", "X[1,1]*X[1,2]*X[1,3]*X[2,1]*X[2,3]*X[3,2]",
    "X[1,1]*X[1,2]*X[1,3]*X[2,1]*X[2,2]*X[2,3]",
};

TEST(Chains, ExampleListInOrder) {
  const auto chains = enumerate_chains(example_family());
  const Mask p = set_of({1, 2, 3});
  const std::vector<std::vector<Mask>> expected = {
      {0, 0},
      {set_of({1}), 0},
      {set_of({1}), set_of({1})},
      {set_of({2}), 0},
      {set_of({1, 2}), 0},
      {set_of({1, 2}), set_of({1})},
      {set_of({1, 2}), set_of({1, 2})},
      {set_of({2, 3}), 0},
      {set_of({2, 3}), set_of({3})},
      {p, 0},
      {p, set_of({1})},
      {p, set_of({3})},
      {p, set_of({1, 2})},
      {p, set_of({1, 3})},
      {p, p},
  };
  ASSERT_EQ(chains.size(), expected.size());
  for (std::size_t k = 0; k < chains.size(); ++k) EXPECT_EQ(chains[k].ideals, expected[k]) << "chain " << k;
}

TEST(Chains, ExampleGeneratorsInChainOrder) {
  const RelationFamily f = example_family();
  const auto chains = enumerate_chains(f);
  EXPECT_EQ(render(grid_of(f), chain_monomials(f, chains)), kExampleGenerators);
}

TEST(BuildHr, ExampleIdealIsAlreadyMinimal) {
  const RelationFamily f = example_family();
  const MonomialIdeal h = build_hr(f);
  EXPECT_EQ(h.size(), 15U);
  std::vector<Monomial> parsed;
  for (const auto& s : kExampleGenerators) parsed.push_back(parse_monomial(grid_of(f), s));
  EXPECT_EQ(minimalize(grid_of(f), parsed), h);
  for (Monomial u : h.generators()) EXPECT_EQ(u.degree(), 6);
}

TEST(BuildHr, SingletonGroundSet) {
  const RelationFamily f = RelationFamily::identity(1, 3);
  EXPECT_EQ(enumerate_chains(f).size(), 3U);
  EXPECT_EQ(render(grid_of(f), build_hr(f).generators()),
            (std::vector<std::string>{"X[1,1]*X[2,1]", "X[1,1]*X[3,1]", "X[2,1]*X[3,1]"}));
}

TEST(BuildHr, TwoPartAntichain) {
  const RelationFamily f(2, {Poset::antichain(2)});
  EXPECT_EQ(build_hr(f).size(), 4U);
}

TEST(BuildHr, ChainMonomialRejectsBadTuple) {
  const RelationFamily f = example_family();
  for (const IdealChain& bad : {IdealChain{{set_of({3}), 0}}, IdealChain{{set_of({1}), set_of({3})}}, IdealChain{{0}}}) {
    try {
      chain_monomial(f, bad);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::Chain);
    }
  }
}

TEST(BuildHr, RandomFamiliesMatchBruteForceChains) {
  Rng rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const RelationFamily f = random_family(rng, 4, 4);
    const auto chains = enumerate_chains(f);
    std::set<std::vector<Mask>> listed;
    for (const auto& c : chains) listed.insert(c.ideals);
    ASSERT_EQ(listed, brute_chains(f));
    ASSERT_EQ(listed.size(), chains.size());

    const MonomialIdeal h = build_hr(f);
    ASSERT_EQ(h.size(), chains.size());
    for (const IdealChain& c : chains) {
      const Monomial u = chain_monomial(f, c);
      ASSERT_EQ(u.degree(), f.n() * (f.r() - 1));
      // X_{a,i} divides u_I exactly when p_i lies in I_a or outside I_{a-1}.
      for (int a = 1; a <= f.r(); ++a)
        for (int i = 0; i < f.n(); ++i) {
          const bool in_level_a = contains(c.at(a, f.n()), i);
          const bool from_previous = !contains(c.at(a - 1, f.n()), i);
          ASSERT_EQ(contains(u.support(), slot(grid_of(f), {a, i + 1})), in_level_a || from_previous);
        }
    }
  }
}

TEST(LinearQuotients, CanonicalAndRandomExtensions) {
  Rng rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    const RelationFamily f = random_family(rng, 4, 4);
    const auto chains = enumerate_chains(f);
    const auto gens = chain_monomials(f, chains);
    const ChainOrder canonical = linear_extension(chains);
    ASSERT_TRUE(is_linear_extension(chains, canonical));
    ASSERT_TRUE(check_linear_quotients(permute<Monomial>(gens, canonical)).passed);
    for (int k = 0; k < 20; ++k) {
      const ChainOrder ord = random_linear_extension(chains, rng);
      ASSERT_TRUE(is_linear_extension(chains, ord));
      const auto verdict = check_linear_quotients(permute<Monomial>(gens, ord));
      ASSERT_TRUE(verdict.passed) << "failed at (" << verdict.j << "," << verdict.i << ")";
    }
  }
}

TEST(LinearQuotients, DisjointSupportsFailAtFirstPair) {
  const Grid g(2, 2);
  const std::vector<Monomial> gens = {Monomial::of(g, {{1, 1}, {1, 2}}), Monomial::of(g, {{2, 1}, {2, 2}})};
  const auto verdict = check_linear_quotients(gens);
  EXPECT_FALSE(verdict.passed);
  EXPECT_EQ(verdict.j, 1U);
  EXPECT_EQ(verdict.i, 2U);
  EXPECT_FALSE(find_linear_quotients_order(minimalize(g, gens)).has_value());
}

TEST(LinearQuotients, RejectsMixedDegrees) {
  const Grid g(2, 2);
  const std::vector<Monomial> gens = {Monomial::of(g, {{1, 1}}), Monomial::of(g, {{2, 1}, {2, 2}})};
  try {
    check_linear_quotients(gens);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Degree);
  }
}

TEST(LinearQuotients, ReversedOrderCanFail) {
  // The path x1-x2-x3-x4 edge ideal: x1x2, x3x4 adjacent in the list breaks linearity.
  const Grid g(1, 4);
  const auto m = [&](int i, int j) { return Monomial::of(g, {{1, i}, {1, j}}); };
  EXPECT_FALSE(check_linear_quotients(std::vector<Monomial>{m(1, 2), m(3, 4), m(2, 3)}).passed);
  EXPECT_TRUE(check_linear_quotients(std::vector<Monomial>{m(1, 2), m(2, 3), m(3, 4)}).passed);
  const auto found = find_linear_quotients_order(minimalize(g, {m(1, 2), m(3, 4), m(2, 3)}));
  ASSERT_TRUE(found.has_value());
  EXPECT_TRUE(check_linear_quotients(*found).passed);
}

TEST(LinearQuotients, SearchBudgetIsEnforced) {
  const Grid g(2, 2);
  const std::vector<Monomial> gens = {Monomial::of(g, {{1, 1}, {1, 2}}), Monomial::of(g, {{2, 1}, {2, 2}})};
  try {
    find_linear_quotients_order(minimalize(g, gens), 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Budget);
  }
}

TEST(Gamma, EmptySetGivesEmptyChain) {
  const RelationFamily f = example_family();
  EXPECT_EQ(gamma_chain(f, 0).ideals, (std::vector<Mask>{0, 0}));
}

TEST(Gamma, SingleGeneratorOnSecondLevel) {
  const RelationFamily f = example_family();
  const Mask fset = bit(slot(grid_of(f), {2, 3}));
  EXPECT_EQ(gamma_chain(f, fset).ideals, (std::vector<Mask>{set_of({2, 3}), 0}));
}

TEST(Gamma, WholeGridGivesFullChain) {
  const RelationFamily f = example_family();
  const Mask p = set_of({1, 2, 3});
  EXPECT_EQ(gamma_chain(f, grid_of(f).all()).ideals, (std::vector<Mask>{p, p}));
}

TEST(Gamma, NestedIdealsAndConstructiveWitness) {
  Rng rng(47);
  for (int trial = 0; trial < 300; ++trial) {
    const RelationFamily f = random_family(rng, 4, 4);
    const Grid g = grid_of(f);
    const Mask fset = rng() & g.all();
    const IdealChain gamma = gamma_chain(f, fset);
    ASSERT_TRUE(is_valid_chain(f, gamma));
    const auto rels = f.relations();
    for (int a = 1; a <= f.r() - 1; ++a)
      for (int i = 0; i < f.n(); ++i) {
        const auto w = gamma_witness(f, fset, a, i);
        ASSERT_EQ(w.has_value(), contains(gamma.at(a, f.n()), i));
        if (!w) continue;
        ASSERT_GE(w->b, a + 1);
        ASSERT_LE(w->b, f.r());
        ASSERT_TRUE(contains(fset, slot(g, {w->b, w->j + 1})));
        ASSERT_TRUE(brute_composite(rels, a, w->b - 1, i, w->j));
        ASSERT_EQ(static_cast<int>(w->path.size()), w->b - a);
        ASSERT_EQ(w->path.back(), w->j);
      }
  }
}

}  // namespace
}  // namespace cmg

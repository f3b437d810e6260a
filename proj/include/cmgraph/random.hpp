#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "cmgraph/monomials.hpp"
#include "cmgraph/posets.hpp"

// Seeded generators for the randomized suites. Everything is driven by a
// std::mt19937_64 so a seed fully determines the instances.

namespace cmg {

using Rng = std::mt19937_64;

/// Index-monotone poset: each pair i < j becomes a generating pair with probability `density`.
inline Poset random_poset(Rng& rng, int n, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (coin(rng)) pairs.emplace_back(i, j);
  return close_relation(n, pairs);
}

inline RelationFamily random_family(Rng& rng, int n, int r, double density) {
  std::vector<Poset> levels;
  for (int a = 1; a < r; ++a) levels.push_back(random_poset(rng, n, density));
  return RelationFamily(n, std::move(levels));
}

/// n uniform in [1, max_n], r uniform in [2, max_r], density uniform in {0.15, 0.35, 0.6}.
inline RelationFamily random_family(Rng& rng, int max_n, int max_r) {
  std::uniform_int_distribution<int> pick_n(1, max_n);
  std::uniform_int_distribution<int> pick_r(2, max_r);
  std::uniform_int_distribution<int> pick_d(0, 2);
  constexpr double densities[] = {0.15, 0.35, 0.6};
  const int n = pick_n(rng);
  const int r = pick_r(rng);
  return random_family(rng, n, r, densities[pick_d(rng)]);
}

/// Squarefree monomials on `vertices` variables (grid 1 x vertices), each
/// generator of degree 1..max_degree.
inline std::vector<Monomial> random_monomials(Rng& rng, int vertices, int count, int max_degree) {
  std::uniform_int_distribution<int> pick_v(0, vertices - 1);
  std::uniform_int_distribution<int> pick_deg(1, max_degree);
  std::vector<Monomial> out;
  for (int k = 0; k < count; ++k) {
    Mask m = 0;
    const int deg = pick_deg(rng);
    while (popcount(m) < deg) m |= bit(pick_v(rng));
    out.emplace_back(m);
  }
  return out;
}

}  // namespace cmg

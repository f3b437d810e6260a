#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <unordered_set>
#include <vector>

#include "cmgraph/monomials.hpp"
#include "cmgraph/posets.hpp"

// The ideal H_r generated by the monomials u_I of nested ideal chains
// I_1 ⊇ ... ⊇ I_{r-1}, its chain order, and the linear-quotients machinery.

namespace cmg {

/// (I_1, ..., I_{r-1}) with I_a an order ideal of level a.
struct IdealChain {
  std::vector<Mask> ideals;

  /// I_a with the conventions I_0 = P (the full ground set) and I_r = empty.
  Mask at(int a, int n) const {
    if (a <= 0) return low_bits(n);
    if (a > static_cast<int>(ideals.size())) return 0;
    return ideals[static_cast<std::size_t>(a - 1)];
  }

  int total_size() const {
    return std::accumulate(ideals.begin(), ideals.end(), 0, [](int s, Mask m) { return s + popcount(m); });
  }

  bool operator==(const IdealChain&) const = default;
};

inline Grid grid_of(const RelationFamily& f) { return Grid(f.r(), f.n()); }

inline bool is_valid_chain(const RelationFamily& f, const IdealChain& c) {
  if (static_cast<int>(c.ideals.size()) != f.r() - 1) return false;
  for (int a = 1; a <= f.r() - 1; ++a) {
    const Mask ia = c.at(a, f.n());
    if ((ia & ~low_bits(f.n())) != 0 || !is_order_ideal(f.level(a), ia)) return false;
    if (!is_subset(c.at(a + 1, f.n()), ia)) return false;
  }
  return true;
}

/// All chains, ordered lexicographically by (I_1, ..., I_{r-1}) under the
/// canonical ideal order.
inline std::vector<IdealChain> enumerate_chains(const RelationFamily& f) {
  const int levels = f.r() - 1;
  std::vector<std::vector<OrderIdeal>> ideals;
  for (const Poset& p : f.levels()) ideals.push_back(order_ideals(p));

  // Choose I_{r-1} first, then each I_a among the ideals containing I_{a+1}.
  std::vector<IdealChain> out;
  IdealChain current{std::vector<Mask>(static_cast<std::size_t>(levels), 0)};
  auto descend = [&](auto&& self, int a, Mask inner) -> void {
    if (a == 0) {
      out.push_back(current);
      return;
    }
    for (const OrderIdeal& ideal : ideals[static_cast<std::size_t>(a - 1)]) {
      if (!is_subset(inner, ideal.members)) continue;
      current.ideals[static_cast<std::size_t>(a - 1)] = ideal.members;
      self(self, a - 1, ideal.members);
    }
  };
  descend(descend, levels, 0);

  std::sort(out.begin(), out.end(), [](const IdealChain& x, const IdealChain& y) {
    for (std::size_t k = 0; k < x.ideals.size(); ++k)
      if (x.ideals[k] != y.ideals[k]) return canonical_less(x.ideals[k], y.ideals[k]);
    return false;
  });
  return out;
}

/// u_I = prod_a ( prod_{p_i in I_a} X_{a,i} * prod_{p_i notin I_a} X_{a+1,i} ).
inline Monomial chain_monomial(const RelationFamily& f, const IdealChain& c) {
  if (!is_valid_chain(f, c)) fail(ErrorCode::Chain, "tuple is not a nested chain of order ideals");
  const Grid g = grid_of(f);
  const Mask ground = low_bits(f.n());
  Mask support = 0;
  for (int a = 1; a <= f.r() - 1; ++a) {
    const Mask ia = c.at(a, f.n());
    support |= ia << ((a - 1) * g.n);
    support |= (ground & ~ia) << (a * g.n);
  }
  return Monomial(support);
}

/// Generators u_I in the order of `chains`.
inline std::vector<Monomial> chain_monomials(const RelationFamily& f, std::span<const IdealChain> chains) {
  std::vector<Monomial> out;
  out.reserve(chains.size());
  for (const IdealChain& c : chains) out.push_back(chain_monomial(f, c));
  return out;
}

/// H_r of the family. Throws E_INTERNAL if two chains share a monomial or some
/// u_I is not a minimal generator.
inline MonomialIdeal build_hr(const RelationFamily& f) {
  const auto chains = enumerate_chains(f);
  auto gens = chain_monomials(f, chains);
  MonomialIdeal ideal = minimalize(grid_of(f), gens);
  if (ideal.size() != chains.size())
    fail(ErrorCode::Internal, "u_I is not injective or not minimal: " + std::to_string(chains.size()) + " chains, " +
                                  std::to_string(ideal.size()) + " minimal generators");
  return ideal;
}

enum class Comparison { Less, Greater, Equal, Incomparable };

/// Componentwise inclusion J_a ⊆ I_a for all a.
inline Comparison chain_compare(const IdealChain& j, const IdealChain& i) {
  bool le = true;
  bool ge = true;
  for (std::size_t k = 0; k < j.ideals.size(); ++k) {
    le = le && is_subset(j.ideals[k], i.ideals[k]);
    ge = ge && is_subset(i.ideals[k], j.ideals[k]);
  }
  if (le && ge) return Comparison::Equal;
  if (le) return Comparison::Less;
  if (ge) return Comparison::Greater;
  return Comparison::Incomparable;
}

/// A total order on a list of chains, given as a permutation of its indices.
struct ChainOrder {
  std::vector<std::size_t> order;
};

inline bool is_linear_extension(std::span<const IdealChain> chains, const ChainOrder& ord) {
  if (ord.order.size() != chains.size()) return false;
  std::vector<std::size_t> pos(chains.size(), chains.size());
  for (std::size_t k = 0; k < ord.order.size(); ++k) {
    if (ord.order[k] >= chains.size() || pos[ord.order[k]] != chains.size()) return false;
    pos[ord.order[k]] = k;
  }
  for (std::size_t x = 0; x < chains.size(); ++x)
    for (std::size_t y = 0; y < chains.size(); ++y)
      if (chain_compare(chains[x], chains[y]) == Comparison::Less && pos[x] > pos[y]) return false;
  return true;
}

/// Canonical linear extension of ≺: by total cardinality sum_a |I_a|, then
/// lexicographically on the tuple of bitmasks. A strict componentwise
/// inclusion strictly raises the cardinality sum, so this sort respects ≺.
inline ChainOrder linear_extension(std::span<const IdealChain> chains) {
  ChainOrder out;
  out.order.resize(chains.size());
  std::iota(out.order.begin(), out.order.end(), std::size_t{0});
  std::stable_sort(out.order.begin(), out.order.end(), [&](std::size_t x, std::size_t y) {
    const int sx = chains[x].total_size();
    const int sy = chains[y].total_size();
    if (sx != sy) return sx < sy;
    return chains[x].ideals < chains[y].ideals;
  });
  return out;
}

/// Uniformly picks among the currently minimal chains at every step (Kahn's algorithm).
template <typename Rng>
ChainOrder random_linear_extension(std::span<const IdealChain> chains, Rng& rng) {
  const std::size_t m = chains.size();
  std::vector<std::vector<std::size_t>> above(m);
  std::vector<int> pending(m, 0);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      if (chain_compare(chains[x], chains[y]) == Comparison::Less) {
        above[x].push_back(y);
        ++pending[y];
      }
  std::vector<std::size_t> ready;
  for (std::size_t x = 0; x < m; ++x)
    if (pending[x] == 0) ready.push_back(x);
  ChainOrder out;
  while (!ready.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, ready.size() - 1);
    const std::size_t k = pick(rng);
    const std::size_t x = ready[k];
    ready[k] = ready.back();
    ready.pop_back();
    out.order.push_back(x);
    for (std::size_t y : above[x])
      if (--pending[y] == 0) ready.push_back(y);
  }
  return out;
}

template <typename T>
std::vector<T> permute(std::span<const T> items, const ChainOrder& ord) {
  std::vector<T> out;
  out.reserve(ord.order.size());
  for (std::size_t k : ord.order) out.push_back(items[k]);
  return out;
}

/// Result of a linear-quotients check. On failure (j, i) are 1-based
/// positions, j < i, of the first pair with no admissible variable.
struct LinearQuotientsVerdict {
  bool passed = true;
  std::size_t j = 0;
  std::size_t i = 0;
};

namespace detail {

/// Variables X_l with u_k / gcd(u_k, u) = X_l for some earlier u_k.
inline Mask linear_colon_variables(std::span<const Monomial> earlier, Monomial u) {
  Mask vars = 0;
  for (Monomial k : earlier) {
    const Mask q = quotient_generator(k, u).support();
    if (popcount(q) == 1) vars |= q;
  }
  return vars;
}

}  // namespace detail

/// For every i and j < i, some k < i has u_k / gcd(u_k, u_i) = X_l with X_l
/// dividing u_j / gcd(u_j, u_i). Requires equigenerated input (E_DEGREE).
inline LinearQuotientsVerdict check_linear_quotients(std::span<const Monomial> gens) {
  if (!is_equigenerated(gens)) fail(ErrorCode::Degree, "generators are not all of one degree");
  for (std::size_t i = 1; i < gens.size(); ++i) {
    const auto earlier = gens.first(i);
    const Mask vars = detail::linear_colon_variables(earlier, gens[i]);
    for (std::size_t j = 0; j < i; ++j)
      if ((quotient_generator(gens[j], gens[i]).support() & vars) == 0) return {false, j + 1, i + 1};
  }
  return {};
}

inline constexpr std::size_t kDefaultStateBudget = std::size_t{1} << 22;

/// Searches for a generator order with linear quotients. Whether a generator
/// may be appended depends only on the set already placed, so the search
/// memoizes dead sets. Returns nullopt when none exists; throws E_BUDGET past
/// `max_states` visited sets.
inline std::optional<std::vector<Monomial>> find_linear_quotients_order(const MonomialIdeal& ideal,
                                                                        std::size_t max_states = kDefaultStateBudget) {
  const auto& gens = ideal.generators();
  if (!is_equigenerated(gens)) fail(ErrorCode::Degree, "generators are not all of one degree");
  const std::size_t m = gens.size();
  if (m <= 1) return gens;

  using Key = std::vector<std::uint64_t>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::size_t h = 0xcbf29ce484222325ULL;
      for (auto w : k) h = (h ^ w) * 0x100000001b3ULL;
      return h;
    }
  };
  std::unordered_set<Key, KeyHash> dead;
  Key placed((m + 63) / 64, 0);
  std::vector<Monomial> order;
  std::size_t states = 0;

  auto admissible = [&](Monomial u) {
    const Mask vars = detail::linear_colon_variables(order, u);
    return std::all_of(order.begin(), order.end(),
                       [&](Monomial v) { return (quotient_generator(v, u).support() & vars) != 0; });
  };

  auto search = [&](auto&& self) -> bool {
    if (order.size() == m) return true;
    if (dead.contains(placed)) return false;
    if (++states > max_states) fail(ErrorCode::Budget, "linear-quotients search exceeded " + std::to_string(max_states) + " states");
    for (std::size_t g = 0; g < m; ++g) {
      if ((placed[g / 64] >> (g % 64)) & 1U) continue;
      if (!admissible(gens[g])) continue;
      placed[g / 64] |= std::uint64_t{1} << (g % 64);
      order.push_back(gens[g]);
      if (self(self)) return true;
      order.pop_back();
      placed[g / 64] &= ~(std::uint64_t{1} << (g % 64));
    }
    dead.insert(placed);
    return false;
  };
  if (search(search)) return order;
  return std::nullopt;
}

/// gamma^F: gamma_r = empty and, descending a = r..2, gamma_{a-1} is the
/// order ideal of level a-1 generated by {p_i : X_{a,i} in F} ∪ gamma_a.
inline IdealChain gamma_chain(const RelationFamily& f, Mask fset) {
  const Grid g = grid_of(f);
  IdealChain out{std::vector<Mask>(static_cast<std::size_t>(f.r() - 1), 0)};
  Mask inner = 0;
  for (int a = f.r(); a >= 2; --a) {
    const Mask row = (fset >> ((a - 1) * g.n)) & low_bits(g.n);
    inner = f.level(a - 1).down_closure(row | inner);
    out.ideals[static_cast<std::size_t>(a - 2)] = inner;
  }
  return out;
}

/// For p_i in gamma_a: a p_j with X_{b,j} in F, a+1 <= b <= r, reached by the
/// chain p_i <=_a path[0] <=_{a+1} ... <=_{b-1} p_j (path ends with j).
struct GammaWitness {
  int b = 0;
  int j = 0;
  std::vector<int> path;
};

/// Constructive search: climb to a maximal element of gamma_a above p_i; it is
/// either a generator from F at level a+1 or lies in gamma_{a+1}, where the
/// climb repeats. Indices are 0-based, levels 1-based.
inline std::optional<GammaWitness> gamma_witness(const RelationFamily& f, Mask fset, int a, int i) {
  const Grid g = grid_of(f);
  const IdealChain gamma = gamma_chain(f, fset);
  if (a < 1 || a > f.r() - 1 || !contains(gamma.at(a, f.n()), i)) return std::nullopt;
  GammaWitness w;
  int cur = i;
  for (int level = a; level <= f.r() - 1; ++level) {
    const Mask above = f.level(level).relation().successors(cur) & gamma.at(level, f.n());
    // Index-monotone: the largest index above p_cur has nothing strictly above it.
    const int top = kMaxBits - 1 - std::countl_zero(above);
    w.path.push_back(top);
    if (contains(fset, slot(g, {level + 1, top + 1}))) {
      w.b = level + 1;
      w.j = top;
      return w;
    }
    if (!contains(gamma.at(level + 1, f.n()), top)) return std::nullopt;
    cur = top;
  }
  return std::nullopt;
}

}  // namespace cmg

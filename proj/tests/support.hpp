#pragma once

// Shared fixtures and brute-force oracles for the test suites. The oracles
// walk definitions directly and never call the routines they check.

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "cmgraph/duality.hpp"
#include "cmgraph/graphs.hpp"
#include "cmgraph/hr.hpp"
#include "cmgraph/monomials.hpp"
#include "cmgraph/posets.hpp"

namespace cmg::testing {

/// The two-level family on {p1,p2,p3}: p2 <=_1 p3 and p1 <=_2 p2.
inline RelationFamily example_family() {
  return RelationFamily(3, {close_relation(3, {{2, 3}}), close_relation(3, {{1, 2}})});
}

inline Mask set_of(std::initializer_list<int> one_based) {
  Mask m = 0;
  for (int i : one_based) m |= bit(i - 1);
  return m;
}

/// Every subset that is downward closed, checked pair by pair.
inline std::set<Mask> brute_order_ideals(const Poset& p) {
  std::set<Mask> out;
  const int n = p.size();
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    bool closed = true;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (contains(s, x) && p.leq(y, x) && !contains(s, y)) closed = false;
    if (closed) out.insert(s);
  }
  return out;
}

/// p_i <=_[a,b] p_j by enumerating every index sequence (t_1..t_k), k = b-a.
inline bool brute_composite(std::span<const Relation> levels, int a, int b, int i, int j) {
  const int n = levels[0].size();
  const int k = b - a;
  std::vector<int> t(static_cast<std::size_t>(k), 0);
  while (true) {
    bool ok = true;
    for (int s = 1; s < k; ++s) ok = ok && t[s - 1] <= t[s];
    int prev = i;
    for (int s = 0; s < k && ok; ++s) {
      ok = levels[a - 1 + s].holds(prev, t[s]);
      prev = t[s];
    }
    if (ok && levels[b - 1].holds(prev, j)) return true;
    int pos = 0;
    while (pos < k && ++t[pos] == n) t[pos++] = 0;
    if (pos == k) return false;
  }
}

/// Chains by brute force over the full product J(P_1) x ... x J(P_{r-1}).
inline std::set<std::vector<Mask>> brute_chains(const RelationFamily& f) {
  std::vector<std::vector<Mask>> per_level;
  for (const Poset& p : f.levels()) {
    const std::set<Mask> ideals = brute_order_ideals(p);
    per_level.emplace_back(ideals.begin(), ideals.end());
  }
  std::set<std::vector<Mask>> out;
  std::vector<Mask> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t level) {
    if (level == per_level.size()) {
      for (std::size_t a = 1; a < cur.size(); ++a)
        if (!is_subset(cur[a], cur[a - 1])) return;
      out.insert(cur);
      return;
    }
    for (Mask m : per_level[level]) {
      cur.push_back(m);
      rec(level + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

inline std::set<Mask> supports(const MonomialIdeal& ideal) {
  std::set<Mask> out;
  for (Monomial u : ideal.generators()) out.insert(u.support());
  return out;
}

inline std::vector<std::string> render(const Grid& g, std::span<const Monomial> gens) {
  std::vector<std::string> out;
  for (Monomial u : gens) out.push_back(to_string(g, u));
  return out;
}

/// Δ^∨ straight from the definition: complements of all nonfaces, maximalized.
inline SimplicialComplex definitional_dual(const SimplicialComplex& c) {
  std::vector<Mask> faces;
  for (Mask m = 0; m < (Mask{1} << c.vertex_count()); ++m)
    if (!c.has_face(m)) faces.push_back(c.universe() & ~m);
  return SimplicialComplex::from_faces(c.vertex_count(), faces);
}

}  // namespace cmg::testing

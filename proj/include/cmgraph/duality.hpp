#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "cmgraph/bits.hpp"
#include "cmgraph/hr.hpp"
#include "cmgraph/monomials.hpp"
#include "cmgraph/posets.hpp"

namespace cmg {

/// Subset-table algorithms allocate 2^V bytes; V above this is rejected with E_SIZE.
inline constexpr int kDefaultVertexBudget = 24;

/// A simplicial complex on vertices {0, ..., vertex_count-1}, held by its facets.
///
/// Two degenerate complexes are kept distinct: the void complex (no faces at
/// all, no facets) and the complex {∅} (a single empty facet).
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  static SimplicialComplex from_faces(int vertex_count, std::vector<Mask> faces) {
    if (vertex_count < 0 || vertex_count > kMaxBits) fail(ErrorCode::Range, "vertex count outside [0,64]");
    for (Mask f : faces)
      if ((f & ~low_bits(vertex_count)) != 0) fail(ErrorCode::Range, "face uses a vertex outside the universe");
    SimplicialComplex c;
    c.vertex_count_ = vertex_count;
    c.facets_ = maximal_sets(std::move(faces));
    std::sort(c.facets_.begin(), c.facets_.end(), [](Mask x, Mask y) {
      return popcount(x) != popcount(y) ? popcount(x) < popcount(y) : lex_less(x, y);
    });
    return c;
  }

  static SimplicialComplex void_complex(int vertex_count) { return from_faces(vertex_count, {}); }
  static SimplicialComplex simplex(int vertex_count) { return from_faces(vertex_count, {low_bits(vertex_count)}); }

  int vertex_count() const { return vertex_count_; }
  Mask universe() const { return low_bits(vertex_count_); }
  const std::vector<Mask>& facets() const { return facets_; }

  bool is_void() const { return facets_.empty(); }

  bool has_face(Mask f) const {
    return std::any_of(facets_.begin(), facets_.end(), [&](Mask g) { return is_subset(f, g); });
  }

  /// Largest facet size minus one; -1 for {∅}. Undefined (returns -2) for the void complex.
  int dimension() const {
    int d = -2;
    for (Mask f : facets_) d = std::max(d, popcount(f) - 1);
    return d;
  }

  /// Vertices that occur in some face.
  Mask used_vertices() const {
    Mask m = 0;
    for (Mask f : facets_) m |= f;
    return m;
  }

  bool operator==(const SimplicialComplex&) const = default;

 private:
  int vertex_count_ = 0;
  std::vector<Mask> facets_;
};

namespace detail {

inline void check_vertex_budget(int vertex_count, int budget) {
  if (vertex_count > budget)
    fail(ErrorCode::Size, std::to_string(vertex_count) + " vertices exceed the subset-table budget of " +
                              std::to_string(budget));
}

/// is_face[mask] for every subset of the universe.
inline std::vector<char> face_table(const SimplicialComplex& c) {
  const int v = c.vertex_count();
  std::vector<char> face(std::size_t{1} << v, 0);
  for (Mask f : c.facets()) face[f] = 1;
  for (int k = 0; k < v; ++k)
    for (Mask m = 0; m < (Mask{1} << v); ++m)
      if (!contains(m, k) && face[m | bit(k)]) face[m] = 1;
  return face;
}

}  // namespace detail

/// The complex whose minimal nonfaces are the generator supports of `ideal`,
/// on the universe of its grid.
inline SimplicialComplex complex_of_ideal(const MonomialIdeal& ideal, int budget = kDefaultVertexBudget) {
  if (ideal.is_unit()) fail(ErrorCode::Unit, "the unit ideal has no Stanley-Reisner complex");
  const int v = ideal.grid().vertex_count();
  detail::check_vertex_budget(v, budget);
  const Mask top = Mask{1} << v;
  std::vector<char> nonface(top, 0);
  for (Monomial g : ideal.generators()) nonface[g.support()] = 1;
  for (int k = 0; k < v; ++k)
    for (Mask m = 0; m < top; ++m)
      if (contains(m, k) && nonface[m & ~bit(k)]) nonface[m] = 1;
  std::vector<Mask> facets;
  for (Mask m = 0; m < top; ++m) {
    if (nonface[m]) continue;
    bool maximal = true;
    for (int k = 0; k < v && maximal; ++k)
      if (!contains(m, k) && !nonface[m | bit(k)]) maximal = false;
    if (maximal) facets.push_back(m);
  }
  return SimplicialComplex::from_faces(v, std::move(facets));
}

/// Inclusion-minimal subsets of the universe that are not faces.
inline std::vector<Mask> minimal_nonfaces(const SimplicialComplex& c, int budget = kDefaultVertexBudget) {
  const int v = c.vertex_count();
  detail::check_vertex_budget(v, budget);
  const auto face = detail::face_table(c);
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask{1} << v); ++m) {
    if (face[m]) continue;
    bool minimal = true;
    for_each_bit(m, [&](int k) { minimal = minimal && face[m & ~bit(k)]; });
    if (minimal) out.push_back(m);
  }
  return out;
}

/// Stanley-Reisner ideal I_Δ over a grid whose vertex count matches the complex.
inline MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& c, const Grid& g, int budget = kDefaultVertexBudget) {
  if (g.vertex_count() != c.vertex_count()) fail(ErrorCode::Range, "grid and complex universes differ");
  std::vector<Monomial> gens;
  for (Mask m : minimal_nonfaces(c, budget)) gens.emplace_back(m);
  return minimalize(g, std::move(gens));
}

/// Δ^∨ = { V \ F : F a nonface of Δ }; its facets are the complements of the
/// minimal nonfaces of Δ. The full simplex dualizes to the void complex.
inline SimplicialComplex alexander_dual_complex(const SimplicialComplex& c, int budget = kDefaultVertexBudget) {
  std::vector<Mask> facets;
  for (Mask m : minimal_nonfaces(c, budget)) facets.push_back(c.universe() & ~m);
  return SimplicialComplex::from_faces(c.vertex_count(), std::move(facets));
}

/// Alexander dual of a squarefree ideal over the universe `g`, by the
/// complement-of-facets rule: one generator prod_{v notin F} v per facet F of
/// the complex of `ideal`. The unit ideal and the zero ideal swap.
inline MonomialIdeal dual_ideal_bruteforce(const MonomialIdeal& ideal, const Grid& g, int budget = kDefaultVertexBudget) {
  if (!(ideal.grid() == g)) fail(ErrorCode::Range, "ideal grid differs from the requested universe");
  if (ideal.is_unit()) return minimalize(g, {});
  const SimplicialComplex c = complex_of_ideal(ideal, budget);
  std::vector<Monomial> gens;
  for (Mask f : c.facets()) gens.emplace_back(g.all() & ~f);
  return minimalize(g, std::move(gens));
}

/// Closed form of the dual of H_r: generated by X_{s,i} X_{t,j} for s < t and
/// p_i <=_[s,t-1] p_j.
inline MonomialIdeal dual_hr_fast(const RelationFamily& f) {
  const Grid g = grid_of(f);
  const auto rels = f.relations();
  std::vector<Monomial> gens;
  for (int s = 1; s <= f.r(); ++s) {
    for (int t = s + 1; t <= f.r(); ++t) {
      const Relation comp = compose_levels(rels, s, t - 1);
      for (auto [i, j] : comp.pairs())
        gens.emplace_back(bit(slot(g, {s, i + 1})) | bit(slot(g, {t, j + 1})));
    }
  }
  return minimalize(g, std::move(gens));
}

}  // namespace cmg

#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cmgraph/bits.hpp"
#include "cmgraph/error.hpp"

// Finite partial orders on {p_1, ..., p_n}. Elements are 0-based internally;
// the 1-based convention only appears at the text boundaries (pair input,
// printing).

namespace cmg {

/// Boolean n x n relation stored as successor rows: row i holds {j : i R j}.
class Relation {
 public:
  Relation() = default;
  explicit Relation(int n) : n_(n), rows_(static_cast<std::size_t>(n), 0) {
    if (n < 0 || n > kMaxBits) fail(ErrorCode::Range, "relation size " + std::to_string(n) + " outside [0,64]");
  }

  static Relation identity(int n) {
    Relation r(n);
    for (int i = 0; i < n; ++i) r.set(i, i);
    return r;
  }

  int size() const { return n_; }
  bool holds(int i, int j) const { return contains(rows_[i], j); }
  void set(int i, int j) { rows_[i] |= bit(j); }
  Mask successors(int i) const { return rows_[i]; }

  Mask predecessors(int j) const {
    Mask out = 0;
    for (int i = 0; i < n_; ++i)
      if (holds(i, j)) out |= bit(i);
    return out;
  }

  /// Pairs (i,j) of the relation, 0-based, row-major.
  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i) for_each_bit(rows_[i], [&](int j) { out.emplace_back(i, j); });
    return out;
  }

  /// True when every pair of this relation is also in `other`.
  bool is_contained_in(const Relation& other) const {
    if (other.n_ != n_) return false;
    for (int i = 0; i < n_; ++i)
      if (!is_subset(rows_[i], other.rows_[i])) return false;
    return true;
  }

  bool operator==(const Relation&) const = default;

 private:
  int n_ = 0;
  std::vector<Mask> rows_;
};

inline bool is_reflexive(const Relation& r) {
  for (int i = 0; i < r.size(); ++i)
    if (!r.holds(i, i)) return false;
  return true;
}

inline bool is_antisymmetric(const Relation& r) {
  for (int i = 0; i < r.size(); ++i)
    for (int j = i + 1; j < r.size(); ++j)
      if (r.holds(i, j) && r.holds(j, i)) return false;
  return true;
}

inline bool is_index_monotone(const Relation& r) {
  for (int i = 0; i < r.size(); ++i)
    if (!is_subset(r.successors(i), ~low_bits(i))) return false;
  return true;
}

/// First triple (i,j,k), 0-based, with i R j, j R k and not i R k.
inline std::optional<std::tuple<int, int, int>> transitivity_violation(const Relation& r) {
  for (int i = 0; i < r.size(); ++i) {
    for (int j : bits_of(r.successors(i))) {
      const Mask missing = r.successors(j) & ~r.successors(i);
      if (missing != 0) return std::tuple{i, j, std::countr_zero(missing)};
    }
  }
  return std::nullopt;
}

inline bool is_transitive(const Relation& r) { return !transitivity_violation(r).has_value(); }

/// A partial order that is index-monotone: p_i <= p_j implies i <= j.
class Poset {
 public:
  /// Validates all four invariants; throws E_NOT_POSET or E_INDEX_ORDER.
  explicit Poset(Relation rel) : rel_(std::move(rel)) {
    if (rel_.size() == 0) fail(ErrorCode::Range, "poset ground set must be nonempty");
    if (!is_index_monotone(rel_)) fail(ErrorCode::IndexOrder, "relation is not index-monotone");
    if (!is_reflexive(rel_)) fail(ErrorCode::NotPoset, "relation is not reflexive");
    if (!is_antisymmetric(rel_)) fail(ErrorCode::NotPoset, "relation is not antisymmetric");
    if (!is_transitive(rel_)) fail(ErrorCode::NotPoset, "relation is not transitive");
  }

  static Poset antichain(int n) { return Poset(Relation::identity(n)); }

  static Poset chain(int n) {
    Relation r(n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) r.set(i, j);
    return Poset(std::move(r));
  }

  int size() const { return rel_.size(); }
  bool leq(int i, int j) const { return rel_.holds(i, j); }
  const Relation& relation() const { return rel_; }

  /// Smallest order ideal containing `generators`.
  Mask down_closure(Mask generators) const {
    Mask out = generators;
    for_each_bit(generators, [&](int j) { out |= down_[j]; });
    return out;
  }

  Mask below(int j) const { return down_[j]; }

  bool operator==(const Poset& other) const { return rel_ == other.rel_; }

 private:
  Relation rel_;
  std::vector<Mask> down_ = build_down(rel_);

  static std::vector<Mask> build_down(const Relation& r) {
    std::vector<Mask> d(static_cast<std::size_t>(r.size()), 0);
    for (int j = 0; j < r.size(); ++j) d[j] = r.predecessors(j);
    return d;
  }
};

/// Reflexive-transitive closure of 1-based generating pairs (i,j), i.e. p_i <= p_j.
inline Poset close_relation(int n, std::span<const std::pair<int, int>> pairs) {
  if (n < 1 || n > kMaxBits) fail(ErrorCode::Range, "n = " + std::to_string(n) + " outside [1,64]");
  Relation r = Relation::identity(n);
  for (auto [i, j] : pairs) {
    if (i < 1 || j < 1 || i > n || j > n)
      fail(ErrorCode::Range, "pair (" + std::to_string(i) + "," + std::to_string(j) + ") outside [1," + std::to_string(n) + "]");
    if (i > j) fail(ErrorCode::IndexOrder, "pair (" + std::to_string(i) + "," + std::to_string(j) + ") has i > j");
    r.set(i - 1, j - 1);
  }
  // Index-monotone input: processing rows from the top index down closes in one pass.
  for (int i = n - 1; i >= 0; --i) {
    Mask row = r.successors(i);
    for_each_bit(row & ~bit(i), [&](int j) { row |= r.successors(j); });
    for_each_bit(row, [&](int j) { r.set(i, j); });
  }
  return Poset(std::move(r));
}

inline Poset close_relation(int n, std::initializer_list<std::pair<int, int>> pairs) {
  return close_relation(n, std::span<const std::pair<int, int>>(pairs.begin(), pairs.size()));
}

struct OrderIdeal {
  Mask members = 0;

  int size() const { return popcount(members); }
  bool contains(int i) const { return cmg::contains(members, i); }

  bool operator==(const OrderIdeal&) const = default;
};

/// Canonical ideal order: cardinality, then numeric bitmask value.
inline bool canonical_less(Mask a, Mask b) {
  return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
}

inline bool is_order_ideal(const Poset& p, Mask s) { return p.down_closure(s) == s; }

/// All order ideals of `p` including the empty set and the whole ground set,
/// sorted by cardinality and then by bitmask value.
inline std::vector<OrderIdeal> order_ideals(const Poset& p) {
  std::vector<OrderIdeal> out;
  const int n = p.size();
  // Predecessors of p_i all have smaller index, so deciding elements in index
  // order only ever tests already-decided elements.
  auto extend = [&](auto&& self, int i, Mask current) -> void {
    if (i == n) {
      out.push_back({current});
      return;
    }
    self(self, i + 1, current);
    if (is_subset(p.below(i) & ~bit(i), current)) self(self, i + 1, current | bit(i));
  };
  extend(extend, 0, 0);
  std::sort(out.begin(), out.end(), [](OrderIdeal x, OrderIdeal y) { return canonical_less(x.members, y.members); });
  return out;
}

/// The family {<=_a : a in [r-1]} of index-monotone partial orders on one ground set.
class RelationFamily {
 public:
  RelationFamily(int n, std::vector<Poset> levels) : n_(n), levels_(std::move(levels)) {
    if (n < 1 || n > kMaxBits) fail(ErrorCode::Range, "n = " + std::to_string(n) + " outside [1,64]");
    if (levels_.empty()) fail(ErrorCode::Range, "a family needs r >= 2, i.e. at least one level");
    for (const Poset& p : levels_)
      if (p.size() != n) fail(ErrorCode::Range, "level size differs from n");
  }

  static RelationFamily identity(int n, int r) {
    if (r < 2) fail(ErrorCode::Range, "r must be at least 2");
    return RelationFamily(n, std::vector<Poset>(static_cast<std::size_t>(r - 1), Poset::antichain(n)));
  }

  int n() const { return n_; }
  int r() const { return static_cast<int>(levels_.size()) + 1; }

  /// Level a in [1, r-1].
  const Poset& level(int a) const { return levels_.at(static_cast<std::size_t>(a - 1)); }
  std::span<const Poset> levels() const { return levels_; }

  std::vector<Relation> relations() const {
    std::vector<Relation> out;
    out.reserve(levels_.size());
    for (const Poset& p : levels_) out.push_back(p.relation());
    return out;
  }

  bool operator==(const RelationFamily&) const = default;

 private:
  int n_;
  std::vector<Poset> levels_;
};

/// The relation <=_[a,b]: p_i <=_[a,b] p_j when a chain
/// p_i <=_a p_{t_1} <=_{a+1} ... <=_{b-1} p_{t_k} <=_b p_j exists with
/// t_1 <= ... <= t_k.
struct CompositeRelation {
  int a = 1;
  int b = 1;
  Relation rel;
};

inline void check_level_range(int levels, int a, int b) {
  if (a < 1 || a > b || b > levels)
    fail(ErrorCode::Level, "level range [" + std::to_string(a) + "," + std::to_string(b) + "] invalid for r-1 = " +
                               std::to_string(levels));
}

/// Boolean composition R_a o R_{a+1} o ... o R_b over raw relations (1-based levels).
///
/// When every level is index-monotone, any witnessing chain already has
/// i <= t_1 <= ... <= t_k <= j, so the non-decreasing requirement on the
/// intermediate indices is implied and plain composition is exact. For
/// non-monotone input `composite_witness` checks the requirement explicitly.
inline Relation compose_levels(std::span<const Relation> levels, int a, int b) {
  check_level_range(static_cast<int>(levels.size()), a, b);
  const int n = levels[0].size();
  Relation out = levels[a - 1];
  for (int l = a + 1; l <= b; ++l) {
    const Relation& next = levels[l - 1];
    Relation step(n);
    for (int i = 0; i < n; ++i) {
      Mask row = 0;
      for_each_bit(out.successors(i), [&](int t) { row |= next.successors(t); });
      for_each_bit(row, [&](int j) { step.set(i, j); });
    }
    out = std::move(step);
  }
  return out;
}

inline CompositeRelation composite_relation(const RelationFamily& f, int a, int b) {
  const auto rels = f.relations();
  return {a, b, compose_levels(rels, a, b)};
}

/// Intermediate indices (t_1..t_k), k = b - a, non-decreasing, witnessing
/// p_i <=_[a,b] p_j through the raw level relations; nullopt if none exists.
inline std::optional<std::vector<int>> composite_witness(std::span<const Relation> levels, int a, int b, int i, int j) {
  check_level_range(static_cast<int>(levels.size()), a, b);
  const int n = levels[0].size();
  const int k = b - a;
  if (k == 0) {
    if (levels[a - 1].holds(i, j)) return std::vector<int>{};
    return std::nullopt;
  }
  // parent[s][t]: predecessor of t_{s+1} = t in layer s-1, or -2 if unreachable.
  std::vector<std::vector<int>> parent(static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(n), -2));
  for_each_bit(levels[a - 1].successors(i), [&](int t) { parent[0][t] = -1; });
  for (int s = 1; s < k; ++s) {
    const Relation& rel = levels[a - 1 + s];
    for (int t = 0; t < n; ++t) {
      if (parent[s - 1][t] == -2) continue;
      for_each_bit(rel.successors(t) & ~low_bits(t), [&](int u) {
        if (parent[s][u] == -2) parent[s][u] = t;
      });
    }
  }
  const Relation& last = levels[b - 1];
  for (int t = 0; t < n; ++t) {
    if (parent[k - 1][t] == -2 || !last.holds(t, j)) continue;
    std::vector<int> seq(static_cast<std::size_t>(k));
    int cur = t;
    for (int s = k - 1; s >= 0; --s) {
      seq[s] = cur;
      cur = parent[s][cur];
    }
    return seq;
  }
  return std::nullopt;
}

}  // namespace cmg

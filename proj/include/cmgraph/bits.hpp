#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace cmg {

/// Subset of a ground set of at most 64 elements, bit k standing for element k.
using Mask = std::uint64_t;

inline constexpr int kMaxBits = 64;

constexpr Mask bit(int k) { return Mask{1} << k; }

constexpr Mask low_bits(int k) { return k >= kMaxBits ? ~Mask{0} : bit(k) - 1; }

constexpr int popcount(Mask m) { return std::popcount(m); }

constexpr bool contains(Mask m, int k) { return (m >> k) & 1U; }

constexpr bool is_subset(Mask sub, Mask super) { return (sub & ~super) == 0; }

/// Calls f(k) for every set bit k in ascending order.
template <typename F>
void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    const int k = std::countr_zero(m);
    f(k);
    m &= m - 1;
  }
}

inline std::vector<int> bits_of(Mask m) {
  std::vector<int> out;
  out.reserve(popcount(m));
  for_each_bit(m, [&](int k) { out.push_back(k); });
  return out;
}

/// Lexicographic comparison of the ascending element sequences of two masks.
/// Returns true when the sequence of `a` precedes that of `b`.
inline bool lex_less(Mask a, Mask b) {
  while (a != 0 && b != 0) {
    const int x = std::countr_zero(a);
    const int y = std::countr_zero(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

/// Keeps the inclusion-maximal masks, sorted by descending size then ascending value.
inline std::vector<Mask> maximal_sets(std::vector<Mask> sets) {
  std::sort(sets.begin(), sets.end(), [](Mask x, Mask y) {
    return popcount(x) != popcount(y) ? popcount(x) > popcount(y) : x < y;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Mask> out;
  for (Mask s : sets) {
    bool covered = false;
    for (Mask t : out) {
      if (is_subset(s, t)) {
        covered = true;
        break;
      }
    }
    if (!covered) out.push_back(s);
  }
  return out;
}

}  // namespace cmg

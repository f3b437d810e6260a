#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cmgraph/bits.hpp"
#include "cmgraph/duality.hpp"
#include "cmgraph/error.hpp"

// Reduced simplicial homology over a field, and the Reisner criterion:
// Δ is Cohen-Macaulay over k iff every link has vanishing reduced homology
// below its own dimension. All arithmetic is exact.

namespace cmg {

struct FieldChoice {
  enum class Kind { GF2, GFp, Rational };

  Kind kind = Kind::GF2;
  std::uint32_t p = 2;

  static FieldChoice gf2() { return {}; }
  static FieldChoice rational() { return {Kind::Rational, 0}; }

  static FieldChoice gfp(std::uint32_t p) {
    if (p < 2 || p > 65521) fail(ErrorCode::Range, "field characteristic must be a prime in [2,65521]");
    for (std::uint32_t d = 2; d * d <= p; ++d)
      if (p % d == 0) fail(ErrorCode::Range, std::to_string(p) + " is not prime");
    if (p == 2) return gf2();
    return {Kind::GFp, p};
  }

  std::string name() const {
    switch (kind) {
      case Kind::GF2: return "gf2";
      case Kind::GFp: return "gfp:" + std::to_string(p);
      case Kind::Rational: return "rational";
    }
    return "?";
  }

  bool operator==(const FieldChoice&) const = default;
};

/// Reduced Betti numbers in dimensions -1 .. dim Δ.
struct HomologyProfile {
  std::vector<long long> ranks;  // ranks[d + 1]

  int top_dimension() const { return static_cast<int>(ranks.size()) - 2; }
  long long rank(int d) const {
    if (d < -1 || d > top_dimension()) return 0;
    return ranks[static_cast<std::size_t>(d + 1)];
  }
  bool operator==(const HomologyProfile&) const = default;
};

inline constexpr std::size_t kDefaultFaceBudget = std::size_t{1} << 20;

/// Faces grouped by cardinality: out[k] lists the faces with k vertices in ascending mask order.
inline std::vector<std::vector<Mask>> faces_by_size(const SimplicialComplex& c, std::size_t max_faces = kDefaultFaceBudget) {
  std::unordered_set<Mask> seen;
  for (Mask f : c.facets()) {
    if (seen.contains(f)) continue;
    // All submasks of f, f itself included, down to the empty set.
    for (Mask s = f;; s = (s - 1) & f) {
      if (seen.insert(s).second && seen.size() > max_faces)
        fail(ErrorCode::Size, "complex has more than " + std::to_string(max_faces) + " faces");
      if (s == 0) break;
    }
  }
  std::vector<std::vector<Mask>> out(static_cast<std::size_t>(std::max(c.dimension() + 2, 0)));
  for (Mask f : seen) out[static_cast<std::size_t>(popcount(f))].push_back(f);
  for (auto& layer : out) std::sort(layer.begin(), layer.end());
  return out;
}

/// Reduced Euler characteristic from the facet list alone: by inclusion-exclusion
/// over facet subsets S, only those with empty intersection contribute, each
/// with sign (-1)^|S|. Once an intersection is empty, all further extensions
/// cancel unless none remain. Falls back to face counts past 16 facets.
inline long long reduced_euler_characteristic(const SimplicialComplex& c, std::size_t max_faces = kDefaultFaceBudget) {
  const auto& facets = c.facets();
  const std::size_t m = facets.size();
  if (m <= 16) {
    long long chi = 0;
    auto walk = [&](auto&& self, std::size_t next, Mask meet, int count) -> void {
      for (std::size_t k = next; k < m; ++k) {
        const Mask cut = count == 0 ? facets[k] : (meet & facets[k]);
        if (cut != 0) {
          self(self, k + 1, cut, count + 1);
        } else if (k + 1 == m) {
          chi += ((count + 1) % 2 == 0) ? 1 : -1;
        }
      }
    };
    walk(walk, 0, 0, 0);
    return chi;
  }
  const auto layers = faces_by_size(c, max_faces);
  long long chi = 0;
  for (std::size_t k = 0; k < layers.size(); ++k) chi += ((k % 2 == 1) ? 1 : -1) * static_cast<long long>(layers[k].size());
  return chi;
}

namespace detail {

/// Rank over GF(2); columns are bitsets over the rows.
inline std::size_t rank_gf2(std::vector<std::vector<std::uint64_t>> cols) {
  std::unordered_map<std::size_t, std::vector<std::uint64_t>> basis;  // pivot row -> vector
  for (auto& v : cols) {
    while (true) {
      std::size_t pivot = SIZE_MAX;
      for (std::size_t w = v.size(); w-- > 0;)
        if (v[w] != 0) {
          pivot = w * 64 + (63 - std::countl_zero(v[w]));
          break;
        }
      if (pivot == SIZE_MAX) break;
      auto it = basis.find(pivot);
      if (it == basis.end()) {
        basis.emplace(pivot, std::move(v));
        break;
      }
      for (std::size_t w = 0; w < v.size(); ++w) v[w] ^= it->second[w];
    }
  }
  return basis.size();
}

struct ModP {
  std::uint32_t p;
  using Value = std::uint32_t;
  Value from_int(int x) const { return static_cast<Value>(((x % static_cast<long long>(p)) + p) % p); }
  bool is_zero(Value x) const { return x == 0; }
  Value sub_mul(Value a, Value factor, Value b) const {  // a - factor*b
    const std::uint64_t prod = static_cast<std::uint64_t>(factor) * b % p;
    return static_cast<Value>((a + p - prod) % p);
  }
  Value div(Value a, Value b) const {  // a / b
    std::uint64_t inv = 1, base = b, e = p - 2;
    while (e > 0) {
      if (e & 1U) inv = inv * base % p;
      base = base * base % p;
      e >>= 1U;
    }
    return static_cast<Value>(static_cast<std::uint64_t>(a) * inv % p);
  }
};

struct Rationals {
  using Value = boost::multiprecision::cpp_rational;
  Value from_int(int x) const { return Value(x); }
  bool is_zero(const Value& x) const { return x == 0; }
  Value sub_mul(const Value& a, const Value& factor, const Value& b) const { return a - factor * b; }
  Value div(const Value& a, const Value& b) const { return a / b; }
};

/// Row-echelon rank over a field given as a dense row-major matrix.
template <typename Field>
std::size_t rank_dense(const Field& field, std::vector<std::vector<typename Field::Value>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && field.is_zero(a[pivot][col])) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t row = rank + 1; row < rows; ++row) {
      if (field.is_zero(a[row][col])) continue;
      const auto factor = field.div(a[row][col], a[rank][col]);
      for (std::size_t k = col; k < cols; ++k) a[row][k] = field.sub_mul(a[row][k], factor, a[rank][k]);
    }
    ++rank;
  }
  return rank;
}

/// Rank of the boundary map from faces of size k+1 to faces of size k.
inline std::size_t boundary_rank(const std::vector<Mask>& lower, const std::vector<Mask>& upper, const FieldChoice& field) {
  if (lower.empty() || upper.empty()) return 0;
  std::unordered_map<Mask, std::size_t> row_of;
  for (std::size_t r = 0; r < lower.size(); ++r) row_of.emplace(lower[r], r);

  if (field.kind == FieldChoice::Kind::GF2) {
    const std::size_t words = (lower.size() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> cols;
    cols.reserve(upper.size());
    for (Mask f : upper) {
      std::vector<std::uint64_t> v(words, 0);
      for_each_bit(f, [&](int x) {
        const std::size_t r = row_of.at(f & ~bit(x));
        v[r / 64] |= std::uint64_t{1} << (r % 64);
      });
      cols.push_back(std::move(v));
    }
    return rank_gf2(std::move(cols));
  }

  auto fill = [&](const auto& fld) {
    using Value = typename std::decay_t<decltype(fld)>::Value;
    std::vector<std::vector<Value>> a(upper.size(), std::vector<Value>(lower.size(), fld.from_int(0)));
    for (std::size_t c = 0; c < upper.size(); ++c) {
      int position = 0;
      for_each_bit(upper[c], [&](int x) {
        a[c][row_of.at(upper[c] & ~bit(x))] = fld.from_int(position % 2 == 0 ? 1 : -1);
        ++position;
      });
    }
    return rank_dense(fld, std::move(a));  // rank of the transpose
  };
  if (field.kind == FieldChoice::Kind::GFp) return fill(ModP{field.p});
  return fill(Rationals{});
}

}  // namespace detail

/// Reduced homology via boundary ranks, including the augmentation to the
/// empty face. Every result is checked against the reduced Euler
/// characteristic computed independently from the facets (E_INTERNAL on mismatch).
inline HomologyProfile reduced_homology(const SimplicialComplex& c, const FieldChoice& field = FieldChoice::gf2(),
                                        std::size_t max_faces = kDefaultFaceBudget) {
  if (c.is_void()) fail(ErrorCode::Range, "the void complex has no reduced homology");
  const auto layers = faces_by_size(c, max_faces);  // layers[k]: faces of dimension k-1
  const std::size_t top = layers.size();            // dimensions -1 .. top-2
  std::vector<std::size_t> boundary(top + 1, 0);    // boundary[k]: rank of map from layer k to layer k-1
  for (std::size_t k = 1; k < top; ++k) boundary[k] = detail::boundary_rank(layers[k - 1], layers[k], field);

  HomologyProfile out;
  out.ranks.resize(top);
  long long chi = 0;
  for (std::size_t k = 0; k < top; ++k) {
    const long long r = static_cast<long long>(layers[k].size()) - static_cast<long long>(boundary[k]) -
                        static_cast<long long>(boundary[k + 1]);
    if (r < 0) fail(ErrorCode::Internal, "negative Betti number");
    out.ranks[k] = r;
    chi += (k % 2 == 1 ? 1 : -1) * r;
  }
  if (chi != reduced_euler_characteristic(c, max_faces))
    fail(ErrorCode::Internal, "homology ranks disagree with the reduced Euler characteristic");
  return out;
}

/// lk_Δ(F) = { G : G ∩ F = ∅, G ∪ F ∈ Δ }.
inline SimplicialComplex link(const SimplicialComplex& c, Mask face) {
  if (!c.has_face(face)) fail(ErrorCode::NotFace, "link requested at a nonface");
  std::vector<Mask> facets;
  for (Mask g : c.facets())
    if (is_subset(face, g)) facets.push_back(g & ~face);
  return SimplicialComplex::from_faces(c.vertex_count(), std::move(facets));
}

struct PurityReport {
  bool pure = true;
  std::set<int> facet_sizes;
};

inline PurityReport is_pure(const SimplicialComplex& c) {
  PurityReport out;
  for (Mask f : c.facets()) out.facet_sizes.insert(popcount(f));
  out.pure = out.facet_sizes.size() <= 1;
  return out;
}

struct CMWitness {
  Mask face = 0;
  int dimension = 0;
  long long rank = 0;
};

struct CMCertificate {
  bool verdict = true;
  FieldChoice field;
  std::optional<CMWitness> witness;
};

/// Reisner criterion. Faces are visited by increasing size, then ascending
/// mask, starting at the empty face; the first failing face is the witness.
inline CMCertificate is_cohen_macaulay(const SimplicialComplex& c, const FieldChoice& field = FieldChoice::gf2(),
                                       std::size_t max_faces = kDefaultFaceBudget) {
  if (c.is_void()) fail(ErrorCode::Range, "the void complex has no Cohen-Macaulay verdict");
  CMCertificate cert{true, field, std::nullopt};
  std::map<std::vector<Mask>, std::optional<std::pair<int, long long>>> memo;
  const auto layers = faces_by_size(c, max_faces);
  for (const auto& layer : layers) {
    for (Mask face : layer) {
      const SimplicialComplex lk = link(c, face);
      const int d = lk.dimension();
      if (d < 1) continue;  // only dimension -1 is below, and a nonempty link has no (-1)-homology
      auto it = memo.find(lk.facets());
      if (it == memo.end()) {
        const HomologyProfile h = reduced_homology(lk, field, max_faces);
        std::optional<std::pair<int, long long>> bad;
        for (int i = -1; i < d && !bad; ++i)
          if (h.rank(i) != 0) bad = std::pair{i, h.rank(i)};
        it = memo.emplace(lk.facets(), bad).first;
      }
      if (it->second) {
        cert.verdict = false;
        cert.witness = CMWitness{face, it->second->first, it->second->second};
        return cert;
      }
    }
  }
  if (!is_pure(c).pure) fail(ErrorCode::Internal, "Reisner check passed on an impure complex");
  return cert;
}

}  // namespace cmg

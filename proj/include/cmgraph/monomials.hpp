#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cmgraph/bits.hpp"
#include "cmgraph/error.hpp"

namespace cmg {

/// The variable grid X_{a,i}, a in [r], i in [n]. Variable X_{a,i} occupies
/// slot (a-1)*n + (i-1), so ascending slot order is (a,i) order.
struct Grid {
  int r = 0;
  int n = 0;

  Grid() = default;
  Grid(int levels, int size) : r(levels), n(size) {
    if (r < 1 || n < 1 || r * n > kMaxBits)
      fail(ErrorCode::Range, "grid " + std::to_string(r) + "x" + std::to_string(n) + " needs r,n >= 1 and r*n <= 64");
  }

  int vertex_count() const { return r * n; }
  Mask all() const { return low_bits(vertex_count()); }
  Mask level_mask(int a) const { return low_bits(n) << ((a - 1) * n); }

  bool operator==(const Grid&) const = default;
};

struct Variable {
  int level = 1;  // a
  int index = 1;  // i

  auto operator<=>(const Variable&) const = default;
};

inline int slot(const Grid& g, Variable v) {
  if (v.level < 1 || v.level > g.r || v.index < 1 || v.index > g.n)
    fail(ErrorCode::Range, "variable X[" + std::to_string(v.level) + "," + std::to_string(v.index) + "] outside grid");
  return (v.level - 1) * g.n + (v.index - 1);
}

inline Variable variable_at(const Grid& g, int s) { return {s / g.n + 1, s % g.n + 1}; }

inline std::string to_string(Variable v) {
  return "X[" + std::to_string(v.level) + "," + std::to_string(v.index) + "]";
}

/// A squarefree monomial, identified with its support.
class Monomial {
 public:
  constexpr Monomial() = default;
  constexpr explicit Monomial(Mask support) : support_(support) {}

  static Monomial of(const Grid& g, std::initializer_list<Variable> vars) {
    Mask m = 0;
    for (Variable v : vars) m |= bit(slot(g, v));
    return Monomial(m);
  }

  constexpr Mask support() const { return support_; }
  constexpr int degree() const { return popcount(support_); }
  constexpr bool is_one() const { return support_ == 0; }

  constexpr bool operator==(const Monomial&) const = default;

 private:
  Mask support_ = 0;
};

constexpr bool divides(Monomial u, Monomial v) { return is_subset(u.support(), v.support()); }

/// u / gcd(u, v); for squarefree monomials the support is supp(u) \ supp(v).
constexpr Monomial quotient_generator(Monomial u, Monomial v) { return Monomial(u.support() & ~v.support()); }

constexpr Monomial product(Monomial u, Monomial v) { return Monomial(u.support() | v.support()); }

/// Canonical generator order: degree, then lexicographic on the (a,i)-sorted variables.
inline bool canonical_less(Monomial u, Monomial v) {
  if (u.degree() != v.degree()) return u.degree() < v.degree();
  return lex_less(u.support(), v.support());
}

inline std::string to_string(const Grid& g, Monomial u) {
  if (u.is_one()) return "1";
  std::string out;
  for_each_bit(u.support(), [&](int s) {
    if (!out.empty()) out += '*';
    out += to_string(variable_at(g, s));
  });
  return out;
}

namespace detail {

inline void skip_space(std::string_view s, std::size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

inline int parse_int(std::string_view s, std::size_t& pos) {
  skip_space(s, pos);
  const std::size_t start = pos;
  int value = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    value = value * 10 + (s[pos] - '0');
    if (value > 1'000'000) fail(ErrorCode::Parse, "index too large in '" + std::string(s) + "'");
    ++pos;
  }
  if (pos == start) fail(ErrorCode::Parse, "expected an integer in '" + std::string(s) + "'");
  return value;
}

inline void expect(std::string_view s, std::size_t& pos, char c) {
  skip_space(s, pos);
  if (pos >= s.size() || s[pos] != c) fail(ErrorCode::Parse, std::string("expected '") + c + "' in '" + std::string(s) + "'");
  ++pos;
}

}  // namespace detail

/// Parses `X[a,i]*X[b,j]*...` (whitespace ignored) or `1`. Does not check a grid.
inline std::vector<Variable> parse_variables(std::string_view text) {
  std::vector<Variable> out;
  std::size_t pos = 0;
  detail::skip_space(text, pos);
  if (pos < text.size() && text[pos] == '1') {
    ++pos;
    detail::skip_space(text, pos);
    if (pos != text.size()) fail(ErrorCode::Parse, "trailing input after '1' in '" + std::string(text) + "'");
    return out;
  }
  while (true) {
    detail::expect(text, pos, 'X');
    detail::expect(text, pos, '[');
    const int a = detail::parse_int(text, pos);
    detail::expect(text, pos, ',');
    const int i = detail::parse_int(text, pos);
    detail::expect(text, pos, ']');
    out.push_back({a, i});
    detail::skip_space(text, pos);
    if (pos == text.size()) break;
    detail::expect(text, pos, '*');
  }
  return out;
}

inline Monomial parse_monomial(const Grid& g, std::string_view text) {
  Mask m = 0;
  for (Variable v : parse_variables(text)) {
    if (v.level < 1 || v.level > g.r || v.index < 1 || v.index > g.n)
      fail(ErrorCode::Parse, to_string(v) + " outside the " + std::to_string(g.r) + "x" + std::to_string(g.n) + " grid");
    const int s = slot(g, v);
    if (contains(m, s)) fail(ErrorCode::Parse, "repeated factor " + to_string(v) + " (monomials are squarefree)");
    m |= bit(s);
  }
  return Monomial(m);
}

class MonomialIdeal;
inline MonomialIdeal minimalize(const Grid& g, std::vector<Monomial> ms);

/// Squarefree monomial ideal held by its minimal generators in canonical order.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  const Grid& grid() const { return grid_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }

  bool contains(Monomial u) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](Monomial g) { return divides(g, u); });
  }

  bool operator==(const MonomialIdeal&) const = default;

  friend MonomialIdeal minimalize(const Grid& g, std::vector<Monomial> ms);

 private:
  Grid grid_;
  std::vector<Monomial> gens_;
};

/// Divisibility-minimal elements of `ms`, deduplicated and canonically sorted.
inline MonomialIdeal minimalize(const Grid& g, std::vector<Monomial> ms) {
  std::sort(ms.begin(), ms.end(), [](Monomial u, Monomial v) { return canonical_less(u, v); });
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  MonomialIdeal out;
  out.grid_ = g;
  for (Monomial u : ms) {
    if ((u.support() & ~g.all()) != 0) fail(ErrorCode::Range, "monomial outside grid");
    // Candidates are visited by nondecreasing degree, so only earlier ones can divide u.
    const bool redundant = std::any_of(out.gens_.begin(), out.gens_.end(), [&](Monomial v) { return divides(v, u); });
    if (!redundant) out.gens_.push_back(u);
  }
  return out;
}

inline bool is_equigenerated(std::span<const Monomial> gens) {
  return std::all_of(gens.begin(), gens.end(), [&](Monomial u) { return u.degree() == gens.front().degree(); });
}

}  // namespace cmg

#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cmgraph/duality.hpp"
#include "cmgraph/graphs.hpp"
#include "cmgraph/homology.hpp"
#include "cmgraph/hr.hpp"
#include "cmgraph/io.hpp"
#include "cmgraph/random.hpp"

// The end-to-end reproduction suite: golden examples, oracle equivalences,
// counting identities and the Cohen-Macaulay checks, each reported as one
// named pass/fail line. Random instances are regenerated from the seed.

namespace cmg::suite {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

struct Options {
  std::uint64_t seed = kDefaultSeed;
  std::string data_dir;
  int random_families = 200;
  int extensions_per_family = 20;
  int cm_families = 60;
  int random_ideals = 100;
};

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  bool internal_error = false;  // an E_INTERNAL escaped: two routes disagreed
  std::string detail;
  double seconds = 0;
};

namespace detail {

inline std::string mask_set(Mask m) {
  std::string out = "{";
  for_each_bit(m, [&](int i) { out += (out.size() > 1 ? "," : "") + std::string("p") + std::to_string(i + 1); });
  return out + "}";
}

/// Collects the first few failure messages of one check.
class Tally {
 public:
  void require(bool ok, const std::string& what) {
    if (ok) return;
    ++failures_;
    if (messages_.size() < 3) messages_.push_back(what);
  }
  bool ok() const { return failures_ == 0; }
  std::string summary(const std::string& success) const {
    if (ok()) return success;
    std::string out = std::to_string(failures_) + " failure(s): ";
    for (std::size_t k = 0; k < messages_.size(); ++k) out += (k ? "; " : "") + messages_[k];
    return out;
  }

 private:
  int failures_ = 0;
  std::vector<std::string> messages_;
};

inline std::vector<RelationFamily> random_families(const Options& opt) {
  Rng rng(opt.seed);
  std::vector<RelationFamily> out;
  for (int k = 0; k < opt.random_families; ++k) out.push_back(random_family(rng, 4, 4));
  return out;
}

inline RelationFamily load_family(const Options& opt, const std::string& name) {
  return io::parse_family(io::read_file(opt.data_dir + "/" + name));
}

inline MultipartiteGraph load_graph(const Options& opt, const std::string& name) {
  return io::parse_graph(io::read_file(opt.data_dir + "/" + name));
}

inline Mask ideal_of(std::initializer_list<int> one_based) {
  Mask m = 0;
  for (int i : one_based) m |= bit(i - 1);
  return m;
}

/// Reisner over GF(2), cross-checked over the rationals.
inline bool cm_both_fields(const SimplicialComplex& c, Tally& t, const std::string& label) {
  const bool mod2 = is_cohen_macaulay(c, FieldChoice::gf2()).verdict;
  const bool rational = is_cohen_macaulay(c, FieldChoice::rational()).verdict;
  t.require(mod2 == rational, label + ": GF(2) and rational verdicts differ");
  return mod2 && rational;
}

}  // namespace detail

/// Three-element example: both ideal lattices, the 15 chains in order, and the
/// generators regenerated from them.
inline CheckResult check_example_chains(const Options& opt) {
  detail::Tally t;
  const RelationFamily f = detail::load_family(opt, "example33_family.json");
  using detail::ideal_of;
  const Mask p = ideal_of({1, 2, 3});
  const std::vector<std::vector<Mask>> lattices = {
      {0, ideal_of({1}), ideal_of({2}), ideal_of({1, 2}), ideal_of({2, 3}), p},
      {0, ideal_of({1}), ideal_of({3}), ideal_of({1, 2}), ideal_of({1, 3}), p},
  };
  t.require(f.n() == 3 && f.r() == 3, "fixture is not a 3x3 family");
  if (!t.ok()) return {1, "", false, false, t.summary("")};
  for (int a = 1; a <= 2; ++a) {
    std::vector<Mask> got;
    for (const OrderIdeal& i : order_ideals(f.level(a))) got.push_back(i.members);
    t.require(got == lattices[a - 1], "J(P_" + std::to_string(a) + ") differs from the expected six ideals");
  }
  const std::vector<std::vector<Mask>> chains = {
      {0, 0},
      {ideal_of({1}), 0},
      {ideal_of({1}), ideal_of({1})},
      {ideal_of({2}), 0},
      {ideal_of({1, 2}), 0},
      {ideal_of({1, 2}), ideal_of({1})},
      {ideal_of({1, 2}), ideal_of({1, 2})},
      {ideal_of({2, 3}), 0},
      {ideal_of({2, 3}), ideal_of({3})},
      {p, 0},
      {p, ideal_of({1})},
      {p, ideal_of({3})},
      {p, ideal_of({1, 2})},
      {p, ideal_of({1, 3})},
      {p, p},
  };
  const auto got = enumerate_chains(f);
  t.require(got.size() == 15, std::to_string(got.size()) + " chains instead of 15");
  for (std::size_t k = 0; k < std::min(got.size(), chains.size()); ++k)
    t.require(got[k].ideals == chains[k], "chain " + std::to_string(k + 1) + " is (" + detail::mask_set(got[k].ideals[0]) +
                                              ", " + detail::mask_set(got[k].ideals[1]) + ")");
  const MonomialIdeal h = build_hr(f);
  t.require(h.size() == 15, std::to_string(h.size()) + " generators instead of 15");
  for (Monomial u : h.generators()) t.require(u.degree() == 6, "generator " + to_string(grid_of(f), u) + " not of degree 6");
  // Each expected chain must produce a distinct generator of the ideal.
  for (const auto& c : chains) {
    const IdealChain chain{c};
    t.require(is_valid_chain(f, chain) &&
                  std::find(h.generators().begin(), h.generators().end(), chain_monomial(f, chain)) != h.generators().end(),
              "expected chain (" + detail::mask_set(c[0]) + ", " + detail::mask_set(c[1]) + ") has no generator");
  }
  return {1, "", t.ok(), false, t.summary("6 + 6 ideals, 15 chains, 15 degree-6 generators")};
}

/// Linear quotients of H_r under the canonical and under random linear extensions.
inline CheckResult check_linear_quotients_suite(const Options& opt) {
  detail::Tally t;
  Rng rng(opt.seed ^ 0x5eedULL);
  std::size_t orders = 0;
  const auto families = detail::random_families(opt);
  for (std::size_t k = 0; k < families.size(); ++k) {
    const RelationFamily& f = families[k];
    const auto chains = enumerate_chains(f);
    const auto gens = chain_monomials(f, chains);
    std::vector<ChainOrder> ords = {linear_extension(chains)};
    for (int e = 0; e < opt.extensions_per_family; ++e) ords.push_back(random_linear_extension(chains, rng));
    for (const ChainOrder& ord : ords) {
      ++orders;
      t.require(is_linear_extension(chains, ord), "family " + std::to_string(k) + ": order is not a linear extension");
      const auto v = check_linear_quotients(permute<Monomial>(gens, ord));
      t.require(v.passed, "family " + std::to_string(k) + ": no linear quotient at (" + std::to_string(v.j) + "," +
                              std::to_string(v.i) + ")");
    }
  }
  return {2, "", t.ok(), false,
          t.summary(std::to_string(families.size()) + " families, " + std::to_string(orders) + " orders with linear quotients")};
}

/// Closed-form dual of H_r against the brute-force Alexander dual.
inline CheckResult check_dual_equivalence(const Options& opt) {
  detail::Tally t;
  const RelationFamily example = detail::load_family(opt, "example33_family.json");
  const MonomialIdeal ex_fast = dual_hr_fast(example);
  t.require(ex_fast.size() == 13, "example dual has " + std::to_string(ex_fast.size()) + " generators instead of 13");
  t.require(ex_fast == dual_ideal_bruteforce(build_hr(example), grid_of(example)), "example: closed form differs from brute force");
  const auto families = detail::random_families(opt);
  for (std::size_t k = 0; k < families.size(); ++k) {
    const RelationFamily& f = families[k];
    t.require(dual_hr_fast(f) == dual_ideal_bruteforce(build_hr(f), grid_of(f)),
              "family " + std::to_string(k) + ": closed form differs from brute force");
  }
  return {3, "", t.ok(), false,
          t.summary("example (13 generators) + " + std::to_string(families.size()) + " families agree")};
}

/// The two-level composite relation of the example family and its failure of transitivity.
inline CheckResult check_composite_example(const Options& opt) {
  detail::Tally t;
  const RelationFamily f = detail::load_family(opt, "example33_family.json");
  Relation expected = Relation::identity(3);
  expected.set(0, 1);
  expected.set(1, 2);
  const Relation got = composite_relation(f, 1, 2).rel;
  t.require(got == expected, "composite relation differs from diagonal + {(1,2),(2,3)}");
  t.require(!got.holds(0, 2), "(1,3) is present");
  t.require(!is_transitive(got), "composite relation is transitive");
  return {4, "", t.ok(), false, t.summary("diagonal + {(1,2),(2,3)}, (1,3) absent, not transitive")};
}

/// Reisner checks of the independence complexes the theorems cover, plus the
/// two cycle fixtures.
inline CheckResult check_cohen_macaulay_suite(const Options& opt) {
  detail::Tally t;
  Rng rng(opt.seed ^ 0xc0ffeeULL);

  // (a) raw random relations; those passing the hypothesis checker get their graph tested.
  int accepted = 0;
  int rejected = 0;
  for (int attempt = 0; accepted < opt.cm_families && attempt < 100 * opt.cm_families; ++attempt) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const int r = 2 + static_cast<int>(rng() % 2);
    std::vector<Relation> raw;
    for (int a = 1; a < r; ++a) {
      Relation rel = Relation::identity(n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (rng() % 2 == 0) rel.set(i, j);
      raw.push_back(std::move(rel));
    }
    if (!check_family_conditions(raw).passed()) {
      ++rejected;
      continue;
    }
    ++accepted;
    std::vector<Poset> levels;
    for (const Relation& rel : raw) levels.emplace_back(rel);
    const RelationFamily f(n, std::move(levels));
    const MultipartiteGraph g = graph_of_family(f);
    t.require(check_theorem1(g).passed(), "family graph fails the first theorem's conditions");
    const SimplicialComplex ind = independence_complex(g);
    t.require(is_pure(ind).pure, "family graph has an impure independence complex");
    t.require(detail::cm_both_fields(ind, t, "family graph"), "family graph (n=" + std::to_string(n) + ", r=" +
                                                                  std::to_string(r) + ") is not Cohen-Macaulay");
  }
  t.require(accepted >= 50, "only " + std::to_string(accepted) + " families passed the hypothesis checker");

  // (b) constructive graphs with complete lower parts and Herzog-Hibi tails.
  int constructed = 0;
  for (int n = 1; n <= 3; ++n)
    for (int r = 2; r <= 4; ++r)
      for (int variant = 0; variant < 3; ++variant) {
        std::vector<Poset> tails;
        for (int a = 1; a < r; ++a)
          tails.push_back(variant == 0 ? Poset::chain(n) : variant == 1 ? Poset::antichain(n) : random_poset(rng, n, 0.4));
        const MultipartiteGraph g = herzog_hibi_multipartite_graph(n, r, tails);
        const std::string label = "constructed graph n=" + std::to_string(n) + " r=" + std::to_string(r);
        t.require(check_theorem2(g).passed(), label + " fails the second theorem's conditions");
        t.require(detail::cm_both_fields(independence_complex(g), t, label), label + " is not Cohen-Macaulay");
        ++constructed;
      }
  const MultipartiteGraph hh = detail::load_graph(opt, "hh_complete_n2_r3_graph.json");
  t.require(check_theorem2(hh).passed(), "Herzog-Hibi fixture fails the second theorem's conditions");
  t.require(detail::cm_both_fields(independence_complex(hh), t, "Herzog-Hibi fixture"), "Herzog-Hibi fixture is not Cohen-Macaulay");

  // (c) the five-cycle: Cohen-Macaulay without either theorem's hypotheses.
  const MultipartiteGraph c5 = detail::load_graph(opt, "c5_graph.json");
  t.require(detail::cm_both_fields(independence_complex(c5), t, "C_5"), "C_5 is not Cohen-Macaulay");
  t.require(!check_theorem1(c5).passed(), "C_5 passes the first theorem's conditions");
  t.require(!check_theorem2(c5).passed(), "C_5 passes the second theorem's conditions");

  // (d) the four-cycle fails at the empty face.
  const MultipartiteGraph c4 = detail::load_graph(opt, "c4_graph.json");
  for (const FieldChoice& k : {FieldChoice::gf2(), FieldChoice::rational()}) {
    const CMCertificate cert = is_cohen_macaulay(independence_complex(c4), k);
    t.require(!cert.verdict, "C_4 is Cohen-Macaulay over " + k.name());
    t.require(cert.witness && cert.witness->face == 0 && cert.witness->dimension == 0,
              "C_4 witness over " + k.name() + " is not the empty face in dimension 0");
  }
  return {5, "", t.ok(), false,
          t.summary(std::to_string(accepted) + " hypothesis families (" + std::to_string(rejected) + " rejected), " +
                    std::to_string(constructed + 1) + " constructed graphs, C_5 CM, C_4 not CM at the empty face")};
}

/// n^2 C(r-1,2) + (r-1) C(n+1,2) = C((r-1)n+1, 2) and the all-complete graphs' edge counts.
inline CheckResult check_edge_counts(const Options&) {
  detail::Tally t;
  auto c2 = [](long long x) { return x * (x - 1) / 2; };
  for (long long r = 2; r <= 6; ++r)
    for (long long n = 1; n <= 6; ++n) {
      const long long lhs = n * n * c2(r - 1) + (r - 1) * c2(n + 1);
      const long long rhs = c2((r - 1) * n + 1);
      t.require(lhs == rhs && edge_count_expected(n, r) == rhs,
                "identity fails at n=" + std::to_string(n) + " r=" + std::to_string(r));
    }
  for (int n = 1; n <= 3; ++n)
    for (int r = 2; r <= 4; ++r) {
      const MultipartiteGraph g = herzog_hibi_complete_graph(n, r);
      t.require(static_cast<long long>(g.edge_count()) == edge_count_expected(n, r),
                "complete graph n=" + std::to_string(n) + " r=" + std::to_string(r) + " has " +
                    std::to_string(g.edge_count()) + " edges");
    }
  return {6, "", t.ok(), false, t.summary("identity for 2<=r<=6, 1<=n<=6; 9 complete graphs match")};
}

/// Linear-quotients order and co-chordality for the all-complete graphs.
inline CheckResult check_linear_resolution_certificates(const Options&) {
  detail::Tally t;
  for (int n = 1; n <= 3; ++n)
    for (int r = 2; r <= 4; ++r) {
      const MultipartiteGraph g = herzog_hibi_complete_graph(n, r);
      const std::string label = "n=" + std::to_string(n) + " r=" + std::to_string(r);
      const auto order = find_linear_quotients_order(edge_ideal(g));
      t.require(order && check_linear_quotients(*order).passed, label + ": no linear-quotients order found");
      t.require(complement_is_chordal(g), label + ": complement is not chordal");
    }
  return {7, "", t.ok(), false, t.summary("9 graphs: linear-quotients order found, complement chordal")};
}

/// Edge ideal equals the closed-form dual, double duals, and Euler consistency.
inline CheckResult check_structural_identities(const Options& opt) {
  detail::Tally t;
  const auto families = detail::random_families(opt);
  std::size_t homology_runs = 0;
  for (std::size_t k = 0; k < families.size(); ++k) {
    const RelationFamily& f = families[k];
    const MultipartiteGraph g = graph_of_family(f);
    t.require(edge_ideal(g) == dual_hr_fast(f), "family " + std::to_string(k) + ": edge ideal differs from the dual");
    // Every homology call re-derives the Euler characteristic from the facets and throws on disagreement.
    reduced_homology(independence_complex(g));
    ++homology_runs;
  }
  Rng rng(opt.seed ^ 0xd0a1ULL);
  for (int k = 0; k < opt.random_ideals; ++k) {
    const int v = 1 + static_cast<int>(rng() % 10);
    const Grid grid(1, v);
    const MonomialIdeal ideal =
        minimalize(grid, random_monomials(rng, v, 1 + static_cast<int>(rng() % 8), std::min(v, 4)));
    const MonomialIdeal dual = dual_ideal_bruteforce(ideal, grid);
    t.require(dual_ideal_bruteforce(dual, grid) == ideal, "random ideal " + std::to_string(k) + ": double dual differs");
    if (!ideal.is_unit()) {
      reduced_homology(complex_of_ideal(ideal));
      ++homology_runs;
    }
  }
  return {8, "", t.ok(), false,
          t.summary(std::to_string(families.size()) + " edge ideals, " + std::to_string(opt.random_ideals) +
                    " double duals, " + std::to_string(homology_runs) + " Euler-consistent homology runs")};
}

struct Check {
  int id;
  const char* name;
  std::function<CheckResult(const Options&)> run;
};

inline const std::vector<Check>& checks() {
  static const std::vector<Check> all = {
      {1, "example ideal lattices and chains", check_example_chains},
      {2, "linear quotients under every tested extension", check_linear_quotients_suite},
      {3, "closed-form dual equals brute-force dual", check_dual_equivalence},
      {4, "composite relation example is not transitive", check_composite_example},
      {5, "Cohen-Macaulay suite", check_cohen_macaulay_suite},
      {6, "edge-count identity", check_edge_counts},
      {7, "linear-resolution certificates", check_linear_resolution_certificates},
      {8, "structural identities", check_structural_identities},
  };
  return all;
}

/// Runs one check, turning escaped errors into a failed result.
inline CheckResult run_check(const Check& c, const Options& opt) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult out;
  try {
    out = c.run(opt);
  } catch (const Error& e) {
    out.passed = false;
    out.internal_error = e.code() == ErrorCode::Internal;
    out.detail = e.what();
  }
  out.id = c.id;
  out.name = c.name;
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace cmg::suite

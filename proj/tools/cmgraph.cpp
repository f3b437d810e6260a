// Command-line front end. Exit codes: 0 success, 1 a checked condition
// failed, 2 bad input or exceeded budget, 3 two computations that must agree
// did not.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cmgraph/duality.hpp"
#include "cmgraph/graphs.hpp"
#include "cmgraph/homology.hpp"
#include "cmgraph/hr.hpp"
#include "cmgraph/io.hpp"
#include "cmgraph/random.hpp"
#include "cmgraph/suite.hpp"

#ifndef CMGRAPH_DATA_DIR
#define CMGRAPH_DATA_DIR "data"
#endif

namespace {

using cmg::io::json;

enum Exit { kOk = 0, kConditionFailed = 1, kInputError = 2, kInternal = 3 };

struct Settings {
  std::string path;
  std::string format = "text";
  std::string field = "gf2";
  std::string which = "thm1";
  std::string fset;
  std::string data_dir = CMGRAPH_DATA_DIR;
  std::uint64_t seed = cmg::suite::kDefaultSeed;
  std::size_t budget_faces = cmg::kDefaultFaceBudget;
  int budget_vertices = cmg::kDefaultVertexBudget;
  int extensions = 20;
  std::vector<int> parts = {1, 2};
  bool verify = false;
  bool witness = false;
  bool search = false;
};

bool is_json_text(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && text[pos] == '{';
}

cmg::FieldChoice parse_field(const std::string& s) {
  if (s == "gf2") return cmg::FieldChoice::gf2();
  if (s == "rational") return cmg::FieldChoice::rational();
  if (s.rfind("gfp:", 0) == 0) {
    try {
      return cmg::FieldChoice::gfp(static_cast<std::uint32_t>(std::stoul(s.substr(4))));
    } catch (const std::logic_error&) {
    }
  }
  cmg::fail(cmg::ErrorCode::Parse, "unknown field '" + s + "' (expected gf2, rational or gfp:<prime>)");
}

std::string ideal_text(cmg::Mask m, int n) {
  std::string out = "{";
  for (int i = 0; i < n; ++i)
    if (cmg::contains(m, i)) out += (out.size() > 1 ? "," : "") + std::string("p") + std::to_string(i + 1);
  return out + "}";
}

json ideal_json(cmg::Mask m) {
  json out = json::array();
  cmg::for_each_bit(m, [&](int i) { out.push_back(i + 1); });
  return out;
}

std::string chain_text(const cmg::IdealChain& c, int n) {
  std::string out = "(";
  for (std::size_t k = 0; k < c.ideals.size(); ++k) out += (k ? ", " : "") + ideal_text(c.ideals[k], n);
  return out + ")";
}

json chain_json(const cmg::IdealChain& c) {
  json out = json::array();
  for (cmg::Mask m : c.ideals) out.push_back(ideal_json(m));
  return out;
}

json generators_json(const cmg::Grid& g, std::span<const cmg::Monomial> gens) {
  json out = json::array();
  for (cmg::Monomial u : gens) out.push_back(cmg::to_string(g, u));
  return out;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

cmg::RelationFamily load_family(const Settings& s) { return cmg::io::parse_family(cmg::io::read_file(s.path)); }

/// Family files are turned into their associated graph; graph files are read as is.
cmg::MultipartiteGraph load_graph(const Settings& s) {
  const std::string text = cmg::io::read_file(s.path);
  if (cmg::io::looks_like_family(text)) return cmg::graph_of_family(cmg::io::parse_family(text));
  return cmg::io::parse_graph(text);
}

int cmd_ideals(const Settings& s) {
  const cmg::RelationFamily f = load_family(s);
  json levels = json::array();
  for (int a = 1; a < f.r(); ++a) {
    const auto ideals = cmg::order_ideals(f.level(a));
    json list = json::array();
    for (const auto& i : ideals) list.push_back(ideal_json(i.members));
    levels.push_back({{"level", a}, {"ideals", list}});
    if (s.format == "text") {
      std::cout << "J(P_" << a << ") [" << ideals.size() << "]:";
      for (const auto& i : ideals) std::cout << ' ' << ideal_text(i.members, f.n());
      std::cout << "\n";
    }
  }
  if (s.format == "json") print_json({{"n", f.n()}, {"r", f.r()}, {"levels", levels}});
  return kOk;
}

int cmd_hr_build(const Settings& s) {
  const cmg::RelationFamily f = load_family(s);
  const auto chains = cmg::enumerate_chains(f);
  const auto gens = cmg::chain_monomials(f, chains);
  const cmg::MonomialIdeal h = cmg::build_hr(f);
  const cmg::Grid g = cmg::grid_of(f);
  if (s.format == "json") {
    json rows = json::array();
    for (std::size_t k = 0; k < chains.size(); ++k)
      rows.push_back({{"chain", chain_json(chains[k])}, {"monomial", cmg::to_string(g, gens[k])}});
    print_json({{"r", g.r}, {"n", g.n}, {"chains", rows}, {"generators", generators_json(g, h.generators())}});
    return kOk;
  }
  std::cout << "# " << chains.size() << " chains\n";
  for (std::size_t k = 0; k < chains.size(); ++k) std::cout << "# " << chain_text(chains[k], f.n()) << " -> " << cmg::to_string(g, gens[k]) << "\n";
  std::cout << cmg::io::write_ideal_file(g, h.generators());
  return kOk;
}

int cmd_hr_check_lq(const Settings& s) {
  const std::string text = cmg::io::read_file(s.path);
  json report;
  bool passed = true;
  std::ostringstream out;
  if (is_json_text(text)) {
    const cmg::RelationFamily f = cmg::io::parse_family(text);
    const auto chains = cmg::enumerate_chains(f);
    const auto gens = cmg::chain_monomials(f, chains);
    cmg::Rng rng(s.seed);
    json orders = json::array();
    for (int e = 0; e <= s.extensions; ++e) {
      const cmg::ChainOrder ord = e == 0 ? cmg::linear_extension(chains) : cmg::random_linear_extension(chains, rng);
      const auto v = cmg::check_linear_quotients(cmg::permute<cmg::Monomial>(gens, ord));
      const std::string label = e == 0 ? "canonical" : "random " + std::to_string(e);
      json row = {{"order", label}, {"passed", v.passed}};
      out << (v.passed ? "PASS " : "FAIL ") << label;
      if (!v.passed) {
        row["j"] = v.j;
        row["i"] = v.i;
        out << " at (j,i) = (" << v.j << "," << v.i << ")";
      }
      out << "\n";
      orders.push_back(row);
      passed = passed && v.passed;
    }
    report = {{"generators", gens.size()}, {"orders", orders}, {"passed", passed}};
  } else {
    const cmg::io::IdealFile file = cmg::io::parse_ideal_file(text);
    const auto v = cmg::check_linear_quotients(file.generators);
    passed = v.passed;
    report = {{"generators", file.generators.size()}, {"passed", v.passed}};
    out << (v.passed ? "PASS file order" : "FAIL file order");
    if (!v.passed) {
      report["j"] = v.j;
      report["i"] = v.i;
      out << " at (j,i) = (" << v.j << "," << v.i << ")";
    }
    out << "\n";
    if (!v.passed && s.search) {
      const auto found = cmg::find_linear_quotients_order(cmg::minimalize(file.grid, file.generators));
      if (found) {
        passed = true;
        report["found_order"] = generators_json(file.grid, *found);
        out << "FOUND order with linear quotients:\n";
        for (cmg::Monomial u : *found) out << "  " << cmg::to_string(file.grid, u) << "\n";
      } else {
        report["found_order"] = nullptr;
        out << "INCONCLUSIVE no generator order has linear quotients\n";
      }
    }
  }
  if (s.format == "json")
    print_json(report);
  else
    std::cout << out.str();
  return passed ? kOk : kConditionFailed;
}

int cmd_hr_gamma(const Settings& s) {
  const cmg::RelationFamily f = load_family(s);
  const cmg::Grid g = cmg::grid_of(f);
  cmg::Mask fset = 0;
  if (!s.fset.empty()) fset = cmg::parse_monomial(g, s.fset).support();
  const cmg::IdealChain gamma = cmg::gamma_chain(f, fset);
  json witnesses = json::array();
  std::ostringstream out;
  out << "gamma = " << chain_text(gamma, f.n()) << "\n";
  if (s.witness) {
    for (int a = 1; a < f.r(); ++a)
      cmg::for_each_bit(gamma.at(a, f.n()), [&](int i) {
        const auto w = cmg::gamma_witness(f, fset, a, i);
        if (!w) cmg::fail(cmg::ErrorCode::Internal, "no witness for an element of gamma");
        std::string path = "p" + std::to_string(i + 1);
        for (std::size_t k = 0; k < w->path.size(); ++k)
          path += " <=_" + std::to_string(a + static_cast<int>(k)) + " p" + std::to_string(w->path[k] + 1);
        out << "  level " << a << ": " << path << ", " << cmg::to_string(cmg::Variable{w->b, w->j + 1}) << " in F\n";
        witnesses.push_back({{"level", a}, {"element", i + 1}, {"b", w->b}, {"j", w->j + 1}, {"path", path}});
      });
  }
  if (s.format == "json") {
    json j = {{"gamma", chain_json(gamma)}};
    if (s.witness) j["witnesses"] = witnesses;
    print_json(j);
  } else {
    std::cout << out.str();
  }
  return kOk;
}

int cmd_dual(const Settings& s) {
  const std::string text = cmg::io::read_file(s.path);
  if (!is_json_text(text)) {
    const cmg::io::IdealFile file = cmg::io::parse_ideal_file(text);
    const cmg::MonomialIdeal dual =
        cmg::dual_ideal_bruteforce(cmg::minimalize(file.grid, file.generators), file.grid, s.budget_vertices);
    if (s.format == "json")
      print_json({{"generators", generators_json(file.grid, dual.generators())}});
    else
      std::cout << cmg::io::write_ideal_file(file.grid, dual.generators());
    return kOk;
  }
  const cmg::RelationFamily f = cmg::io::parse_family(text);
  const cmg::Grid g = cmg::grid_of(f);
  const cmg::MonomialIdeal fast = cmg::dual_hr_fast(f);
  json report = {{"generators", generators_json(g, fast.generators())}};
  std::optional<bool> match;
  std::vector<std::string> only_fast;
  std::vector<std::string> only_brute;
  if (s.verify) {
    const cmg::MonomialIdeal brute = cmg::dual_ideal_bruteforce(cmg::build_hr(f), g, s.budget_vertices);
    for (cmg::Monomial u : fast.generators())
      if (std::find(brute.generators().begin(), brute.generators().end(), u) == brute.generators().end())
        only_fast.push_back(cmg::to_string(g, u));
    for (cmg::Monomial u : brute.generators())
      if (std::find(fast.generators().begin(), fast.generators().end(), u) == fast.generators().end())
        only_brute.push_back(cmg::to_string(g, u));
    match = fast == brute;
    report["verified"] = *match;
    if (!*match) {
      report["only_closed_form"] = only_fast;
      report["only_brute_force"] = only_brute;
      report["family"] = cmg::io::family_to_json(f);
    }
  }
  if (s.format == "json") {
    print_json(report);
  } else {
    std::cout << cmg::io::write_ideal_file(g, fast.generators());
    if (match) {
      std::cout << "# " << fast.size() << " generators, brute force " << (*match ? "agrees" : "DISAGREES") << "\n";
      if (!*match) {
        for (const auto& u : only_fast) std::cout << "# only closed form: " << u << "\n";
        for (const auto& u : only_brute) std::cout << "# only brute force: " << u << "\n";
        std::cout << "# counterexample family: " << cmg::io::family_to_json(f).dump() << "\n";
      }
    }
  }
  return match && !*match ? kInternal : kOk;
}

int cmd_graph_build(const Settings& s) {
  const cmg::MultipartiteGraph g = load_graph(s);
  if (s.format == "dot")
    std::cout << cmg::io::graph_to_dot(g);
  else if (s.format == "json")
    print_json(cmg::io::graph_to_json(g));
  else
    for (auto [u, v] : g.edges()) std::cout << cmg::edge_name(u, v) << "\n";
  return kOk;
}

int print_report(const cmg::ConditionReport& report, const Settings& s) {
  if (s.format == "json") {
    json conds = json::array();
    for (const auto& c : report.conditions) conds.push_back({{"name", c.name}, {"passed", c.passed}, {"witnesses", c.witnesses}});
    json j = {{"passed", report.passed()}, {"conditions", conds}};
    if (report.is_complete) j["complete"] = *report.is_complete;
    print_json(j);
  } else {
    for (const auto& c : report.conditions) {
      std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << "\n";
      const std::size_t shown = s.witness ? c.witnesses.size() : std::min<std::size_t>(1, c.witnesses.size());
      for (std::size_t k = 0; k < shown; ++k) std::cout << "  " << c.witnesses[k] << "\n";
    }
    if (report.is_complete) std::cout << "complete: " << (*report.is_complete ? "yes" : "no") << "\n";
    std::cout << (report.passed() ? "all conditions hold" : "conditions fail") << "\n";
  }
  return report.passed() ? kOk : kConditionFailed;
}

int cmd_graph_check(const Settings& s) {
  if (s.which == "family") {
    const auto raw = cmg::io::parse_raw_levels(cmg::io::read_file(s.path));
    return print_report(cmg::check_family_conditions(raw), s);
  }
  const cmg::MultipartiteGraph g = load_graph(s);
  if (s.which == "thm1") return print_report(cmg::check_theorem1(g), s);
  if (s.which == "thm2") return print_report(cmg::check_theorem2(g), s);
  if (s.parts.size() != 2) cmg::fail(cmg::ErrorCode::Parts, "--parts needs two part numbers");
  return print_report(cmg::check_herzog_hibi(g, s.parts[0], s.parts[1]), s);
}

int cmd_graph_cm(const Settings& s) {
  const cmg::FieldChoice field = parse_field(s.field);
  const cmg::MultipartiteGraph g = load_graph(s);
  const cmg::SimplicialComplex c = cmg::independence_complex(g, s.budget_vertices);
  const cmg::PurityReport purity = cmg::is_pure(c);
  const cmg::CMCertificate cert = cmg::is_cohen_macaulay(c, field, s.budget_faces);
  const std::vector<int> sizes(purity.facet_sizes.begin(), purity.facet_sizes.end());
  if (s.format == "json") {
    json j = {{"field", field.name()}, {"cohen_macaulay", cert.verdict}, {"pure", purity.pure}, {"facet_sizes", sizes},
              {"facets", c.facets().size()}};
    if (cert.witness) {
      json face = json::array();
      cmg::for_each_bit(cert.witness->face, [&](int v) { face.push_back(cmg::to_string(cmg::variable_at(g.grid(), v))); });
      j["witness"] = {{"face", face}, {"dimension", cert.witness->dimension}, {"rank", cert.witness->rank}};
    }
    print_json(j);
  } else {
    std::cout << "field: " << field.name() << "\n";
    std::cout << "facets: " << c.facets().size() << ", pure: " << (purity.pure ? "yes" : "no") << ", sizes:";
    for (int k : sizes) std::cout << ' ' << k;
    std::cout << "\ncohen-macaulay: " << (cert.verdict ? "yes" : "no") << "\n";
    if (cert.witness) {
      std::string face;
      cmg::for_each_bit(cert.witness->face, [&](int v) { face += (face.empty() ? "" : ",") + cmg::to_string(cmg::variable_at(g.grid(), v)); });
      std::cout << "witness: link of {" << face << "} has reduced homology of rank " << cert.witness->rank
                << " in dimension " << cert.witness->dimension << "\n";
    }
  }
  return cert.verdict ? kOk : kConditionFailed;
}

int cmd_verify(const Settings& s) {
  cmg::suite::Options opt;
  opt.seed = s.seed;
  opt.data_dir = s.data_dir;
  bool all = true;
  bool internal = false;
  json rows = json::array();
  for (const auto& check : cmg::suite::checks()) {
    const cmg::suite::CheckResult r = cmg::suite::run_check(check, opt);
    all = all && r.passed;
    internal = internal || r.internal_error;
    rows.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    if (s.format == "text") std::cout << (r.passed ? "PASS " : "FAIL ") << r.id << " " << r.name << ": " << r.detail << std::endl;
  }
  if (s.format == "json")
    print_json({{"seed", s.seed}, {"passed", all}, {"checks", rows}});
  else
    std::cout << (all ? "all checks passed" : "some checks failed") << " (seed " << s.seed << ")\n";
  if (internal) return kInternal;
  return all ? kOk : kConditionFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chains of order ideals, their Alexander duals, and Cohen-Macaulay multipartite graphs"};
  app.require_subcommand(1);
  Settings s;
  int (*action)(const Settings&) = nullptr;

  auto add_format = [&](CLI::App* cmd, std::vector<std::string> allowed) {
    cmd->add_option("--format", s.format, "output format")->check(CLI::IsMember(allowed));
  };
  auto add_input = [&](CLI::App* cmd, const std::string& what) { cmd->add_option("path", s.path, what)->required(); };

  auto* ideals = app.add_subcommand("ideals", "list the order ideals of every level");
  add_input(ideals, "relation-family JSON");
  add_format(ideals, {"text", "json"});
  ideals->callback([&] { action = cmd_ideals; });

  auto* hr = app.add_subcommand("hr", "the ideal generated by chains of order ideals");
  hr->require_subcommand(1);
  auto* hr_build = hr->add_subcommand("build", "enumerate chains and print the minimal generators");
  add_input(hr_build, "relation-family JSON");
  add_format(hr_build, {"text", "json"});
  hr_build->callback([&] { action = cmd_hr_build; });
  auto* hr_lq = hr->add_subcommand("check-lq", "check linear quotients (family: canonical and random extensions; ideal file: file order)");
  add_input(hr_lq, "relation-family JSON or ideal file");
  add_format(hr_lq, {"text", "json"});
  hr_lq->add_option("--seed", s.seed, "seed for the random linear extensions");
  hr_lq->add_option("--extensions", s.extensions, "number of random linear extensions")->check(CLI::NonNegativeNumber);
  hr_lq->add_flag("--search", s.search, "for ideal files, search for an order with linear quotients");
  hr_lq->callback([&] { action = cmd_hr_check_lq; });
  auto* hr_gamma = hr->add_subcommand("gamma", "the chain generated by a set of variables");
  add_input(hr_gamma, "relation-family JSON");
  add_format(hr_gamma, {"text", "json"});
  hr_gamma->add_option("--set", s.fset, "variables as a monomial, e.g. X[2,3]*X[3,1]");
  hr_gamma->add_flag("--witness", s.witness, "show a generating variable above each element");
  hr_gamma->callback([&] { action = cmd_hr_gamma; });

  auto* dual = app.add_subcommand("dual", "Alexander dual (family: closed form; ideal file: brute force)");
  add_input(dual, "relation-family JSON or ideal file");
  add_format(dual, {"text", "json"});
  dual->add_flag("--verify", s.verify, "also compute the brute-force dual and compare");
  dual->add_option("--budget-vertices", s.budget_vertices, "largest vertex count for subset enumeration");
  dual->callback([&] { action = cmd_dual; });

  auto add_check_options = [&](CLI::App* cmd) {
    add_input(cmd, "graph JSON or relation-family JSON");
    add_format(cmd, {"text", "json"});
    cmd->add_option("--which", s.which, "thm1, thm2, hh or family")->check(CLI::IsMember({"thm1", "thm2", "hh", "family"}));
    cmd->add_option("--parts", s.parts, "the two parts compared by --which hh")->expected(2);
    cmd->add_flag("--witness", s.witness, "print every witness, not just the first");
    cmd->callback([&] { action = cmd_graph_check; });
  };
  auto add_cm_options = [&](CLI::App* cmd) {
    add_input(cmd, "graph JSON or relation-family JSON");
    add_format(cmd, {"text", "json"});
    cmd->add_option("--field", s.field, "gf2, rational or gfp:<prime>");
    cmd->add_option("--budget-faces", s.budget_faces, "largest number of faces enumerated");
    cmd->add_option("--budget-vertices", s.budget_vertices, "largest vertex count");
    cmd->callback([&] { action = cmd_graph_cm; });
  };

  auto* graph = app.add_subcommand("graph", "the r-partite graph of a family");
  graph->require_subcommand(1);
  auto* graph_build = graph->add_subcommand("build", "build or export a graph");
  add_input(graph_build, "relation-family JSON or graph JSON");
  add_format(graph_build, {"text", "json", "dot"});
  graph_build->callback([&] { action = cmd_graph_build; });
  add_check_options(graph->add_subcommand("check", "check theorem hypotheses and report witnesses"));
  add_cm_options(graph->add_subcommand("cm", "Reisner check of the independence complex"));

  auto* cm = app.add_subcommand("cm", "Cohen-Macaulay checks");
  cm->require_subcommand(1);
  add_cm_options(cm->add_subcommand("check", "same as graph cm"));

  auto* verify = app.add_subcommand("verify-paper", "run the full reproduction suite");
  verify->add_option("--seed", s.seed, "seed for every random instance");
  verify->add_option("--data-dir", s.data_dir, "fixture directory");
  add_format(verify, {"text", "json"});
  verify->callback([&] { action = cmd_verify; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  try {
    return action(s);
  } catch (const cmg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == cmg::ErrorCode::Internal ? kInternal : kInputError;
  }
}

#pragma once

#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cmgraph/graphs.hpp"
#include "cmgraph/monomials.hpp"
#include "cmgraph/posets.hpp"

// Text formats: relation-family JSON, graph JSON, DOT export, and ideal files
// (one monomial per line, '#' comments, optional "# grid r=R n=N" directive).

namespace cmg::io {

using json = nlohmann::json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Parse, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

namespace detail {

inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::Parse, std::string("malformed JSON: ") + e.what());
  }
}

inline int get_int(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer())
    fail(ErrorCode::Parse, std::string("missing integer field '") + key + "'");
  return j.at(key).get<int>();
}

/// Pairs per level (1-based level -> 1-based pairs); levels absent from the file map to no pairs.
inline std::map<int, std::vector<std::pair<int, int>>> level_pairs(const json& doc, int r) {
  std::map<int, std::vector<std::pair<int, int>>> out;
  for (int a = 1; a < r; ++a) out[a];
  if (!doc.contains("relations")) return out;
  const json& rels = doc.at("relations");
  if (!rels.is_array()) fail(ErrorCode::Parse, "'relations' must be an array");
  for (const json& entry : rels) {
    const int level = get_int(entry, "level");
    if (level < 1 || level >= r) fail(ErrorCode::Parse, "level " + std::to_string(level) + " outside [1,r-1]");
    if (!entry.contains("pairs") || !entry.at("pairs").is_array()) fail(ErrorCode::Parse, "relation entry without 'pairs' array");
    for (const json& pair : entry.at("pairs")) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer())
        fail(ErrorCode::Parse, "pairs must be [i,j] integer arrays");
      out[level].emplace_back(pair[0].get<int>(), pair[1].get<int>());
    }
  }
  return out;
}

inline void check_sizes(int n, int r) {
  if (n < 1 || n > 32) fail(ErrorCode::Range, "n = " + std::to_string(n) + " outside [1,32]");
  if (r < 2 || r * n > kMaxBits) fail(ErrorCode::Range, "r = " + std::to_string(r) + " needs r >= 2 and r*n <= 64");
}

}  // namespace detail

/// Relation family from `{"n":..,"r":..,"relations":[{"level":a,"pairs":[[i,j],..]},..]}`.
/// Each level is the reflexive-transitive closure of its pairs; missing levels are identities.
inline RelationFamily parse_family(const std::string& text) {
  const json doc = detail::parse_json(text);
  const int n = detail::get_int(doc, "n");
  const int r = detail::get_int(doc, "r");
  detail::check_sizes(n, r);
  std::vector<Poset> levels;
  for (auto& [level, pairs] : detail::level_pairs(doc, r)) levels.push_back(close_relation(n, pairs));
  return RelationFamily(n, std::move(levels));
}

/// The same file without transitive closure and without the index-order
/// check, so hypothesis checkers can see malformed levels. Each level is the
/// diagonal plus the listed pairs.
inline std::vector<Relation> parse_raw_levels(const std::string& text) {
  const json doc = detail::parse_json(text);
  const int n = detail::get_int(doc, "n");
  const int r = detail::get_int(doc, "r");
  detail::check_sizes(n, r);
  std::vector<Relation> out;
  for (auto& [level, pairs] : detail::level_pairs(doc, r)) {
    Relation rel = Relation::identity(n);
    for (auto [i, j] : pairs) {
      if (i < 1 || j < 1 || i > n || j > n) fail(ErrorCode::Range, "pair outside [1,n]");
      rel.set(i - 1, j - 1);
    }
    out.push_back(std::move(rel));
  }
  return out;
}

/// Serializes every strict pair of each closed level, levels ascending.
inline json family_to_json(const RelationFamily& f) {
  json rels = json::array();
  for (int a = 1; a < f.r(); ++a) {
    json pairs = json::array();
    for (auto [i, j] : f.level(a).relation().pairs())
      if (i != j) pairs.push_back({i + 1, j + 1});
    rels.push_back({{"level", a}, {"pairs", pairs}});
  }
  return {{"n", f.n()}, {"r", f.r()}, {"relations", rels}};
}

inline bool looks_like_family(const std::string& text) {
  const json doc = detail::parse_json(text);
  return doc.is_object() && doc.contains("relations") && !doc.contains("edges");
}

/// Graph from `{"r":..,"n":..,"edges":[[[a,i],[b,j]],..]}`.
inline MultipartiteGraph parse_graph(const std::string& text) {
  const json doc = detail::parse_json(text);
  const int n = detail::get_int(doc, "n");
  const int r = detail::get_int(doc, "r");
  if (n < 1 || r < 1 || r * n > kMaxBits) fail(ErrorCode::Parse, "graph grid must satisfy r,n >= 1 and r*n <= 64");
  MultipartiteGraph g(Grid(r, n));
  if (!doc.contains("edges") || !doc.at("edges").is_array()) fail(ErrorCode::Parse, "missing 'edges' array");
  for (const json& e : doc.at("edges")) {
    if (!e.is_array() || e.size() != 2) fail(ErrorCode::Parse, "edges must be [[a,i],[b,j]]");
    Variable ends[2];
    for (int k = 0; k < 2; ++k) {
      const json& v = e[k];
      if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
        fail(ErrorCode::Parse, "vertex labels must be [level,index]");
      ends[k] = {v[0].get<int>(), v[1].get<int>()};
      if (ends[k].level < 1 || ends[k].level > r || ends[k].index < 1 || ends[k].index > n)
        fail(ErrorCode::Parse, "vertex " + to_string(ends[k]) + " outside the grid");
    }
    if (ends[0].level == ends[1].level) fail(ErrorCode::Parse, "edge inside part " + std::to_string(ends[0].level));
    g.add_edge(ends[0], ends[1]);
  }
  return g;
}

inline json graph_to_json(const MultipartiteGraph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({{u.level, u.index}, {v.level, v.index}});
  return {{"r", g.grid().r}, {"n", g.grid().n}, {"edges", edges}};
}

inline std::string dot_name(Variable v) { return "X_" + std::to_string(v.level) + "_" + std::to_string(v.index); }

/// DOT `graph` block, one same-rank subgraph per part.
inline std::string graph_to_dot(const MultipartiteGraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int a = 1; a <= g.grid().r; ++a) {
    out << "  subgraph part_" << a << " {\n    rank=same;";
    for (int i = 1; i <= g.grid().n; ++i) out << ' ' << dot_name({a, i}) << ';';
    out << "\n  }\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << dot_name(u) << " -- " << dot_name(v) << ";\n";
  out << "}\n";
  return out.str();
}

struct IdealFile {
  Grid grid;
  std::vector<Monomial> generators;  // file order
};

/// One monomial per line; '#' starts a comment. The grid comes from a
/// "# grid r=R n=N" line when present, otherwise from the largest level and
/// index that occur.
inline IdealFile parse_ideal_file(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<Variable>> rows;
  int r = 0;
  int n = 0;
  bool explicit_grid = false;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) {
      int gr = 0;
      int gn = 0;
      if (std::sscanf(line.c_str() + hash, "# grid r=%d n=%d", &gr, &gn) == 2) {
        r = gr;
        n = gn;
        explicit_grid = true;
      }
      line.erase(hash);
    }
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    rows.push_back(parse_variables(line));
  }
  if (!explicit_grid)
    for (const auto& row : rows)
      for (Variable v : row) {
        r = std::max(r, v.level);
        n = std::max(n, v.index);
      }
  if (r < 1 || n < 1 || r * n > kMaxBits) fail(ErrorCode::Parse, "ideal file needs a grid with r*n <= 64");
  IdealFile out{Grid(r, n), {}};
  for (const auto& row : rows) {
    std::string text_row;
    for (Variable v : row) text_row += (text_row.empty() ? "" : "*") + to_string(v);
    out.generators.push_back(parse_monomial(out.grid, text_row.empty() ? "1" : text_row));
  }
  return out;
}

inline std::string write_ideal_file(const Grid& g, std::span<const Monomial> gens) {
  std::string out = "# grid r=" + std::to_string(g.r) + " n=" + std::to_string(g.n) + "\n";
  for (Monomial u : gens) out += to_string(g, u) + "\n";
  return out;
}

}  // namespace cmg::io

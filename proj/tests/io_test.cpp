#include <gtest/gtest.h>

#include "cmgraph/io.hpp"
#include "cmgraph/random.hpp"
#include "support.hpp"

namespace cmg {
namespace {

using testing::example_family;

std::string fixture(const std::string& name) { return io::read_file(std::string(CMGRAPH_DATA_DIR) + "/" + name); }

void expect_code(ErrorCode code, const std::function<void()>& f) {
  try {
    f();
    ADD_FAILURE() << "no error raised";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

TEST(FamilyJson, ExampleFixture) {
  const RelationFamily f = io::parse_family(fixture("example33_family.json"));
  EXPECT_EQ(f.n(), 3);
  EXPECT_EQ(f.r(), 3);
  EXPECT_EQ(f.level(1), example_family().level(1));
  EXPECT_EQ(f.level(2), example_family().level(2));
}

TEST(FamilyJson, MissingLevelsAreIdentities) {
  const RelationFamily f = io::parse_family(fixture("identity_n2_family.json"));
  EXPECT_EQ(f.r(), 3);
  EXPECT_EQ(f.level(1), Poset::antichain(2));
  EXPECT_EQ(f.level(2), Poset::antichain(2));
}

TEST(FamilyJson, RoundTrip) {
  Rng rng(97);
  for (int trial = 0; trial < 100; ++trial) {
    const RelationFamily f = random_family(rng, 5, 5);
    const RelationFamily back = io::parse_family(io::family_to_json(f).dump());
    for (int a = 1; a < f.r(); ++a) ASSERT_EQ(back.level(a), f.level(a));
  }
}

TEST(FamilyJson, Errors) {
  expect_code(ErrorCode::Parse, [] { io::parse_family("{"); });
  expect_code(ErrorCode::Parse, [] { io::parse_family(R"({"n":3})"); });
  expect_code(ErrorCode::IndexOrder, [] { io::parse_family(R"({"n":3,"r":2,"relations":[{"level":1,"pairs":[[3,1]]}]})"); });
  expect_code(ErrorCode::Range, [] { io::parse_family(R"({"n":3,"r":2,"relations":[{"level":1,"pairs":[[1,4]]}]})"); });
  expect_code(ErrorCode::Parse, [] { io::parse_family(R"({"n":3,"r":2,"relations":[{"level":2,"pairs":[]}]})"); });
  expect_code(ErrorCode::Range, [] { io::parse_family(R"({"n":8,"r":9})"); });
}

TEST(FamilyJson, RawLevelsAreLiteral) {
  const auto raw = io::parse_raw_levels(fixture("nontransitive_raw_family.json"));
  ASSERT_EQ(raw.size(), 1U);
  EXPECT_TRUE(raw[0].holds(0, 1));
  EXPECT_TRUE(raw[0].holds(1, 2));
  EXPECT_FALSE(raw[0].holds(0, 2));
  expect_code(ErrorCode::IndexOrder, [] { io::parse_family(R"({"n":2,"r":2,"relations":[{"level":1,"pairs":[[1,2],[2,1]]}]})"); });
}

TEST(GraphJson, FixturesAndRoundTrip) {
  const MultipartiteGraph c5 = io::parse_graph(fixture("c5_graph.json"));
  EXPECT_EQ(c5, cycle_graph(5));
  EXPECT_EQ(io::parse_graph(fixture("c4_graph.json")), cycle_graph(4));
  EXPECT_EQ(io::parse_graph(fixture("hh_complete_n2_r3_graph.json")), herzog_hibi_complete_graph(2, 3));
  const MultipartiteGraph g = graph_of_family(example_family());
  EXPECT_EQ(io::parse_graph(io::graph_to_json(g).dump()), g);
}

TEST(GraphJson, Errors) {
  expect_code(ErrorCode::Parse, [] { io::parse_graph(R"({"r":2,"n":2,"edges":[[[1,1],[1,2]]]})"); });
  expect_code(ErrorCode::Parse, [] { io::parse_graph(R"({"r":2,"n":2,"edges":[[[1,1],[3,2]]]})"); });
  expect_code(ErrorCode::Parse, [] { io::parse_graph(R"({"r":2,"n":2})"); });
}

TEST(Dot, ExampleGraph) {
  const std::string dot = io::graph_to_dot(graph_of_family(example_family()));
  EXPECT_EQ(dot.rfind("graph G {", 0), 0U);
  std::size_t edges = 0;
  for (std::size_t pos = dot.find(" -- "); pos != std::string::npos; pos = dot.find(" -- ", pos + 1)) ++edges;
  EXPECT_EQ(edges, 13U);
  EXPECT_NE(dot.find("X_1_1 -- X_3_2;"), std::string::npos);
  EXPECT_NE(dot.find("subgraph part_3"), std::string::npos);
}

TEST(IdealFile, RoundTripWithGrid) {
  const RelationFamily f = example_family();
  const MonomialIdeal h = build_hr(f);
  const std::string text = io::write_ideal_file(grid_of(f), h.generators());
  const io::IdealFile back = io::parse_ideal_file(text);
  EXPECT_EQ(back.grid, grid_of(f));
  EXPECT_EQ(back.generators, h.generators());
}

TEST(IdealFile, CommentsAndInferredGrid) {
  const io::IdealFile file = io::parse_ideal_file("# edges\nX[1,1]*X[2,2]  # trailing\n\nX[1,2]*X[3,1]\n");
  EXPECT_EQ(file.grid, Grid(3, 2));
  EXPECT_EQ(file.generators.size(), 2U);
  expect_code(ErrorCode::Parse, [] { io::parse_ideal_file("X[1,1]*Y\n"); });
  expect_code(ErrorCode::Parse, [] { io::parse_ideal_file("# grid r=1 n=1\nX[2,1]\n"); });
}

}  // namespace
}  // namespace cmg

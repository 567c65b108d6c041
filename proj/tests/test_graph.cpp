#include <gtest/gtest.h>

#include "json.hpp"

#include "beckring/dsl.hpp"
#include "beckring/graph.hpp"
#include "oracles.hpp"

using namespace beckring;

TEST(BeckGraph, Z4IsAStar) {
  const auto g = build_graph(make_zmod(4));
  using E = std::pair<Vertex, Vertex>;
  EXPECT_EQ(g.graph().edges(), (std::vector<E>{{0, 1}, {0, 2}, {0, 3}}));
  EXPECT_TRUE(g.square_zero().test(2));
  EXPECT_TRUE(g.zero_divisors().test(2));
  EXPECT_FALSE(g.zero_divisors().test(1));
}

TEST(BeckGraph, SmallExamples) {
  EXPECT_EQ(build_graph(make_zmod(2)).graph().edge_count(), 1u);
  const auto g = build_graph(make_product({make_zmod(2), make_zmod(2)}));
  // 0 meets the three others; (1,0) ~ (0,1). (1,1) annihilates only 0.
  EXPECT_EQ(g.graph().edge_count(), 4u);
  EXPECT_TRUE(g.graph().adjacent(1, 2));
  EXPECT_FALSE(g.graph().adjacent(1, 3));
  EXPECT_EQ(build_graph(make_zmod(1)).graph().edge_count(), 0u);
}

TEST(BeckGraph, MatchesPairwiseScan) {
  for (const char *text : {"Z12", "Z2[t]/(t^2) x Z3", "AN", "Z9 x Z2"}) {
    const auto r = dsl::parse_ring(text);
    const auto g = build_graph(r);
    const auto adj = oracle::beck_adjacency(*r);
    for (Vertex u = 0; u < r->size(); ++u)
      for (Vertex v = 0; v < r->size(); ++v)
        ASSERT_EQ(g.graph().adjacent(u, v), adj[u][v]) << text;
  }
}

TEST(BeckGraph, StructuralInvariants) {
  for (const char *text : {"Z12", "Z8 x Z3", "AN", "AN2 x Z2", "Z7"}) {
    const auto g = build_graph(dsl::parse_ring(text));
    for (Vertex v = 1; v < g.order(); ++v) {
      EXPECT_TRUE(g.graph().adjacent(0, v));
      if (!g.zero_divisors().test(v))
        EXPECT_EQ(g.graph().degree(v), 1u) << text << " " << v;
    }
  }
}

TEST(BeckGraph, CapacityCap) {
  EXPECT_THROW(build_graph(make_zmod(100), 64), CapacityError);
}

TEST(Core, Sizes) {
  EXPECT_EQ(core(build_graph(make_zmod(7))).graph.order(), 1u);
  const auto c12 = core(build_graph(make_zmod(12)));
  EXPECT_EQ(c12.to_ring,
            (std::vector<Vertex>{0, 2, 3, 4, 6, 8, 9, 10}));
  EXPECT_EQ(core(build_graph(make_an_ring())).graph.order(), 16u);
}

TEST(Core, KeepsSquareZeroMarks) {
  const auto c = core(build_graph(make_zmod(8)));
  ASSERT_EQ(c.to_ring, (std::vector<Vertex>{0, 2, 4, 6}));
  EXPECT_TRUE(c.square_zero.test(0));
  EXPECT_FALSE(c.square_zero.test(1));
  EXPECT_TRUE(c.square_zero.test(2));
}

TEST(Export, Dimacs) {
  EXPECT_EQ(export_dimacs(build_graph(make_zmod(2)).graph()),
            "p edge 2 1\ne 1 2\n");
  EXPECT_EQ(export_dimacs(build_graph(make_zmod(4)).graph()),
            "p edge 4 3\ne 1 2\ne 1 3\ne 1 4\n");
  EXPECT_EQ(export_dimacs(build_graph(make_zmod(1)).graph()), "p edge 1 0\n");
}

TEST(Export, Json) {
  const auto g = build_graph(make_zmod(4));
  const std::string text = export_graph(g, ExportFormat::json);
  EXPECT_EQ(text, "{\"n\":4,\"edges\":[[0,1],[0,2],[0,3]]}\n");
  const auto j = nlohmann::json::parse(text);
  EXPECT_EQ(j["n"], 4);
  EXPECT_EQ(j["edges"].size(), 3u);
}

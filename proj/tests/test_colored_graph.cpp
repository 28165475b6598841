#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "sysgraph/constructions.hpp"
#include "sysgraph/io.hpp"

using namespace sysgraph;

namespace {

GraphError::Kind error_kind(int d, std::uint64_t n, const std::vector<ColoredEdge>& edges) {
  try {
    ColoredGraph::validate(d, n, edges);
  } catch (const GraphError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected a GraphError";
  return GraphError::Kind::BadDimension;
}

}  // namespace

TEST(Validate, SingleEdgeIsOneDimensional) {
  const std::vector<ColoredEdge> edges = {{1, 0, 1}};
  const auto g = ColoredGraph::validate(1, 2, edges);
  EXPECT_EQ(g.num_edges(), 1u);
  EXPECT_EQ(g.edges()[0], (ColoredEdge{0, 1, 1}));
  EXPECT_EQ(g.neighbor(0, 1), 1u);
}

TEST(Validate, AlternatingSixCycle) {
  const auto g = fixtures::alternating_cycle(6);
  EXPECT_EQ(g.num_edges(), 6u);
  // CP^(2) is the same cycle under another labeling.
  const auto cp2 = clique_product(2);
  EXPECT_EQ(components(cp2).num_blocks, 1u);
  EXPECT_EQ(cp2.num_edges(), 6u);
}

TEST(Validate, SixCycleWithThreeColorsFails) {
  std::vector<ColoredEdge> edges;
  for (Vertex i = 0; i < 6; ++i) edges.push_back({i, (i + 1) % 6, static_cast<Color>(i % 3 + 1)});
  const auto kind = error_kind(3, 6, edges);
  EXPECT_TRUE(kind == GraphError::Kind::NotRegular || kind == GraphError::Kind::ImproperColoring);
  // As a 2-colored graph the third color is out of range.
  EXPECT_EQ(error_kind(2, 6, edges), GraphError::Kind::ColorOutOfRange);
}

TEST(Validate, ReportsEachViolation) {
  EXPECT_EQ(error_kind(1, 2, {{0, 0, 1}, {1, 1, 1}}), GraphError::Kind::SelfLoop);
  EXPECT_EQ(error_kind(1, 2, {{0, 1, 1}, {1, 0, 1}}), GraphError::Kind::DuplicateEdge);
  EXPECT_EQ(error_kind(1, 4, {{0, 1, 1}}), GraphError::Kind::NotRegular);
  EXPECT_EQ(error_kind(1, 2, {{0, 2, 1}}), GraphError::Kind::IdOutOfRange);
  EXPECT_EQ(error_kind(2, 4, {{0, 1, 1}, {0, 2, 1}, {1, 3, 2}, {2, 3, 2}}),
            GraphError::Kind::ImproperColoring);
  EXPECT_EQ(error_kind(0, 2, {}), GraphError::Kind::BadDimension);
}

TEST(Validate, NotRegularNamesVertexAndDegree) {
  try {
    ColoredGraph::validate(2, 4, std::vector<ColoredEdge>{{0, 1, 1}, {2, 3, 1}, {0, 2, 2}});
    FAIL();
  } catch (const GraphError& e) {
    EXPECT_EQ(e.kind(), GraphError::Kind::NotRegular);
    EXPECT_EQ(e.vertex(), 1u);
    EXPECT_EQ(e.count(), 1);
  }
}

TEST(Validate, NeighborTableMatchesEdgeList) {
  const auto q = boolean_cube(4);
  std::vector<Vertex> table;
  for (Vertex v = 0; v < q.num_vertices(); ++v) {
    for (Vertex w : q.neighbors(v)) table.push_back(w);
  }
  const auto again = ColoredGraph::from_neighbor_table(4, 16, table);
  EXPECT_EQ(again.edges(), q.edges());
  table[0] = 0;
  EXPECT_THROW(ColoredGraph::from_neighbor_table(4, 16, table), GraphError);
}

TEST(Restrict, CubeMinusOneColor) {
  const auto q3 = boolean_cube(3);
  const auto sub = restrict_colors(q3, ColorSet::of({1, 2}));
  EXPECT_EQ(sub.edges.size(), 8u);
  const auto p = components(sub);
  ASSERT_EQ(p.num_blocks, 2u);
  EXPECT_EQ(p.blocks[0], (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_EQ(p.blocks[1], (std::vector<Vertex>{4, 5, 6, 7}));
}

TEST(Restrict, CliqueProductThreeIntoSixCycles) {
  const auto p = components(clique_product(3), ColorSet::of({1, 2}));
  ASSERT_EQ(p.num_blocks, 7u);
  for (const auto& b : p.blocks) EXPECT_EQ(b.size(), 6u);
}

TEST(Restrict, EmptyKeepLeavesIsolatedVertices) {
  const auto q = boolean_cube(3);
  EXPECT_TRUE(restrict_colors(q, ColorSet{}).edges.empty());
  EXPECT_EQ(components(q, ColorSet{}).num_blocks, 8u);
}

TEST(Components, Basics) {
  EXPECT_EQ(components(boolean_cube(1)).num_blocks, 1u);
  Subgraph empty{3, 5, {}};
  const auto p = components(empty);
  EXPECT_EQ(p.num_blocks, 5u);
  for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(p.block_of[v], v);
}

TEST(Components, BlockIdsFollowSmallestVertex) {
  const std::vector<ColoredEdge> edges = {{0, 3, 1}, {1, 2, 1}};
  const auto g = ColoredGraph::validate(1, 4, edges);
  const auto p = components(g);
  EXPECT_EQ(p.block_of, (std::vector<std::uint32_t>{0, 1, 1, 0}));
}

TEST(Contract, SquareGivesDoubleEdge) {
  const auto q = contract_except(boolean_cube(2), 1);
  EXPECT_EQ(q.num_nodes, 2u);
  ASSERT_EQ(q.parallel_edges.size(), 1u);
  EXPECT_EQ(q.parallel_edges[0], (QuotientEdge{0, 1, 2}));
  EXPECT_TRUE(q.self_loops.empty());
}

TEST(Contract, SixCycleGivesTriangle) {
  const auto q = contract_except(clique_product(2), 1);
  EXPECT_EQ(q.num_nodes, 3u);
  ASSERT_EQ(q.parallel_edges.size(), 3u);
  for (const auto& e : q.parallel_edges) EXPECT_EQ(e.multiplicity, 1u);
  EXPECT_TRUE(q.is_simple());
}

TEST(Contract, K4CollapsesToOneNode) {
  const auto q = contract_except(fixtures::k4(), 1);
  EXPECT_EQ(q.num_nodes, 1u);
  EXPECT_TRUE(q.parallel_edges.empty());
  EXPECT_EQ(q.self_loops, (std::vector<SelfLoopCount>{{0, 2}}));
}

TEST(Contract, CubeQuotientsAreDoubleEdges) {
  for (int d = 2; d <= 6; ++d) {
    const auto g = boolean_cube(d);
    for (Color i = 1; i <= d; ++i) {
      const auto q = contract_except(g, i);
      EXPECT_EQ(q.num_nodes, 2u);
      EXPECT_EQ(q.max_multiplicity(), std::uint64_t{1} << (d - 1));
    }
  }
}

TEST(Contract, RejectsBadColor) {
  EXPECT_THROW(contract_except(boolean_cube(2), 3), GraphError);
  EXPECT_THROW(restrict_colors(boolean_cube(2), ColorSet::of({4})), GraphError);
}

// Properties over the corpus.

TEST(GraphProperties, QuotientCountsAndNodes) {
  for (const auto& f : fixtures::graph_corpus()) {
    const auto& g = f.graph;
    for (Color i = 1; i <= g.dimension(); ++i) {
      const auto q = contract_except(g, i);
      std::uint64_t total = q.total_self_loops();
      for (const auto& e : q.parallel_edges) total += e.multiplicity;
      EXPECT_EQ(total, g.num_vertices() / 2) << f.name << " color " << i;
      EXPECT_EQ(q.num_nodes, components(restrict_colors(g, ColorSet::all_except(g.dimension(), i))).num_blocks)
          << f.name;
    }
  }
}

TEST(GraphProperties, RestrictIsMonotoneAndFullRestrictIsIdentity) {
  std::mt19937_64 rng(7);
  for (const auto& f : fixtures::graph_corpus()) {
    const auto& g = f.graph;
    const int d = g.dimension();
    EXPECT_EQ(restrict_colors(g, ColorSet::all(d)).edges, g.edges()) << f.name;
    for (int trial = 0; trial < 20; ++trial) {
      const std::uint64_t small = rng() & ColorSet::all(d).bits();
      const std::uint64_t large = small | (rng() & ColorSet::all(d).bits());
      const auto a = restrict_colors(g, ColorSet(small));
      const auto b = restrict_colors(g, ColorSet(large));
      EXPECT_TRUE(std::includes(b.edges.begin(), b.edges.end(), a.edges.begin(), a.edges.end()));
      EXPECT_EQ(a.edges.size(), std::popcount(small) * g.num_vertices() / 2);
    }
  }
}

TEST(GraphProperties, SerializationRoundTrip) {
  for (const auto& f : fixtures::graph_corpus()) {
    const auto text = io::graph_to_json(f.graph);
    const auto back = io::graph_from_json(text);
    EXPECT_EQ(back, f.graph) << f.name;
    EXPECT_EQ(io::graph_to_json(back), text);
  }
}

TEST(GraphProperties, ValidateIgnoresInputOrder) {
  std::mt19937_64 rng(11);
  for (const auto& f : fixtures::graph_corpus()) {
    auto edges = f.graph.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    for (auto& e : edges) {
      if (rng() & 1) std::swap(e.u, e.v);
    }
    EXPECT_EQ(ColoredGraph::validate(f.graph.dimension(), f.graph.num_vertices(), edges), f.graph);
  }
}

TEST(InducedComponent, CopiesOfSmallerCliqueProduct) {
  const auto cp3 = clique_product(3);
  const auto cp2 = clique_product(2);
  const auto p = components(cp3, ColorSet::all(2));
  for (const auto& block : p.blocks) EXPECT_EQ(induced_component(cp3, block, 2), cp2);
}

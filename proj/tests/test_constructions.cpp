#include <gtest/gtest.h>

#include <set>

#include "sysgraph/constructions.hpp"
#include "sysgraph/io.hpp"

using namespace sysgraph;

TEST(BooleanCube, SmallCases) {
  const auto q1 = boolean_cube(1);
  EXPECT_EQ(q1.num_vertices(), 2u);
  EXPECT_EQ(q1.edges(), (std::vector<ColoredEdge>{{0, 1, 1}}));
  const auto q2 = boolean_cube(2);
  EXPECT_EQ(q2.edges(), (std::vector<ColoredEdge>{{0, 1, 1}, {0, 2, 2}, {1, 3, 2}, {2, 3, 1}}));
  const auto q3 = boolean_cube(3);
  EXPECT_EQ(q3.num_vertices(), 8u);
  EXPECT_EQ(q3.num_edges(), 12u);
}

TEST(BooleanCube, EdgesFlipOneBit) {
  const auto q = boolean_cube(6);
  for (const auto& e : q.edges()) EXPECT_EQ(e.u ^ e.v, 1u << (e.color - 1));
}

TEST(BooleanCube, DimensionLimits) {
  EXPECT_THROW(boolean_cube(0), ConstructionError);
  try {
    boolean_cube(31);
    FAIL();
  } catch (const ConstructionError& e) {
    EXPECT_EQ(e.kind(), ConstructionError::Kind::DimensionTooLarge);
  }
}

TEST(CliqueSizes, Recurrence) {
  EXPECT_EQ(clique_size_sequence(1), (std::vector<std::uint64_t>{2}));
  EXPECT_EQ(clique_size_sequence(3), (std::vector<std::uint64_t>{2, 6, 42}));
  EXPECT_EQ(clique_size_sequence(5), (std::vector<std::uint64_t>{2, 6, 42, 1806, 3263442}));
  EXPECT_EQ(clique_size_sequence(6).back(), 3263442ull * 3263443ull);
}

TEST(CliqueSizes, OverflowReportsLargestDimension) {
  try {
    clique_size_sequence(7);
    FAIL();
  } catch (const ConstructionError& e) {
    EXPECT_EQ(e.kind(), ConstructionError::Kind::Overflow);
    EXPECT_EQ(e.largest_dimension(), 6);
  }
}

TEST(ReplaceWithClique, EdgeGivesSixCycle) {
  const auto cp2 = replace_with_clique(boolean_cube(1));
  // Hand application with m = 3: node 1 of copy j meets node 2 of copy j+1.
  const std::vector<ColoredEdge> expected = {{0, 1, 1}, {0, 3, 2}, {1, 4, 2},
                                             {2, 3, 1}, {2, 5, 2}, {4, 5, 1}};
  EXPECT_EQ(cp2.edges(), expected);
}

TEST(ReplaceWithClique, MatchingRuleIsInvolution) {
  const auto g = clique_product(3);
  const std::uint64_t n = 6;
  const std::uint64_t m = n + 1;
  for (std::uint64_t j = 0; j < m; ++j) {
    for (std::uint64_t i = 1; i <= n; ++i) {
      const Vertex v = static_cast<Vertex>(j * n + i - 1);
      const Vertex w = static_cast<Vertex>(((i + j) % m) * n + (m - i) - 1);
      EXPECT_EQ(g.neighbor(v, 3), w);
      EXPECT_EQ(g.neighbor(w, 3), v);
    }
  }
}

TEST(CliqueProduct, Sizes) {
  for (int d = 1; d <= 4; ++d) {
    const auto g = clique_product(d);
    const auto n = clique_size_sequence(d).back();
    EXPECT_EQ(g.num_vertices(), n);
    EXPECT_EQ(g.num_edges(), n * d / 2);
  }
  EXPECT_EQ(clique_product(3).num_edges(), 63u);
  EXPECT_EQ(clique_product(4).num_edges(), 3612u);
}

TEST(CliqueProduct, CopiesAreShiftedSmallerProducts) {
  for (int d = 2; d <= 4; ++d) {
    const auto big = clique_product(d);
    const auto small = clique_product(d - 1);
    const std::uint64_t n = small.num_vertices();
    const auto p = components(big, ColorSet::all(d - 1));
    ASSERT_EQ(p.num_blocks, n + 1);
    std::set<ColoredEdge> shifted;
    for (const auto& e : big.edges()) {
      if (e.color == d) continue;
      const Vertex base = static_cast<Vertex>((e.u / n) * n);
      ASSERT_EQ(e.v / n, e.u / n);
      shifted.insert({e.u - base, e.v - base, e.color});
    }
    EXPECT_EQ(std::vector<ColoredEdge>(shifted.begin(), shifted.end()), small.edges());
  }
}

TEST(CliqueProduct, Deterministic) {
  EXPECT_EQ(io::graph_to_json(clique_product(4)), io::graph_to_json(clique_product(4)));
}

TEST(BuildFamily, Dispatch) {
  EXPECT_EQ(build_family(Family::BooleanCube, 3), boolean_cube(3));
  EXPECT_EQ(build_family(Family::CliqueProduct, 3), clique_product(3));
}

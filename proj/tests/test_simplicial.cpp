#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "sysgraph/constructions.hpp"
#include "sysgraph/io.hpp"
#include "sysgraph/verifiers.hpp"

using namespace sysgraph;

namespace {

ComplexError::Kind complex_error(const RawComplex& raw) {
  try {
    ChromaticComplex::validate(raw);
  } catch (const ComplexError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected a ComplexError";
  return ComplexError::Kind::BadColorCount;
}

// Edges of the one-skeleton counted directly from facets.
std::size_t skeleton_edges(const RawComplex& c) {
  std::set<std::pair<std::int64_t, std::int64_t>> edges;
  for (const auto& f : c.facets) {
    for (std::size_t a = 0; a < f.size(); ++a) {
      for (std::size_t b = a + 1; b < f.size(); ++b) edges.insert(std::minmax(f[a], f[b]));
    }
  }
  return edges.size();
}

}  // namespace

TEST(Complex, CardsComplex) {
  const auto c = cards_complex();
  EXPECT_EQ(c.num_vertices(), 12u);
  EXPECT_EQ(c.num_facets(), 24u);
  const auto edges = skeleton_edges(c.raw());
  EXPECT_EQ(edges, 36u);
  EXPECT_EQ(12 - static_cast<long>(edges) + 24, 0);
  const std::vector<std::int64_t> first = {0, 5, 10};  // (A,1), (B,2), (C,3)
  EXPECT_EQ(c.raw().facets.front(), first);
}

TEST(Complex, CubeComplexes) {
  const auto c1 = cube_complex(1);
  EXPECT_EQ(c1.num_vertices(), 2u);
  EXPECT_EQ(c1.num_facets(), 2u);
  const auto c2 = cube_complex(2);
  EXPECT_EQ(c2.num_vertices(), 4u);
  EXPECT_EQ(c2.num_facets(), 4u);
  const auto c3 = cube_complex(3);
  EXPECT_EQ(c3.num_vertices(), 6u);
  EXPECT_EQ(c3.num_facets(), 8u);
  EXPECT_THROW(cube_complex(21), ComplexError);
}

TEST(Complex, ValidationErrors) {
  RawComplex two_facets;
  two_facets.num_colors = 2;
  two_facets.vertices = {{0, 1}, {1, 2}, {2, 1}, {3, 2}};
  two_facets.facets = {{0, 1}, {2, 3}};
  EXPECT_EQ(complex_error(two_facets), ComplexError::Kind::Branching);

  auto not_pure = cube_complex(2).raw();
  not_pure.facets[0].pop_back();
  EXPECT_EQ(complex_error(not_pure), ComplexError::Kind::NotPure);

  auto not_chromatic = cube_complex(2).raw();
  not_chromatic.facets[0] = {0, 1};
  EXPECT_EQ(complex_error(not_chromatic), ComplexError::Kind::NotChromatic);

  auto unknown = cube_complex(2).raw();
  unknown.facets[0][0] = 99;
  EXPECT_EQ(complex_error(unknown), ComplexError::Kind::UnknownVertex);

  auto duplicate = cube_complex(2).raw();
  duplicate.vertices.push_back(duplicate.vertices.front());
  EXPECT_EQ(complex_error(duplicate), ComplexError::Kind::DuplicateVertex);

  auto bad_colors = cube_complex(2).raw();
  bad_colors.num_colors = 0;
  EXPECT_EQ(complex_error(bad_colors), ComplexError::Kind::BadColorCount);
}

TEST(Complex, BranchingNamesFaceAndCount) {
  // Three edges sharing vertex 0: the face {0} lies in three facets.
  RawComplex c;
  c.num_colors = 2;
  c.vertices = {{0, 1}, {1, 2}, {2, 2}, {3, 2}};
  c.facets = {{0, 1}, {0, 2}, {0, 3}};
  try {
    ChromaticComplex::validate(c);
    FAIL();
  } catch (const ComplexError& e) {
    EXPECT_EQ(e.kind(), ComplexError::Kind::Branching);
    EXPECT_NE(e.count(), 2);
  }
}

TEST(DualGraph, CubeComplexIsBooleanCube) {
  for (int d = 1; d <= 6; ++d) EXPECT_EQ(dual_graph(cube_complex(d)).edges(), boolean_cube(d).edges()) << d;
}

TEST(DualGraph, CardsDualIsCubic) {
  const auto g = dual_graph(cards_complex());
  EXPECT_EQ(g.num_vertices(), 24u);
  EXPECT_EQ(g.dimension(), 3);
  EXPECT_EQ(g.num_edges(), 36u);
}

TEST(DualGraph, OneColorComplexGivesEdge) {
  EXPECT_EQ(dual_graph(cube_complex(1)), boolean_cube(1));
}

TEST(EmptySquares, CubeTwoIsOneSquare) {
  const auto squares = detect_empty_squares(cube_complex(2).raw());
  ASSERT_EQ(squares.size(), 1u);
  // Vertex indices 0..3 are (1,0), (1,1), (2,0), (2,1).
  EXPECT_EQ(squares[0].cycle, (std::array<std::uint32_t, 4>{0, 2, 1, 3}));
  EXPECT_EQ(detect_empty_squares(cube_complex(2).raw(), SquareFilter::AlternatingColors).size(), 1u);
}

TEST(EmptySquares, FilledSkeletonHasNone) {
  // Boundary of a tetrahedron, as a 3-colored complex would need a 4th
  // color; use the complete one-skeleton of a single 4-vertex facet instead.
  RawComplex c;
  c.num_colors = 4;
  c.vertices = {{0, 1}, {1, 2}, {2, 3}, {3, 4}};
  c.facets = {{0, 1, 2, 3}};
  EXPECT_TRUE(detect_empty_squares(c).empty());
  EXPECT_TRUE(detect_empty_triangles(c).empty());
}

TEST(EmptySquares, CycleComplexes) {
  EXPECT_EQ(detect_empty_squares(fixtures::cycle_complex(4)).size(), 1u);
  EXPECT_TRUE(detect_empty_squares(fixtures::cycle_complex(6)).empty());
  EXPECT_TRUE(detect_empty_squares(fixtures::cycle_complex(8)).empty());
}

TEST(EmptySquares, CubeThreeHasThreeSquares) {
  // The octahedron: each pair of opposite vertices spans a diagonal-free
  // 4-cycle with the remaining four.
  EXPECT_EQ(detect_empty_squares(cube_complex(3).raw()).size(), 3u);
}

TEST(EmptyTriangles, Detection) {
  EXPECT_TRUE(detect_empty_triangles(fixtures::cycle_complex(6)).empty());
  // Pairwise adjacent vertices of the cards complex hold distinct cards, so
  // every triangle is a facet.
  EXPECT_TRUE(detect_empty_triangles(cards_complex().raw()).empty());
  // Two triangles sharing an edge plus a third pair of facets closing the
  // cycle 0-1-2 without filling it.
  RawComplex c;
  c.num_colors = 3;
  c.vertices = {{0, 1}, {1, 2}, {2, 3}, {3, 3}, {4, 2}, {5, 1}};
  c.facets = {{0, 1, 3}, {0, 4, 2}, {5, 1, 2}};
  EXPECT_EQ(detect_empty_triangles(c), (std::vector<std::array<std::uint32_t, 3>>{{0, 1, 2}}));
}

TEST(ComplexProperties, DualGraphsValidateAndArePseudoCubes) {
  for (const auto& f : fixtures::complex_corpus()) {
    const auto c = ChromaticComplex::validate(f.complex);
    const auto g = dual_graph(c);
    EXPECT_EQ(g.num_vertices(), c.num_facets()) << f.name;
    EXPECT_TRUE(verify_pseudo_cube(g).verdict) << f.name;
  }
}

// Facets around a color-i vertex are exactly one component of the dual graph
// with color i removed.
TEST(ComplexProperties, StarCorrespondence) {
  std::mt19937_64 rng(3);
  auto corpus = fixtures::complex_corpus();
  for (int t = 0; t < 10; ++t) {
    corpus.push_back({"scrambled-deal3", fixtures::scramble(fixtures::deal_complex(3), rng)});
  }
  for (const auto& f : corpus) {
    const auto c = ChromaticComplex::validate(f.complex);
    const auto g = dual_graph(c);
    const auto st = stars(c);
    for (std::uint32_t v = 0; v < c.num_vertices(); ++v) {
      const Color i = c.color_of(v);
      const auto p = components(g, ColorSet::all_except(c.num_colors(), i));
      if (st[v].empty()) continue;
      const auto block = p.block_of[st[v].front()];
      std::vector<Vertex> star(st[v].begin(), st[v].end());
      std::sort(star.begin(), star.end());
      EXPECT_EQ(p.blocks[block], star) << f.name << " vertex " << v;
    }
  }
}

TEST(ComplexProperties, NoEmptySquaresImpliesDualSystolic) {
  std::mt19937_64 rng(5);
  std::vector<RawComplex> candidates;
  for (const auto& f : fixtures::complex_corpus()) candidates.push_back(f.complex);
  for (int t = 0; t < 200; ++t) candidates.push_back(fixtures::scramble(fixtures::random_cycle_union(rng), rng));
  for (int p = 2; p <= 4; ++p) {
    for (int t = 0; t < 5; ++t) candidates.push_back(fixtures::scramble(fixtures::deal_complex(p), rng));
  }
  int square_free = 0;
  for (const auto& raw : candidates) {
    const auto c = ChromaticComplex::validate(raw);
    if (!detect_empty_squares(raw).empty()) continue;
    ++square_free;
    EXPECT_TRUE(verify_dual_systolic(dual_graph(c)).verdict);
  }
  EXPECT_GT(square_free, 50);
}

TEST(ComplexProperties, JsonRoundTrip) {
  for (const auto& f : fixtures::complex_corpus()) {
    const auto text = io::complex_to_json(f.complex);
    EXPECT_EQ(io::complex_from_json(text), f.complex) << f.name;
  }
}

#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sysgraph/colored_graph.hpp"

namespace sysgraph {

struct ComplexVertex {
  std::int64_t id = 0;
  Color color = 0;

  friend bool operator==(const ComplexVertex&, const ComplexVertex&) = default;
};

/// Unvalidated complex: declared vertices plus facets given by vertex ids.
struct RawComplex {
  int num_colors = 0;
  std::vector<ComplexVertex> vertices;
  std::vector<std::vector<std::int64_t>> facets;

  friend bool operator==(const RawComplex&, const RawComplex&) = default;
};

class ComplexError : public std::runtime_error {
 public:
  enum class Kind { BadColorCount, UnknownVertex, DuplicateVertex, NotPure, NotChromatic,
                    DuplicateFacet, Branching, DimensionTooLarge };

  ComplexError(Kind kind, const std::string& message, std::size_t facet = 0,
               std::vector<std::int64_t> face = {}, std::int64_t count = 0)
      : std::runtime_error(message), kind_(kind), facet_(facet), face_(std::move(face)),
        count_(count) {}

  Kind kind() const { return kind_; }
  std::size_t facet() const { return facet_; }
  const std::vector<std::int64_t>& face() const { return face_; }
  std::int64_t count() const { return count_; }

 private:
  Kind kind_;
  std::size_t facet_;
  std::vector<std::int64_t> face_;
  std::int64_t count_;
};

const char* to_string(ComplexError::Kind kind);

/// Pure, chromatic, non-branching complex. Each facet is stored as d vertex
/// indices ordered by color: facet(f)[c-1] is the color-c vertex.
class ChromaticComplex {
 public:
  static ChromaticComplex validate(const RawComplex& raw);

  int num_colors() const { return raw_.num_colors; }
  std::size_t num_vertices() const { return raw_.vertices.size(); }
  std::size_t num_facets() const { return facets_.size(); }
  const RawComplex& raw() const { return raw_; }

  /// Vertex indices (positions in raw().vertices) by color.
  const std::vector<std::uint32_t>& facet(std::size_t f) const { return facets_[f]; }
  Color color_of(std::uint32_t vertex_index) const { return raw_.vertices[vertex_index].color; }

 private:
  RawComplex raw_;
  std::vector<std::vector<std::uint32_t>> facets_;
};

/// Vertices (i, b) for i in 1..d, b in {0,1}, with id 2(i-1)+b and color i.
/// Facet x (in integer order) is {(i, bit i-1 of x)}.
ChromaticComplex cube_complex(int d);

/// Three players (colors 1..3) and four cards; vertex (p, card) has id
/// 4(p-1) + (card-1). Facets are the 24 injective deals in lexicographic order.
ChromaticComplex cards_complex();

/// Facets are graph vertices in facet order; facets sharing a co-dimension
/// one face are joined by an edge colored with the swapped vertices' color.
ColoredGraph dual_graph(const ChromaticComplex& c);

/// One-skeleton of a raw complex: pairs of declared vertex indices that share
/// a facet. Returned as a sorted adjacency list per vertex index.
std::vector<std::vector<std::uint32_t>> one_skeleton(const RawComplex& c);

/// A 4-cycle v1-u1-v2-u2 with neither diagonal an edge, in vertex indices.
/// Canonical form: v1 is the smallest of the four and u1 < u2.
struct Square {
  std::array<std::uint32_t, 4> cycle{};  // v1, u1, v2, u2

  friend bool operator==(const Square&, const Square&) = default;
  friend auto operator<=>(const Square&, const Square&) = default;
};

enum class SquareFilter { Any, AlternatingColors };

/// Diagonal-free 4-cycles in the one-skeleton, sorted.
std::vector<Square> detect_empty_squares(const RawComplex& c,
                                         SquareFilter filter = SquareFilter::Any);

/// 3-cycles in the one-skeleton not contained in any facet, as sorted
/// triples of vertex indices.
std::vector<std::array<std::uint32_t, 3>> detect_empty_triangles(const RawComplex& c);

/// Facets containing each vertex, indexed by vertex position.
std::vector<std::vector<std::uint32_t>> stars(const ChromaticComplex& c);

}  // namespace sysgraph

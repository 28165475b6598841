#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sysgraph {

using Vertex = std::uint32_t;
// Colors are 1-based: a d-dimensional graph uses colors 1..d.
using Color = int;

inline constexpr int kMaxDimension = 63;

struct ColoredEdge {
  Vertex u = 0;
  Vertex v = 0;
  Color color = 0;

  friend bool operator==(const ColoredEdge&, const ColoredEdge&) = default;
  friend auto operator<=>(const ColoredEdge&, const ColoredEdge&) = default;
};

/// Set of colors as a bitmask; bit (c-1) set means color c is in the set.
class ColorSet {
 public:
  constexpr ColorSet() = default;
  constexpr explicit ColorSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ColorSet all(int d) {
    return ColorSet(d >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << d) - 1);
  }
  static constexpr ColorSet all_except(int d, Color c) {
    return ColorSet(all(d).bits_ & ~(std::uint64_t{1} << (c - 1)));
  }
  static ColorSet of(std::initializer_list<Color> colors) {
    ColorSet s;
    for (Color c : colors) s.insert(c);
    return s;
  }

  constexpr bool contains(Color c) const {
    return c >= 1 && c <= 64 && ((bits_ >> (c - 1)) & 1U) != 0;
  }
  constexpr void insert(Color c) { bits_ |= std::uint64_t{1} << (c - 1); }
  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool subset_of(ColorSet other) const { return (bits_ & ~other.bits_) == 0; }
  // Highest color in the set, 0 when empty.
  int max_color() const;

 private:
  std::uint64_t bits_ = 0;
};

/// Thrown by ColoredGraph::validate. Carries the first violated condition and
/// a witness vertex / edge.
class GraphError : public std::runtime_error {
 public:
  enum class Kind {
    BadDimension,
    IdOutOfRange,
    ColorOutOfRange,
    SelfLoop,
    DuplicateEdge,
    NotRegular,
    ImproperColoring,
  };

  GraphError(Kind kind, std::string message, Vertex vertex = 0, Vertex other = 0,
             Color color = 0, std::int64_t count = 0);

  Kind kind() const { return kind_; }
  Vertex vertex() const { return vertex_; }
  Vertex other() const { return other_; }
  Color color() const { return color_; }
  std::int64_t count() const { return count_; }

 private:
  Kind kind_;
  Vertex vertex_;
  Vertex other_;
  Color color_;
  std::int64_t count_;
};

const char* to_string(GraphError::Kind kind);

/// A simple d-regular graph with a proper edge d-coloring.
///
/// Immutable after construction. Adjacency is stored as a dense n*d table,
/// entry [v*d + (c-1)] being the unique color-c neighbor of v, so edge lookup
/// by (vertex, color) is O(1). The edge list is kept in canonical order:
/// u < v, sorted lexicographically by (u, v, color).
class ColoredGraph {
 public:
  ColoredGraph() = default;

  /// Checks regularity and proper coloring. Edges may be given in any order
  /// and orientation. Throws GraphError naming the first violation.
  static ColoredGraph validate(int dimension, std::uint64_t num_vertices,
                               std::span<const ColoredEdge> edges);

  /// Builds from a neighbor table (n*d entries, layout as above). The table
  /// is checked for symmetry and absence of loops/duplicates.
  static ColoredGraph from_neighbor_table(int dimension, std::uint64_t num_vertices,
                                          std::vector<Vertex> table);

  int dimension() const { return dimension_; }
  std::uint64_t num_vertices() const { return num_vertices_; }
  std::uint64_t num_edges() const { return edges_.size(); }

  const std::vector<ColoredEdge>& edges() const { return edges_; }

  Vertex neighbor(Vertex v, Color c) const {
    return table_[static_cast<std::size_t>(v) * dimension_ + (c - 1)];
  }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {table_.data() + static_cast<std::size_t>(v) * dimension_,
            static_cast<std::size_t>(dimension_)};
  }

  friend bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
    return a.dimension_ == b.dimension_ && a.num_vertices_ == b.num_vertices_ &&
           a.table_ == b.table_;
  }

 private:
  void build_edge_list();

  int dimension_ = 0;
  std::uint64_t num_vertices_ = 0;
  std::vector<Vertex> table_;
  std::vector<ColoredEdge> edges_;
};

/// Edge subgraph on the same vertex set; no regularity requirement.
struct Subgraph {
  int dimension = 0;
  std::uint64_t num_vertices = 0;
  std::vector<ColoredEdge> edges;
};

/// Vertex partition with canonical block ids: blocks are numbered in order of
/// their smallest vertex.
struct Partition {
  std::size_t num_blocks = 0;
  std::vector<std::uint32_t> block_of;
  std::vector<std::vector<Vertex>> blocks;
};

struct QuotientEdge {
  std::uint32_t a = 0;  // a < b
  std::uint32_t b = 0;
  std::uint64_t multiplicity = 0;

  friend bool operator==(const QuotientEdge&, const QuotientEdge&) = default;
};

struct SelfLoopCount {
  std::uint32_t node = 0;
  std::uint64_t count = 0;

  friend bool operator==(const SelfLoopCount&, const SelfLoopCount&) = default;
};

/// Result of contracting every edge whose color differs from `color`.
struct QuotientMultigraph {
  Color color = 0;
  std::size_t num_nodes = 0;
  std::vector<std::uint32_t> node_of;
  // Sorted by (a, b).
  std::vector<QuotientEdge> parallel_edges;
  // Sorted by node; only nodes with at least one loop appear.
  std::vector<SelfLoopCount> self_loops;

  std::uint64_t total_self_loops() const;
  std::uint64_t max_multiplicity() const;
  bool is_simple() const { return self_loops.empty() && max_multiplicity() <= 1; }
};

Subgraph restrict_colors(const ColoredGraph& g, ColorSet keep);

Partition components(const Subgraph& g);
Partition components(const ColoredGraph& g);
/// Components of the graph keeping only colors in `keep`, without
/// materializing the subgraph.
Partition components(const ColoredGraph& g, ColorSet keep);

QuotientMultigraph contract_except(const ColoredGraph& g, Color color);

/// Re-indexes one block of a partition of g as a standalone graph of the
/// given dimension (colors above `dimension` must not occur inside the block).
/// Local ids follow the sorted order of the block.
ColoredGraph induced_component(const ColoredGraph& g, std::span<const Vertex> block,
                               int dimension);

}  // namespace sysgraph

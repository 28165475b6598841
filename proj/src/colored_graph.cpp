#include "sysgraph/colored_graph.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "sysgraph/union_find.hpp"

namespace sysgraph {

int ColorSet::max_color() const { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }

GraphError::GraphError(Kind kind, std::string message, Vertex vertex, Vertex other,
                       Color color, std::int64_t count)
    : std::runtime_error(std::move(message)),
      kind_(kind),
      vertex_(vertex),
      other_(other),
      color_(color),
      count_(count) {}

const char* to_string(GraphError::Kind kind) {
  switch (kind) {
    case GraphError::Kind::BadDimension: return "BadDimension";
    case GraphError::Kind::IdOutOfRange: return "IdOutOfRange";
    case GraphError::Kind::ColorOutOfRange: return "ColorOutOfRange";
    case GraphError::Kind::SelfLoop: return "SelfLoop";
    case GraphError::Kind::DuplicateEdge: return "DuplicateEdge";
    case GraphError::Kind::NotRegular: return "NotRegular";
    case GraphError::Kind::ImproperColoring: return "ImproperColoring";
  }
  return "Unknown";
}

namespace {

std::string describe(const char* what, std::uint64_t a, std::uint64_t b = 0) {
  std::ostringstream os;
  os << what << " (" << a << ", " << b << ")";
  return os.str();
}

void check_dimension(int dimension, std::uint64_t num_vertices) {
  if (dimension < 1 || dimension > kMaxDimension) {
    throw GraphError(GraphError::Kind::BadDimension,
                     describe("dimension out of range", static_cast<std::uint64_t>(dimension)));
  }
  if (num_vertices == 0 || num_vertices > std::uint64_t{0xFFFFFFFE}) {
    throw GraphError(GraphError::Kind::BadDimension,
                     describe("vertex count out of range", num_vertices));
  }
}

constexpr Vertex kNone = ~Vertex{0};

}  // namespace

ColoredGraph ColoredGraph::validate(int dimension, std::uint64_t num_vertices,
                                    std::span<const ColoredEdge> edges) {
  check_dimension(dimension, num_vertices);
  const auto d = static_cast<std::size_t>(dimension);

  std::vector<ColoredEdge> sorted;
  sorted.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.color < 1 || e.color > dimension) {
      throw GraphError(GraphError::Kind::ColorOutOfRange,
                       describe("color out of range", static_cast<std::uint64_t>(e.color)),
                       e.u, e.v, e.color);
    }
    if (e.u >= num_vertices || e.v >= num_vertices) {
      throw GraphError(GraphError::Kind::IdOutOfRange, describe("vertex id out of range", e.u, e.v),
                       e.u, e.v, e.color);
    }
    if (e.u == e.v) {
      throw GraphError(GraphError::Kind::SelfLoop, describe("self-loop at vertex", e.u), e.u, e.v,
                       e.color);
    }
    sorted.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.color});
  }
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].u == sorted[i - 1].u && sorted[i].v == sorted[i - 1].v) {
      throw GraphError(GraphError::Kind::DuplicateEdge,
                       describe("repeated edge", sorted[i].u, sorted[i].v), sorted[i].u,
                       sorted[i].v, sorted[i].color);
    }
  }

  std::vector<std::uint32_t> degree(num_vertices, 0);
  for (const auto& e : sorted) {
    ++degree[e.u];
    ++degree[e.v];
  }
  for (Vertex v = 0; v < num_vertices; ++v) {
    if (degree[v] != d) {
      throw GraphError(GraphError::Kind::NotRegular, describe("vertex has wrong degree", v, degree[v]),
                       v, 0, 0, degree[v]);
    }
  }

  std::vector<Vertex> table(num_vertices * d, kNone);
  auto place = [&](Vertex at, Vertex to, Color c) {
    auto& slot = table[static_cast<std::size_t>(at) * d + (c - 1)];
    if (slot != kNone) {
      // Degree is exactly d, so a repeated color means two incident edges of c.
      throw GraphError(GraphError::Kind::ImproperColoring,
                       describe("vertex has repeated color", at, static_cast<std::uint64_t>(c)), at,
                       0, c, 2);
    }
    slot = to;
  };
  for (const auto& e : sorted) {
    place(e.u, e.v, e.color);
    place(e.v, e.u, e.color);
  }

  ColoredGraph g;
  g.dimension_ = dimension;
  g.num_vertices_ = num_vertices;
  g.table_ = std::move(table);
  g.edges_ = std::move(sorted);
  return g;
}

ColoredGraph ColoredGraph::from_neighbor_table(int dimension, std::uint64_t num_vertices,
                                               std::vector<Vertex> table) {
  check_dimension(dimension, num_vertices);
  const auto d = static_cast<std::size_t>(dimension);
  if (table.size() != num_vertices * d) {
    throw GraphError(GraphError::Kind::NotRegular, "neighbor table has wrong size");
  }
  std::vector<Vertex> sorted_row(d);
  for (Vertex v = 0; v < num_vertices; ++v) {
    for (Color c = 1; c <= dimension; ++c) {
      const Vertex w = table[v * d + (c - 1)];
      if (w >= num_vertices) {
        throw GraphError(GraphError::Kind::IdOutOfRange, describe("neighbor out of range", v, w), v,
                         w, c);
      }
      if (w == v) {
        throw GraphError(GraphError::Kind::SelfLoop, describe("self-loop at vertex", v), v, v, c);
      }
      if (table[w * d + (c - 1)] != v) {
        throw GraphError(GraphError::Kind::ImproperColoring,
                         describe("asymmetric color matching", v, w), v, w, c);
      }
    }
    auto row = std::span<const Vertex>(table).subspan(v * d, d);
    std::copy(row.begin(), row.end(), sorted_row.begin());
    std::sort(sorted_row.begin(), sorted_row.end());
    if (std::adjacent_find(sorted_row.begin(), sorted_row.end()) != sorted_row.end()) {
      throw GraphError(GraphError::Kind::DuplicateEdge, describe("repeated neighbor at", v), v);
    }
  }
  ColoredGraph g;
  g.dimension_ = dimension;
  g.num_vertices_ = num_vertices;
  g.table_ = std::move(table);
  g.build_edge_list();
  return g;
}

void ColoredGraph::build_edge_list() {
  const auto d = static_cast<std::size_t>(dimension_);
  edges_.clear();
  edges_.reserve(num_vertices_ * d / 2);
  std::vector<ColoredEdge> row;
  row.reserve(d);
  for (Vertex v = 0; v < num_vertices_; ++v) {
    row.clear();
    for (Color c = 1; c <= dimension_; ++c) {
      const Vertex w = table_[v * d + (c - 1)];
      if (v < w) row.push_back({v, w, c});
    }
    std::sort(row.begin(), row.end());
    edges_.insert(edges_.end(), row.begin(), row.end());
  }
}

std::uint64_t QuotientMultigraph::total_self_loops() const {
  std::uint64_t total = 0;
  for (const auto& l : self_loops) total += l.count;
  return total;
}

std::uint64_t QuotientMultigraph::max_multiplicity() const {
  std::uint64_t best = 0;
  for (const auto& e : parallel_edges) best = std::max(best, e.multiplicity);
  return best;
}

Subgraph restrict_colors(const ColoredGraph& g, ColorSet keep) {
  if (!keep.subset_of(ColorSet::all(g.dimension()))) {
    throw GraphError(GraphError::Kind::ColorOutOfRange, "restrict: color set exceeds dimension", 0,
                     0, keep.max_color());
  }
  Subgraph sub{g.dimension(), g.num_vertices(), {}};
  for (const auto& e : g.edges()) {
    if (keep.contains(e.color)) sub.edges.push_back(e);
  }
  return sub;
}

namespace {

Partition canonical_partition(DisjointSets& sets) {
  const std::size_t n = sets.size();
  Partition p;
  p.block_of.assign(n, 0);
  std::vector<std::uint32_t> id_of_root(n, ~std::uint32_t{0});
  for (std::uint32_t v = 0; v < n; ++v) {
    const auto root = sets.find(v);
    if (id_of_root[root] == ~std::uint32_t{0}) {
      id_of_root[root] = static_cast<std::uint32_t>(p.blocks.size());
      p.blocks.emplace_back();
    }
    p.block_of[v] = id_of_root[root];
    p.blocks[id_of_root[root]].push_back(v);
  }
  p.num_blocks = p.blocks.size();
  return p;
}

}  // namespace

Partition components(const Subgraph& g) {
  DisjointSets sets(g.num_vertices);
  for (const auto& e : g.edges) sets.unite(e.u, e.v);
  return canonical_partition(sets);
}

Partition components(const ColoredGraph& g) { return components(g, ColorSet::all(g.dimension())); }

Partition components(const ColoredGraph& g, ColorSet keep) {
  DisjointSets sets(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    for (Color c = 1; c <= g.dimension(); ++c) {
      if (!keep.contains(c)) continue;
      const Vertex w = g.neighbor(v, c);
      if (v < w) sets.unite(v, w);
    }
  }
  return canonical_partition(sets);
}

QuotientMultigraph contract_except(const ColoredGraph& g, Color color) {
  if (color < 1 || color > g.dimension()) {
    throw GraphError(GraphError::Kind::ColorOutOfRange, "contract_except: color out of range", 0, 0,
                     color);
  }
  auto parts = components(g, ColorSet::all_except(g.dimension(), color));

  QuotientMultigraph q;
  q.color = color;
  q.num_nodes = parts.num_blocks;
  q.node_of = std::move(parts.block_of);

  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  std::vector<std::uint32_t> loops;
  pairs.reserve(g.num_vertices() / 2);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const Vertex w = g.neighbor(v, color);
    if (w < v) continue;
    const auto a = q.node_of[v];
    const auto b = q.node_of[w];
    if (a == b) {
      loops.push_back(a);
    } else {
      pairs.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  std::sort(pairs.begin(), pairs.end());
  for (std::size_t i = 0; i < pairs.size();) {
    std::size_t j = i;
    while (j < pairs.size() && pairs[j] == pairs[i]) ++j;
    q.parallel_edges.push_back({pairs[i].first, pairs[i].second, j - i});
    i = j;
  }
  std::sort(loops.begin(), loops.end());
  for (std::size_t i = 0; i < loops.size();) {
    std::size_t j = i;
    while (j < loops.size() && loops[j] == loops[i]) ++j;
    q.self_loops.push_back({loops[i], j - i});
    i = j;
  }
  return q;
}

ColoredGraph induced_component(const ColoredGraph& g, std::span<const Vertex> block,
                               int dimension) {
  // Blocks from a Partition are sorted, so binary search gives the local id.
  const auto local_of = [&](Vertex v) -> Vertex {
    auto it = std::lower_bound(block.begin(), block.end(), v);
    if (it == block.end() || *it != v) {
      throw GraphError(GraphError::Kind::NotRegular, "component is not closed under its colors", v);
    }
    return static_cast<Vertex>(it - block.begin());
  };
  std::vector<Vertex> table;
  table.reserve(block.size() * static_cast<std::size_t>(dimension));
  for (Vertex v : block) {
    for (Color c = 1; c <= dimension; ++c) table.push_back(local_of(g.neighbor(v, c)));
  }
  return ColoredGraph::from_neighbor_table(dimension, block.size(), std::move(table));
}

}  // namespace sysgraph

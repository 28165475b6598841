#include "sysgraph/constructions.hpp"

#include <string>

namespace sysgraph {

ColoredGraph boolean_cube(int d) {
  if (d < 1 || d > kMaxCubeDimension) {
    throw ConstructionError(ConstructionError::Kind::DimensionTooLarge,
                            "boolean cube dimension must be in 1.." +
                                std::to_string(kMaxCubeDimension));
  }
  const std::uint64_t n = std::uint64_t{1} << d;
  std::vector<Vertex> table(n * static_cast<std::uint64_t>(d));
  for (std::uint64_t x = 0; x < n; ++x) {
    for (int i = 1; i <= d; ++i) {
      table[x * d + (i - 1)] = static_cast<Vertex>(x ^ (std::uint64_t{1} << (i - 1)));
    }
  }
  return ColoredGraph::from_neighbor_table(d, n, std::move(table));
}

std::vector<std::uint64_t> clique_size_sequence(int d) {
  if (d < 1) {
    throw ConstructionError(ConstructionError::Kind::DimensionTooLarge, "dimension must be >= 1");
  }
  std::vector<std::uint64_t> sizes{2};
  while (static_cast<int>(sizes.size()) < d) {
    const std::uint64_t prev = sizes.back();
    // prev * (prev + 1) <= 2^53 requires prev < 2^27 at the very least.
    if (prev >= (std::uint64_t{1} << 27) || prev * (prev + 1) > kMaxCliqueProductSize) {
      const int largest = static_cast<int>(sizes.size());
      throw ConstructionError(ConstructionError::Kind::Overflow,
                              "n^(d) exceeds 2^53; largest representable dimension is " +
                                  std::to_string(largest),
                              largest);
    }
    sizes.push_back(prev * (prev + 1));
  }
  return sizes;
}

ColoredGraph replace_with_clique(const ColoredGraph& g) {
  const std::uint64_t n = g.num_vertices();
  const std::uint64_t m = n + 1;
  const int d_in = g.dimension();
  const int d = d_in + 1;
  const std::uint64_t total = n * m;
  if (total > std::uint64_t{0xFFFFFFFE}) {
    throw ConstructionError(ConstructionError::Kind::Overflow,
                            "replacement product does not fit 32-bit vertex ids");
  }

  std::vector<Vertex> table(total * static_cast<std::uint64_t>(d));
  for (std::uint64_t j = 0; j < m; ++j) {
    const std::uint64_t base = j * n;
    for (std::uint64_t local = 0; local < n; ++local) {
      const std::uint64_t v = base + local;
      for (Color c = 1; c <= d_in; ++c) {
        table[v * d + (c - 1)] = static_cast<Vertex>(base + g.neighbor(static_cast<Vertex>(local), c));
      }
      const std::uint64_t i = local + 1;
      const std::uint64_t partner_label = m - i;  // -i mod m, never 0
      const std::uint64_t partner_copy = (i + j) % m;
      table[v * d + (d - 1)] = static_cast<Vertex>(partner_copy * n + (partner_label - 1));
    }
  }
  // from_neighbor_table re-checks that the new color is a fixed-point-free
  // involution and that the result is simple.
  return ColoredGraph::from_neighbor_table(d, total, std::move(table));
}

ColoredGraph clique_product(int d) {
  clique_size_sequence(d);  // overflow guard
  const ColoredEdge single{0, 1, 1};
  auto g = ColoredGraph::validate(1, 2, std::span(&single, 1));
  for (int k = 2; k <= d; ++k) g = replace_with_clique(g);
  return g;
}

ColoredGraph build_family(Family family, int d) {
  return family == Family::BooleanCube ? boolean_cube(d) : clique_product(d);
}

}  // namespace sysgraph

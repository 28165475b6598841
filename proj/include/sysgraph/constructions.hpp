#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sysgraph/colored_graph.hpp"

namespace sysgraph {

class ConstructionError : public std::runtime_error {
 public:
  enum class Kind { DimensionTooLarge, Overflow };

  ConstructionError(Kind kind, const std::string& message, int largest_dimension = 0)
      : std::runtime_error(message), kind_(kind), largest_dimension_(largest_dimension) {}

  Kind kind() const { return kind_; }
  /// For Overflow: the largest dimension whose size is representable.
  int largest_dimension() const { return largest_dimension_; }

 private:
  Kind kind_;
  int largest_dimension_;
};

enum class Family { BooleanCube, CliqueProduct };

inline constexpr int kMaxCubeDimension = 30;
// Sizes n^(d) must stay at or below 2^53.
inline constexpr std::uint64_t kMaxCliqueProductSize = std::uint64_t{1} << 53;

/// Q_d: vertices are d-bit integers, x ~ x ^ (1 << (i-1)) with color i.
ColoredGraph boolean_cube(int d);

/// [n^(1), ..., n^(d)] with n^(1) = 2 and n^(k) = n^(k-1) (n^(k-1) + 1).
std::vector<std::uint64_t> clique_size_sequence(int d);

/// One replacement step: m = n + 1 relabeled copies of g plus a perfect
/// matching of the new color d+1. With 1-based local labels i in 1..n, node i
/// of copy j is joined to node m - i of copy (i + j) mod m. Copy j occupies
/// global ids j*n .. j*n + n - 1.
ColoredGraph replace_with_clique(const ColoredGraph& g);

/// CP^(d): a single edge for d = 1, otherwise replace_with_clique(CP^(d-1)).
ColoredGraph clique_product(int d);

ColoredGraph build_family(Family family, int d);

}  // namespace sysgraph

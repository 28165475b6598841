#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sysgraph/colored_graph.hpp"
#include "sysgraph/simplicial.hpp"

namespace fixtures {

// What is known about a fixture independently of the verifiers.
struct Tags {
  bool pseudo_cube = false;
  bool dual_systolic = false;
  bool weak_pseudo_cube = false;
  bool weakly_dual_systolic = false;
};

struct NamedGraph {
  std::string name;
  sysgraph::ColoredGraph graph;
  Tags tags;
};

struct NamedComplex {
  std::string name;
  sysgraph::RawComplex complex;
};

// K_4 with its proper 3-edge-coloring.
sysgraph::ColoredGraph k4();
// Cycle of length n (even) with colors alternating 1, 2.
sysgraph::ColoredGraph alternating_cycle(std::uint32_t n);

std::vector<NamedGraph> graph_corpus();
std::vector<NamedComplex> complex_corpus();

// Complex with p players (colors) and p + 1 cards; facets are injective deals.
sysgraph::RawComplex deal_complex(int players);
// d = 2 complex whose one-skeleton is a cycle of the given even length.
sysgraph::RawComplex cycle_complex(int length, std::int64_t first_id = 0);
// Random relabeling of ids and shuffling of facets and facet entries.
sysgraph::RawComplex scramble(const sysgraph::RawComplex& c, std::mt19937_64& rng);
// Disjoint union of random even cycles of length >= 4.
sysgraph::RawComplex random_cycle_union(std::mt19937_64& rng);

}  // namespace fixtures

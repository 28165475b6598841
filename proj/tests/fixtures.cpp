#include "fixtures.hpp"

#include <algorithm>
#include <numeric>

#include "sysgraph/constructions.hpp"

namespace fixtures {

using namespace sysgraph;

ColoredGraph k4() {
  const std::vector<ColoredEdge> edges = {{0, 1, 1}, {2, 3, 1}, {0, 2, 2},
                                          {1, 3, 2}, {0, 3, 3}, {1, 2, 3}};
  return ColoredGraph::validate(3, 4, edges);
}

ColoredGraph alternating_cycle(std::uint32_t n) {
  std::vector<ColoredEdge> edges;
  for (std::uint32_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, static_cast<Color>(i % 2 + 1)});
  return ColoredGraph::validate(2, n, edges);
}

std::vector<NamedGraph> graph_corpus() {
  std::vector<NamedGraph> out;
  const Tags cube_tags{true, false, true, false};
  const Tags matching{true, true, true, true};
  out.push_back({"Q1", boolean_cube(1), matching});
  for (int d = 2; d <= 5; ++d) out.push_back({"Q" + std::to_string(d), boolean_cube(d), cube_tags});
  for (int d = 2; d <= 3; ++d) {
    out.push_back({"CP" + std::to_string(d), clique_product(d), {false, false, false, true}});
  }
  // Cycles of length >= 6 with alternating colors: both quotients are cycles
  // of length n/2 >= 3, hence simple.
  for (std::uint32_t n : {6u, 8u, 10u}) {
    out.push_back({"C" + std::to_string(n), alternating_cycle(n), {true, true, true, true}});
  }
  out.push_back({"C4", alternating_cycle(4), cube_tags});
  out.push_back({"K4", k4(), {}});
  out.push_back({"cards-dual", dual_graph(cards_complex()), {true, false, false, false}});
  return out;
}

RawComplex deal_complex(int players) {
  RawComplex c;
  c.num_colors = players;
  const int cards = players + 1;
  for (int p = 1; p <= players; ++p) {
    for (int k = 0; k < cards; ++k) c.vertices.push_back({(p - 1) * cards + k, p});
  }
  std::vector<int> deck(cards);
  std::iota(deck.begin(), deck.end(), 0);
  do {
    std::vector<std::int64_t> facet;
    for (int p = 1; p <= players; ++p) facet.push_back((p - 1) * cards + deck[p - 1]);
    if (std::find(c.facets.begin(), c.facets.end(), facet) == c.facets.end()) c.facets.push_back(facet);
  } while (std::next_permutation(deck.begin(), deck.end()));
  return c;
}

RawComplex cycle_complex(int length, std::int64_t first_id) {
  RawComplex c;
  c.num_colors = 2;
  for (int i = 0; i < length; ++i) c.vertices.push_back({first_id + i, i % 2 + 1});
  for (int i = 0; i < length; ++i) {
    c.facets.push_back({first_id + i, first_id + (i + 1) % length});
  }
  return c;
}

RawComplex scramble(const RawComplex& c, std::mt19937_64& rng) {
  std::vector<std::int64_t> ids;
  for (const auto& v : c.vertices) ids.push_back(v.id);
  std::vector<std::int64_t> shuffled = ids;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  auto relabel = [&](std::int64_t id) {
    return shuffled[std::find(ids.begin(), ids.end(), id) - ids.begin()] + 1000;
  };
  RawComplex out;
  out.num_colors = c.num_colors;
  for (const auto& v : c.vertices) out.vertices.push_back({relabel(v.id), v.color});
  std::shuffle(out.vertices.begin(), out.vertices.end(), rng);
  for (const auto& f : c.facets) {
    std::vector<std::int64_t> g;
    for (auto id : f) g.push_back(relabel(id));
    std::shuffle(g.begin(), g.end(), rng);
    out.facets.push_back(g);
  }
  std::shuffle(out.facets.begin(), out.facets.end(), rng);
  return out;
}

RawComplex random_cycle_union(std::mt19937_64& rng) {
  RawComplex out;
  out.num_colors = 2;
  const int parts = static_cast<int>(rng() % 3) + 1;
  std::int64_t next = 0;
  for (int p = 0; p < parts; ++p) {
    const int length = 2 * (static_cast<int>(rng() % 5) + 2);
    const auto cyc = cycle_complex(length, next);
    next += length;
    out.vertices.insert(out.vertices.end(), cyc.vertices.begin(), cyc.vertices.end());
    out.facets.insert(out.facets.end(), cyc.facets.begin(), cyc.facets.end());
  }
  return out;
}

std::vector<NamedComplex> complex_corpus() {
  std::vector<NamedComplex> out;
  for (int d = 1; d <= 4; ++d) out.push_back({"cube" + std::to_string(d), cube_complex(d).raw()});
  out.push_back({"cards", cards_complex().raw()});
  for (int p = 2; p <= 4; ++p) out.push_back({"deal" + std::to_string(p), deal_complex(p)});
  for (int len : {4, 6, 8}) out.push_back({"cycle" + std::to_string(len), cycle_complex(len)});
  return out;
}

}  // namespace fixtures

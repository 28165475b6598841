#include "sysgraph/simplicial.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace sysgraph {

const char* to_string(ComplexError::Kind kind) {
  switch (kind) {
    case ComplexError::Kind::BadColorCount: return "BadColorCount";
    case ComplexError::Kind::UnknownVertex: return "UnknownVertex";
    case ComplexError::Kind::DuplicateVertex: return "DuplicateVertex";
    case ComplexError::Kind::NotPure: return "NotPure";
    case ComplexError::Kind::NotChromatic: return "NotChromatic";
    case ComplexError::Kind::DuplicateFacet: return "DuplicateFacet";
    case ComplexError::Kind::Branching: return "Branching";
    case ComplexError::Kind::DimensionTooLarge: return "DimensionTooLarge";
  }
  return "Unknown";
}

namespace {

constexpr std::uint32_t kHole = ~std::uint32_t{0};

// A co-dimension one face: the facet's by-color vertex list with one slot
// blanked out.
using FaceKey = std::vector<std::uint32_t>;

FaceKey face_without(const std::vector<std::uint32_t>& facet, std::size_t slot) {
  FaceKey key = facet;
  key[slot] = kHole;
  return key;
}

}  // namespace

ChromaticComplex ChromaticComplex::validate(const RawComplex& raw) {
  const int d = raw.num_colors;
  if (d < 1 || d > kMaxDimension) {
    throw ComplexError(ComplexError::Kind::BadColorCount, "number of colors out of range");
  }
  std::unordered_map<std::int64_t, std::uint32_t> index_of;
  for (std::uint32_t i = 0; i < raw.vertices.size(); ++i) {
    const auto& v = raw.vertices[i];
    if (v.color < 1 || v.color > d) {
      throw ComplexError(ComplexError::Kind::BadColorCount,
                         "vertex " + std::to_string(v.id) + " has color out of range");
    }
    if (!index_of.emplace(v.id, i).second) {
      throw ComplexError(ComplexError::Kind::DuplicateVertex,
                         "vertex " + std::to_string(v.id) + " declared twice");
    }
  }

  ChromaticComplex c;
  c.raw_ = raw;
  c.facets_.reserve(raw.facets.size());
  for (std::size_t f = 0; f < raw.facets.size(); ++f) {
    const auto& facet = raw.facets[f];
    if (static_cast<int>(facet.size()) != d) {
      throw ComplexError(ComplexError::Kind::NotPure,
                         "facet " + std::to_string(f) + " has " + std::to_string(facet.size()) +
                             " vertices, expected " + std::to_string(d),
                         f, facet);
    }
    std::vector<std::uint32_t> by_color(d, kHole);
    for (auto id : facet) {
      auto it = index_of.find(id);
      if (it == index_of.end()) {
        throw ComplexError(ComplexError::Kind::UnknownVertex,
                           "facet " + std::to_string(f) + " references undeclared vertex " +
                               std::to_string(id),
                           f, facet);
      }
      auto& slot = by_color[raw.vertices[it->second].color - 1];
      if (slot != kHole) {
        // d vertices and a repeated color means some color is missing.
        break;
      }
      slot = it->second;
    }
    for (int color = 1; color <= d; ++color) {
      if (by_color[color - 1] == kHole) {
        throw ComplexError(ComplexError::Kind::NotChromatic,
                           "facet " + std::to_string(f) + " is missing color " +
                               std::to_string(color),
                           f, facet, color);
      }
    }
    c.facets_.push_back(std::move(by_color));
  }

  {
    std::map<std::vector<std::uint32_t>, std::size_t> seen;
    for (std::size_t f = 0; f < c.facets_.size(); ++f) {
      if (!seen.emplace(c.facets_[f], f).second) {
        throw ComplexError(ComplexError::Kind::DuplicateFacet,
                           "facet " + std::to_string(f) + " repeats an earlier facet", f,
                           raw.facets[f]);
      }
    }
  }

  std::map<FaceKey, std::int64_t> face_count;
  for (const auto& facet : c.facets_) {
    for (std::size_t slot = 0; slot < facet.size(); ++slot) ++face_count[face_without(facet, slot)];
  }
  for (const auto& [face, count] : face_count) {
    if (count != 2) {
      std::vector<std::int64_t> ids;
      for (auto idx : face) {
        if (idx != kHole) ids.push_back(raw.vertices[idx].id);
      }
      throw ComplexError(ComplexError::Kind::Branching,
                         "co-dimension one face lies in " + std::to_string(count) +
                             " facets, expected 2",
                         0, ids, count);
    }
  }
  return c;
}

ChromaticComplex cube_complex(int d) {
  if (d < 1 || d > 20) {
    throw ComplexError(ComplexError::Kind::DimensionTooLarge, "cube complex dimension must be in 1..20");
  }
  RawComplex raw;
  raw.num_colors = d;
  for (int i = 1; i <= d; ++i) {
    for (int b = 0; b <= 1; ++b) raw.vertices.push_back({2 * (i - 1) + b, i});
  }
  const std::uint64_t count = std::uint64_t{1} << d;
  raw.facets.reserve(count);
  for (std::uint64_t x = 0; x < count; ++x) {
    std::vector<std::int64_t> facet;
    for (int i = 1; i <= d; ++i) facet.push_back(2 * (i - 1) + static_cast<int>((x >> (i - 1)) & 1U));
    raw.facets.push_back(std::move(facet));
  }
  return ChromaticComplex::validate(raw);
}

ChromaticComplex cards_complex() {
  constexpr int kPlayers = 3;
  constexpr int kCards = 4;
  RawComplex raw;
  raw.num_colors = kPlayers;
  for (int p = 1; p <= kPlayers; ++p) {
    for (int card = 1; card <= kCards; ++card) raw.vertices.push_back({kCards * (p - 1) + (card - 1), p});
  }
  for (int a = 1; a <= kCards; ++a) {
    for (int b = 1; b <= kCards; ++b) {
      for (int c = 1; c <= kCards; ++c) {
        if (a == b || b == c || a == c) continue;
        raw.facets.push_back({a - 1, kCards + b - 1, 2 * kCards + c - 1});
      }
    }
  }
  return ChromaticComplex::validate(raw);
}

ColoredGraph dual_graph(const ChromaticComplex& c) {
  const int d = c.num_colors();
  std::map<FaceKey, std::uint32_t> first_owner;
  std::vector<ColoredEdge> edges;
  edges.reserve(c.num_facets() * d / 2);
  for (std::uint32_t f = 0; f < c.num_facets(); ++f) {
    const auto& facet = c.facet(f);
    for (std::size_t slot = 0; slot < facet.size(); ++slot) {
      auto key = face_without(facet, slot);
      auto [it, inserted] = first_owner.emplace(std::move(key), f);
      if (!inserted) edges.push_back({it->second, f, static_cast<Color>(slot + 1)});
    }
  }
  return ColoredGraph::validate(d, c.num_facets(), edges);
}

std::vector<std::vector<std::uint32_t>> one_skeleton(const RawComplex& c) {
  std::unordered_map<std::int64_t, std::uint32_t> index_of;
  for (std::uint32_t i = 0; i < c.vertices.size(); ++i) index_of.emplace(c.vertices[i].id, i);
  std::vector<std::set<std::uint32_t>> adj(c.vertices.size());
  for (const auto& facet : c.facets) {
    for (std::size_t a = 0; a < facet.size(); ++a) {
      for (std::size_t b = a + 1; b < facet.size(); ++b) {
        const auto x = index_of.at(facet[a]);
        const auto y = index_of.at(facet[b]);
        if (x == y) continue;
        adj[x].insert(y);
        adj[y].insert(x);
      }
    }
  }
  std::vector<std::vector<std::uint32_t>> out(adj.size());
  for (std::size_t v = 0; v < adj.size(); ++v) out[v].assign(adj[v].begin(), adj[v].end());
  return out;
}

std::vector<Square> detect_empty_squares(const RawComplex& c, SquareFilter filter) {
  const auto adj = one_skeleton(c);
  const auto n = static_cast<std::uint32_t>(adj.size());
  auto adjacent = [&](std::uint32_t a, std::uint32_t b) {
    return std::binary_search(adj[a].begin(), adj[a].end(), b);
  };

  std::vector<Square> out;
  std::vector<std::uint32_t> common;
  for (std::uint32_t v1 = 0; v1 < n; ++v1) {
    for (std::uint32_t v2 = v1 + 1; v2 < n; ++v2) {
      if (adjacent(v1, v2)) continue;
      common.clear();
      std::set_intersection(adj[v1].begin(), adj[v1].end(), adj[v2].begin(), adj[v2].end(),
                            std::back_inserter(common));
      for (std::size_t a = 0; a < common.size(); ++a) {
        const auto u1 = common[a];
        if (u1 < v1) continue;
        for (std::size_t b = a + 1; b < common.size(); ++b) {
          const auto u2 = common[b];
          if (adjacent(u1, u2)) continue;
          if (filter == SquareFilter::AlternatingColors &&
              (c.vertices[v1].color != c.vertices[v2].color ||
               c.vertices[u1].color != c.vertices[u2].color)) {
            continue;
          }
          out.push_back({{v1, u1, v2, u2}});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::array<std::uint32_t, 3>> detect_empty_triangles(const RawComplex& c) {
  const auto adj = one_skeleton(c);
  std::unordered_map<std::int64_t, std::uint32_t> index_of;
  for (std::uint32_t i = 0; i < c.vertices.size(); ++i) index_of.emplace(c.vertices[i].id, i);
  std::set<std::array<std::uint32_t, 3>> filled;
  for (const auto& facet : c.facets) {
    std::vector<std::uint32_t> idx;
    for (auto id : facet) idx.push_back(index_of.at(id));
    std::sort(idx.begin(), idx.end());
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = a + 1; b < idx.size(); ++b)
        for (std::size_t e = b + 1; e < idx.size(); ++e) filled.insert({idx[a], idx[b], idx[e]});
  }
  std::vector<std::array<std::uint32_t, 3>> out;
  for (std::uint32_t a = 0; a < adj.size(); ++a) {
    for (auto b : adj[a]) {
      if (b <= a) continue;
      for (auto e : adj[b]) {
        if (e <= b) continue;
        if (!std::binary_search(adj[a].begin(), adj[a].end(), e)) continue;
        std::array<std::uint32_t, 3> t{a, b, e};
        if (!filled.contains(t)) out.push_back(t);
      }
    }
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> stars(const ChromaticComplex& c) {
  std::vector<std::vector<std::uint32_t>> out(c.num_vertices());
  for (std::uint32_t f = 0; f < c.num_facets(); ++f) {
    for (auto v : c.facet(f)) out[v].push_back(f);
  }
  return out;
}

}  // namespace sysgraph

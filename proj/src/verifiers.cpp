#include "sysgraph/verifiers.hpp"

#include <algorithm>
#include <deque>
#include <memory>

namespace sysgraph {

const char* to_string(Property p) {
  switch (p) {
    case Property::PseudoCube: return "pseudo-cube";
    case Property::DualSystolic: return "dual-systolic";
    case Property::WeakPseudoCube: return "weak-pseudo-cube";
    case Property::WeaklyDualSystolic: return "weakly-dual-systolic";
  }
  return "unknown";
}

const char* to_string(Witness::Kind k) {
  switch (k) {
    case Witness::Kind::SelfLoopEdge: return "SelfLoopEdge";
    case Witness::Kind::ParallelEdgePair: return "ParallelEdgePair";
    case Witness::Kind::BadComponent: return "BadComponent";
  }
  return "Unknown";
}

namespace {

// Maps local vertex ids of a re-indexed component back to the caller's ids.
// Empty means identity.
using IdMap = std::vector<Vertex>;

Vertex to_global(const IdMap& ids, Vertex v) { return ids.empty() ? v : ids[v]; }

ColoredEdge global_edge(const IdMap& ids, Vertex a, Vertex b, Color c) {
  Vertex u = to_global(ids, a);
  Vertex v = to_global(ids, b);
  if (u > v) std::swap(u, v);
  return {u, v, c};
}

std::optional<Witness> self_loop_witness(const ColoredGraph& g, const QuotientMultigraph& q,
                                         const IdMap& ids, int depth) {
  if (q.self_loops.empty()) return std::nullopt;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const Vertex w = g.neighbor(v, q.color);
    if (v < w && q.node_of[v] == q.node_of[w]) {
      Witness wit;
      wit.kind = Witness::Kind::SelfLoopEdge;
      wit.color = q.color;
      wit.depth = depth;
      wit.edges.push_back(global_edge(ids, v, w, q.color));
      wit.component_ids = {q.node_of[v]};
      return wit;
    }
  }
  return std::nullopt;
}

std::optional<Witness> parallel_witness(const ColoredGraph& g, const QuotientMultigraph& q,
                                        const IdMap& ids, int depth) {
  auto bad = std::find_if(q.parallel_edges.begin(), q.parallel_edges.end(),
                          [](const QuotientEdge& e) { return e.multiplicity > 1; });
  if (bad == q.parallel_edges.end()) return std::nullopt;
  Witness wit;
  wit.kind = Witness::Kind::ParallelEdgePair;
  wit.color = q.color;
  wit.depth = depth;
  wit.component_ids = {bad->a, bad->b};
  wit.multiplicity = bad->multiplicity;
  for (Vertex v = 0; v < g.num_vertices() && wit.edges.size() < 2; ++v) {
    const Vertex w = g.neighbor(v, q.color);
    if (v >= w) continue;
    const auto a = std::min(q.node_of[v], q.node_of[w]);
    const auto b = std::max(q.node_of[v], q.node_of[w]);
    if (a == bad->a && b == bad->b) wit.edges.push_back(global_edge(ids, v, w, q.color));
  }
  std::sort(wit.edges.begin(), wit.edges.end());
  return wit;
}

std::optional<Witness> check_color(const ColoredGraph& g, Color color, bool require_simple,
                                   const IdMap& ids, int depth) {
  const auto q = contract_except(g, color);
  if (auto w = self_loop_witness(g, q, ids, depth)) return w;
  if (require_simple) return parallel_witness(g, q, ids, depth);
  return std::nullopt;
}

std::optional<Witness> check_all_colors(const ColoredGraph& g, bool require_simple,
                                        const IdMap& ids, int depth) {
  std::vector<QuotientMultigraph> quotients;
  quotients.reserve(g.dimension());
  for (Color c = 1; c <= g.dimension(); ++c) {
    quotients.push_back(contract_except(g, c));
    if (auto w = self_loop_witness(g, quotients.back(), ids, depth)) return w;
  }
  if (require_simple) {
    for (const auto& q : quotients) {
      if (auto w = parallel_witness(g, q, ids, depth)) return w;
    }
  }
  return std::nullopt;
}

VerificationReport strict_report(const ColoredGraph& g, Property p, bool require_simple) {
  VerificationReport r;
  r.property = p;
  r.witness = check_all_colors(g, require_simple, {}, 0);
  r.verdict = !r.witness.has_value();
  r.recursion_trace.push_back({0, 0, -1, g.num_vertices(), r.verdict});
  return r;
}

void propagate_failure(std::vector<TraceEntry>& trace, std::int64_t index) {
  while (index >= 0) {
    trace[static_cast<std::size_t>(index)].verdict = false;
    index = trace[static_cast<std::size_t>(index)].parent;
  }
}

struct Task {
  std::shared_ptr<const ColoredGraph> graph;
  IdMap ids;
  int depth = 0;
  std::int64_t trace_index = 0;
};

enum class Recursion { StrictChildren, WeakChildren };

// Walks the component tree depth-first with an explicit stack. At each level
// only the last color is checked (simple quotient when require_simple), then
// the components of the graph minus that color are either checked as strict
// pseudo-cubes (StrictChildren) or recursed into (WeakChildren).
VerificationReport weak_report(const ColoredGraph& g, Property p, bool require_simple,
                               Recursion recursion) {
  VerificationReport r;
  r.property = p;
  auto& trace = r.recursion_trace;

  std::vector<Task> stack;
  trace.push_back({0, 0, -1, g.num_vertices(), true});
  // The root is borrowed; components are owned by their task.
  stack.push_back({std::shared_ptr<const ColoredGraph>(&g, [](const ColoredGraph*) {}), {}, 0, 0});

  while (!stack.empty()) {
    Task task = std::move(stack.back());
    stack.pop_back();
    const ColoredGraph& h = *task.graph;
    const int d = h.dimension();

    if (auto w = check_color(h, d, require_simple, task.ids, task.depth)) {
      propagate_failure(trace, task.trace_index);
      r.witness = std::move(w);
      r.verdict = false;
      return r;
    }
    if (d == 1) continue;

    const auto parts = components(h, ColorSet::all(d - 1));
    std::vector<Task> children;
    for (std::uint32_t b = 0; b < parts.num_blocks; ++b) {
      const auto& block = parts.blocks[b];
      const auto entry = static_cast<std::int64_t>(trace.size());
      trace.push_back({task.depth + 1, b, task.trace_index, block.size(), true});

      if (d - 1 == 1 && recursion == Recursion::WeakChildren) {
        // A 1-colored component of a proper coloring is a single edge:
        // the perfect-matching base case.
        continue;
      }
      IdMap child_ids(block.size());
      for (std::size_t k = 0; k < block.size(); ++k) child_ids[k] = to_global(task.ids, block[k]);
      ColoredGraph sub;
      try {
        sub = induced_component(h, block, d - 1);
      } catch (const GraphError& e) {
        throw VerifierError(std::string("ComponentNotRegular: ") + e.what());
      }
      if (recursion == Recursion::StrictChildren) {
        if (auto w = check_all_colors(sub, false, child_ids, task.depth + 1)) {
          propagate_failure(trace, entry);
          r.witness = std::move(w);
          r.verdict = false;
          return r;
        }
      } else {
        children.push_back({std::make_shared<const ColoredGraph>(std::move(sub)),
                            std::move(child_ids), task.depth + 1, entry});
      }
    }
    for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(std::move(*it));
  }
  r.verdict = true;
  return r;
}

}  // namespace

VerificationReport verify_pseudo_cube(const ColoredGraph& g) {
  return strict_report(g, Property::PseudoCube, false);
}

VerificationReport verify_dual_systolic(const ColoredGraph& g) {
  return strict_report(g, Property::DualSystolic, true);
}

VerificationReport verify_weak_pseudo_cube(const ColoredGraph& g, WeakMode mode) {
  return weak_report(g, Property::WeakPseudoCube, false,
                     mode == WeakMode::PaperLiteral ? Recursion::StrictChildren
                                                    : Recursion::WeakChildren);
}

VerificationReport verify_weakly_dual_systolic(const ColoredGraph& g) {
  return weak_report(g, Property::WeaklyDualSystolic, true, Recursion::WeakChildren);
}

VerificationReport verify(const ColoredGraph& g, Property p, WeakMode mode) {
  switch (p) {
    case Property::PseudoCube: return verify_pseudo_cube(g);
    case Property::DualSystolic: return verify_dual_systolic(g);
    case Property::WeakPseudoCube: return verify_weak_pseudo_cube(g, mode);
    case Property::WeaklyDualSystolic: return verify_weakly_dual_systolic(g);
  }
  throw VerifierError("unknown property");
}

bool replay_witness(const ColoredGraph& g, const Witness& w) {
  const int level = g.dimension() - w.depth;
  if (w.depth < 0 || level < 1 || w.color < 1 || w.color > level) return false;
  for (const auto& e : w.edges) {
    if (e.color != w.color || e.u >= g.num_vertices() || e.v >= g.num_vertices() ||
        g.neighbor(e.u, e.color) != e.v) {
      return false;
    }
  }

  // Breadth-first labeling over colors 1..level except the witness color.
  constexpr std::uint32_t kUnset = ~std::uint32_t{0};
  std::vector<std::uint32_t> label(g.num_vertices(), kUnset);
  std::uint32_t next = 0;
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (label[s] != kUnset) continue;
    label[s] = next;
    queue.push_back(s);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Color c = 1; c <= level; ++c) {
        if (c == w.color) continue;
        const Vertex x = g.neighbor(v, c);
        if (label[x] == kUnset) {
          label[x] = next;
          queue.push_back(x);
        }
      }
    }
    ++next;
  }

  switch (w.kind) {
    case Witness::Kind::SelfLoopEdge:
      return w.edges.size() == 1 && label[w.edges[0].u] == label[w.edges[0].v];
    case Witness::Kind::ParallelEdgePair: {
      if (w.edges.size() != 2 || w.edges[0] == w.edges[1]) return false;
      auto key = [&](const ColoredEdge& e) {
        return std::pair(std::min(label[e.u], label[e.v]), std::max(label[e.u], label[e.v]));
      };
      const auto k0 = key(w.edges[0]);
      return k0.first != k0.second && k0 == key(w.edges[1]);
    }
    case Witness::Kind::BadComponent:
      return false;
  }
  return false;
}

}  // namespace sysgraph

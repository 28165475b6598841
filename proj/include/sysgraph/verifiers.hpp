#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sysgraph/colored_graph.hpp"

namespace sysgraph {

enum class Property { PseudoCube, DualSystolic, WeakPseudoCube, WeaklyDualSystolic };

enum class WeakMode {
  // Components of G minus its last color must be strict pseudo-cubes.
  PaperLiteral,
  // Components must themselves be weak pseudo-cubes, recursively.
  FullyWeak,
};

const char* to_string(Property p);

/// A concrete violation. `depth` says which level of the recursion found it:
/// depth t means the violation lives in the graph restricted to colors
/// 1..d-t, and `color` is the contracted-against color there. Edges are
/// always in the ids of the graph passed to the verifier.
struct Witness {
  enum class Kind { SelfLoopEdge, ParallelEdgePair, BadComponent };

  Kind kind = Kind::SelfLoopEdge;
  Color color = 0;
  int depth = 0;
  std::vector<ColoredEdge> edges;
  // Quotient node ids at the level where the violation was found.
  std::vector<std::uint32_t> component_ids;
  // For ParallelEdgePair: total edges between the two quotient nodes.
  std::uint64_t multiplicity = 0;
};

const char* to_string(Witness::Kind k);

struct TraceEntry {
  int depth = 0;
  // Block id within the parent's partition (0 at depth 0).
  std::uint32_t component = 0;
  // Index of the parent entry in the trace, -1 for the root.
  std::int64_t parent = -1;
  std::uint64_t size = 0;
  bool verdict = false;
};

struct VerificationReport {
  Property property = Property::PseudoCube;
  bool verdict = false;
  std::optional<Witness> witness;
  std::vector<TraceEntry> recursion_trace;
};

class VerifierError : public std::runtime_error {
 public:
  explicit VerifierError(const std::string& message) : std::runtime_error(message) {}
};

VerificationReport verify_pseudo_cube(const ColoredGraph& g);
VerificationReport verify_dual_systolic(const ColoredGraph& g);
VerificationReport verify_weak_pseudo_cube(const ColoredGraph& g,
                                           WeakMode mode = WeakMode::PaperLiteral);
VerificationReport verify_weakly_dual_systolic(const ColoredGraph& g);

VerificationReport verify(const ColoredGraph& g, Property p, WeakMode mode = WeakMode::PaperLiteral);

/// Re-checks a witness against g from scratch, without using the verifier:
/// recomputes the components of g restricted to colors {1..d-depth} minus
/// the witness color and confirms the reported edges violate the condition.
bool replay_witness(const ColoredGraph& g, const Witness& w);

}  // namespace sysgraph

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sysgraph/colored_graph.hpp"

namespace sysgraph {

/// Non-negative rational kept in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

class IsoperimetryError : public std::runtime_error {
 public:
  enum class Kind { IdOutOfRange, EmptySet, TooLarge, BadSize };

  IsoperimetryError(Kind kind, const std::string& message, std::uint64_t size = 0,
                    std::uint64_t limit = 0)
      : std::runtime_error(message), kind_(kind), size_(size), limit_(limit) {}

  Kind kind() const { return kind_; }
  std::uint64_t size() const { return size_; }
  std::uint64_t limit() const { return limit_; }

 private:
  Kind kind_;
  std::uint64_t size_;
  std::uint64_t limit_;
};

/// Sorted, duplicate-free vertex ids.
using VertexSet = std::vector<Vertex>;

/// Number of edges with exactly one endpoint in U. Duplicate ids count once.
std::uint64_t boundary(const ColoredGraph& g, std::span<const Vertex> set);

/// boundary / |U|.
Rational expansion(const ColoredGraph& g, std::span<const Vertex> set);

/// e_c(U) for c = 1..d (index c-1): edges of color c with both ends in U.
/// Throws std::logic_error if d|U| != boundary + 2 * sum e_c(U).
std::vector<std::uint64_t> inner_edges_by_color(const ColoredGraph& g,
                                                std::span<const Vertex> set);

enum class ProfileMethod { Exact, Heuristic };

const char* to_string(ProfileMethod m);

struct ProfileRow {
  std::uint64_t size = 0;
  std::uint64_t boundary = 0;
  Rational min_expansion;
  VertexSet witness;
  ProfileMethod method = ProfileMethod::Exact;
};

struct ProfileReport {
  int dimension = 0;
  std::uint64_t num_vertices = 0;
  // Sorted by size.
  std::vector<ProfileRow> rows;
};

inline constexpr std::uint64_t kMaxSubsetsPerRow = 10'000'000;
inline constexpr std::uint64_t kMaxFullSweepVertices = 24;

struct ExactProfileOptions {
  std::uint64_t max_size = 0;
  // Also emit rows n - s for every enumerated s (boundary is symmetric under
  // complement). Their witness is the complement of the size-s witness.
  bool include_complements = false;
  unsigned threads = 1;
};

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Global minima by enumeration. Each row s needs C(n, s) <= 10^7 unless
/// n <= 24. Witnesses are the lexicographically smallest minimizers.
/// Results do not depend on the thread count.
ProfileReport exact_profile(const ColoredGraph& g, const ExactProfileOptions& options);

struct HeuristicResult {
  std::uint64_t boundary = 0;
  Rational expansion;
  VertexSet witness;
};

/// Multi-start greedy growth plus swap local search. Returns an upper bound
/// on the true profile value; deterministic for a fixed seed.
HeuristicResult heuristic_min_expansion(const ColoredGraph& g, std::uint64_t size,
                                        unsigned trials, std::uint64_t seed);

ProfileReport heuristic_profile(const ColoredGraph& g, std::span<const std::uint64_t> sizes,
                                unsigned trials, std::uint64_t seed);

enum class BoundKind { PseudoCube, DualSystolic };

struct BoundCheckRow {
  std::uint64_t size = 0;
  Rational value;
  ProfileMethod method = ProfileMethod::Exact;
  double bound_pseudo = 0.0;   // d - log s
  double bound_dualsys = 0.0;  // dual_systolic_bound(d, s); d - 8 at s = 1
  bool pass_pseudo = false;
  bool pass_dualsys = false;
};

inline constexpr double kBoundSlack = 1e-9;

std::vector<BoundCheckRow> check_profile_against_bounds(const ProfileReport& report);

/// True when every row passes the given bound.
bool all_pass(std::span<const BoundCheckRow> rows, BoundKind kind);

}  // namespace sysgraph

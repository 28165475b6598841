#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sysgraph/colored_graph.hpp"
#include "sysgraph/isoperimetry.hpp"

namespace sysgraph {

class SpectralError : public std::runtime_error {
 public:
  enum class Kind { TooLarge, Domain, BadCopyIndex, SolverFailed };

  SpectralError(Kind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

enum class SpectrumSolver { DenseFull, InertiaCount };

inline constexpr std::uint64_t kMaxDenseVertices = 4096;
inline constexpr std::uint64_t kMaxInertiaVertices = 8192;
inline constexpr double kDefaultTieTolerance = 1e-9;
inline constexpr double kResidualTolerance = 1e-9;

/// Eigenvalues of the normalized adjacency matrix M = A / d.
struct SpectrumReport {
  std::uint64_t n = 0;
  int d = 0;
  // Descending.
  std::vector<double> eigenvalues;
  SpectrumSolver solver = SpectrumSolver::DenseFull;
  double tolerance = kResidualTolerance;
  // Largest ||M u - lambda u|| over the spot-checked eigenpairs.
  double max_residual = 0.0;
};

/// Dense symmetric eigendecomposition; n <= 4096. Spot-checks residuals on
/// a deterministic sample of eigenpairs and throws if any exceeds 1e-9.
SpectrumReport full_spectrum(const ColoredGraph& g);

struct ThresholdRank {
  // Eigenvalues >= 1 - epsilon.
  std::uint64_t strict = 0;
  // Eigenvalues >= 1 - epsilon - tie_tolerance.
  std::uint64_t tolerant = 0;
};

/// Counts from a computed spectrum.
ThresholdRank threshold_rank(const SpectrumReport& spectrum, double epsilon,
                             double tie_tolerance = kDefaultTieTolerance);

/// Counts via the full spectrum (n <= 4096) or, for larger graphs, via
/// inertia: the number of eigenvalues >= t equals n minus the number of
/// negative pivots of the LDL^T factorization of the tridiagonal form of
/// M - t I (a Sturm count).
ThresholdRank threshold_rank(const ColoredGraph& g, double epsilon,
                             double tie_tolerance = kDefaultTieTolerance,
                             SpectrumSolver solver = SpectrumSolver::DenseFull);

/// Exact <v_j, M v_j> for the normalized indicator of the j-th block of
/// n^(d-k) consecutive vertex ids, computed by counting internal edges:
/// 2 * internal / (|block| * d). Requires the block to be a union of
/// components of g restricted to colors 1..d-k.
Rational copy_rayleigh(const ColoredGraph& clique_product_graph, int k, std::uint64_t j);

struct ThresholdTheoremResult {
  int d = 0;
  int k = 0;
  double epsilon = 0.0;
  std::uint64_t n = 0;
  ThresholdRank rank;
  double bound = 0.0;
  std::uint64_t required = 0;  // ceil(bound)
  bool size_inequality = false;
  bool verdict = false;
};

/// (n^(d-k))^(2^k) < n^(d), in exact integers. Throws on overflow.
bool copy_count_inequality(int d, int k);

/// Builds CP^(d), sets epsilon = 2k/d and checks TR_{1-eps} >= ceil(n^(1-2^-k)/2)
/// with the tolerant count.
ThresholdTheoremResult verify_threshold_theorem(int d, int k,
                                                SpectrumSolver solver = SpectrumSolver::DenseFull);

/// Same, on an already constructed CP^(d).
ThresholdTheoremResult verify_threshold_theorem(const ColoredGraph& clique_product_graph, int k,
                                                const SpectrumReport* spectrum = nullptr);

}  // namespace sysgraph

#include "sysgraph/spectral.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "sysgraph/constructions.hpp"

namespace sysgraph {

namespace {

Eigen::MatrixXd normalized_adjacency(const ColoredGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  const double weight = 1.0 / g.dimension();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (const auto& e : g.edges()) {
    m(e.u, e.v) += weight;
    m(e.v, e.u) += weight;
  }
  return m;
}

// ||M u - lambda u|| using the graph directly rather than the dense matrix.
double residual(const ColoredGraph& g, const Eigen::VectorXd& u, double lambda) {
  const double weight = 1.0 / g.dimension();
  double sum = 0.0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    double mu = 0.0;
    for (Vertex w : g.neighbors(v)) mu += u[w];
    const double r = weight * mu - lambda * u[v];
    sum += r * r;
  }
  return std::sqrt(sum);
}

void check_epsilon(double epsilon) {
  if (!(epsilon > 0.0) || epsilon > 2.0) {
    throw SpectralError(SpectralError::Kind::Domain, "epsilon must lie in (0, 2]");
  }
}

// Number of eigenvalues of the symmetric tridiagonal (diag, off) below t.
std::uint64_t sturm_count_below(const Eigen::VectorXd& diag, const Eigen::VectorXd& off, double t) {
  std::uint64_t negatives = 0;
  double pivot = 1.0;
  const double tiny = 1e-300;
  for (Eigen::Index i = 0; i < diag.size(); ++i) {
    const double coupling = i == 0 ? 0.0 : off[i - 1] * off[i - 1] / pivot;
    pivot = diag[i] - t - coupling;
    if (pivot == 0.0) pivot = -tiny;
    if (pivot < 0.0) ++negatives;
  }
  return negatives;
}

}  // namespace

SpectrumReport full_spectrum(const ColoredGraph& g) {
  const std::uint64_t n = g.num_vertices();
  if (n > kMaxDenseVertices) {
    throw SpectralError(SpectralError::Kind::TooLarge,
                        "dense spectrum limited to " + std::to_string(kMaxDenseVertices) +
                            " vertices; use the inertia count for threshold ranks");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(normalized_adjacency(g));
  if (solver.info() != Eigen::Success) {
    throw SpectralError(SpectralError::Kind::SolverFailed, "eigensolver did not converge");
  }

  SpectrumReport report;
  report.n = n;
  report.d = g.dimension();
  report.solver = SpectrumSolver::DenseFull;
  const auto& values = solver.eigenvalues();
  report.eigenvalues.assign(values.data(), values.data() + values.size());
  std::reverse(report.eigenvalues.begin(), report.eigenvalues.end());

  // Both ends of the spectrum plus an even sample of the interior.
  const auto size = static_cast<Eigen::Index>(n);
  const Eigen::Index stride = std::max<Eigen::Index>(1, size / 16);
  for (Eigen::Index i = 0; i < size; i += stride) {
    report.max_residual =
        std::max(report.max_residual, residual(g, solver.eigenvectors().col(i), values[i]));
  }
  report.max_residual = std::max(
      report.max_residual, residual(g, solver.eigenvectors().col(size - 1), values[size - 1]));
  if (report.max_residual > kResidualTolerance) {
    throw SpectralError(SpectralError::Kind::SolverFailed,
                        "eigenpair residual " + std::to_string(report.max_residual) +
                            " exceeds tolerance");
  }
  return report;
}

ThresholdRank threshold_rank(const SpectrumReport& spectrum, double epsilon, double tie_tolerance) {
  check_epsilon(epsilon);
  const double threshold = 1.0 - epsilon;
  ThresholdRank r;
  for (double lambda : spectrum.eigenvalues) {
    if (lambda >= threshold) ++r.strict;
    if (lambda >= threshold - tie_tolerance) ++r.tolerant;
  }
  return r;
}

ThresholdRank threshold_rank(const ColoredGraph& g, double epsilon, double tie_tolerance,
                             SpectrumSolver solver) {
  check_epsilon(epsilon);
  if (solver == SpectrumSolver::DenseFull) {
    return threshold_rank(full_spectrum(g), epsilon, tie_tolerance);
  }
  const std::uint64_t n = g.num_vertices();
  if (n > kMaxInertiaVertices) {
    throw SpectralError(SpectralError::Kind::TooLarge,
                        "inertia count limited to " + std::to_string(kMaxInertiaVertices) +
                            " vertices");
  }
  Eigen::Tridiagonalization<Eigen::MatrixXd> tri(normalized_adjacency(g));
  const Eigen::VectorXd diag = tri.diagonal();
  const Eigen::VectorXd off = tri.subDiagonal();
  const double threshold = 1.0 - epsilon;
  ThresholdRank r;
  r.strict = n - sturm_count_below(diag, off, threshold);
  r.tolerant = n - sturm_count_below(diag, off, threshold - tie_tolerance);
  return r;
}

Rational copy_rayleigh(const ColoredGraph& g, int k, std::uint64_t j) {
  const int d = g.dimension();
  if (k < 0 || k >= d) {
    throw SpectralError(SpectralError::Kind::BadCopyIndex, "depth k must satisfy 0 <= k < d");
  }
  const auto sizes = clique_size_sequence(d);
  if (sizes.back() != g.num_vertices()) {
    throw SpectralError(SpectralError::Kind::BadCopyIndex,
                        "graph size does not match a clique product of its dimension");
  }
  const std::uint64_t block = sizes[static_cast<std::size_t>(d - k - 1)];
  const std::uint64_t copies = g.num_vertices() / block;
  if (j >= copies) {
    throw SpectralError(SpectralError::Kind::BadCopyIndex,
                        "copy index " + std::to_string(j) + " out of range (" +
                            std::to_string(copies) + " copies)");
  }
  const std::uint64_t first = j * block;
  const std::uint64_t last = first + block;
  std::uint64_t endpoint_hits = 0;
  for (std::uint64_t v = first; v < last; ++v) {
    for (Vertex w : g.neighbors(static_cast<Vertex>(v))) {
      endpoint_hits += static_cast<std::uint64_t>(w >= first && w < last);
    }
  }
  // endpoint_hits counts each internal edge twice.
  return {static_cast<std::int64_t>(endpoint_hits), static_cast<std::int64_t>(block) * d};
}

bool copy_count_inequality(int d, int k) {
  if (k < 1 || k >= d) throw SpectralError(SpectralError::Kind::Domain, "need 1 <= k < d");
  const auto sizes = clique_size_sequence(d);
  const unsigned __int128 total = sizes.back();
  unsigned __int128 power = sizes[static_cast<std::size_t>(d - k - 1)];
  for (int i = 0; i < k; ++i) {
    if (power > total) return false;
    power *= power;
  }
  return power < total;
}

namespace {

ThresholdTheoremResult theorem_setup(const ColoredGraph& cp, int k) {
  const int d = cp.dimension();
  if (d <= 2 || k < 1 || 2 * k > d) {
    throw SpectralError(SpectralError::Kind::Domain, "need d > 2 and 0 < k <= d/2");
  }
  ThresholdTheoremResult r;
  r.d = d;
  r.k = k;
  r.n = cp.num_vertices();
  r.epsilon = 2.0 * k / d;
  r.bound = std::pow(static_cast<double>(r.n), 1.0 - std::exp2(-k)) / 2.0;
  r.required = static_cast<std::uint64_t>(std::ceil(r.bound));
  r.size_inequality = copy_count_inequality(d, k);
  return r;
}

}  // namespace

ThresholdTheoremResult verify_threshold_theorem(const ColoredGraph& cp, int k,
                                                const SpectrumReport* spectrum) {
  auto r = theorem_setup(cp, k);
  r.rank = spectrum != nullptr ? threshold_rank(*spectrum, r.epsilon)
                               : threshold_rank(cp, r.epsilon);
  r.verdict = r.size_inequality && r.rank.tolerant >= r.required;
  return r;
}

ThresholdTheoremResult verify_threshold_theorem(int d, int k, SpectrumSolver solver) {
  const auto cp = clique_product(d);
  if (solver == SpectrumSolver::DenseFull) {
    const auto spectrum = full_spectrum(cp);
    return verify_threshold_theorem(cp, k, &spectrum);
  }
  auto r = theorem_setup(cp, k);
  r.rank = threshold_rank(cp, r.epsilon, kDefaultTieTolerance, SpectrumSolver::InertiaCount);
  r.verdict = r.size_inequality && r.rank.tolerant >= r.required;
  return r;
}

}  // namespace sysgraph

#pragma once

#include <memory>
#include <stdexcept>
#include <variant>
#include <vector>

namespace sysgraph {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Logarithms are base two throughout.
namespace bounds {

inline constexpr int kMaxEll = 64;
inline constexpr double kSlack = 1e-9;

struct PseudoCubeLog {};

/// c * (log s)^(1/ell).
struct PowerLog {
  double c = 1.0;
  int ell = 1;
};

struct Bootstrap;

/// A dimension-independent bounding function g, meaning P(s) >= d - g(s).
using BoundingFunction = std::variant<PseudoCubeLog, PowerLog, Bootstrap>;

/// s -> inner(2^(4/epsilon)) + epsilon * log s.
struct Bootstrap {
  std::shared_ptr<const BoundingFunction> inner;
  double epsilon = 1.0;
};

BoundingFunction bootstrap(BoundingFunction inner, double epsilon);

double eval(const BoundingFunction& f, double s);

/// (4 c^ell ell)^(1/(ell+1)) + (4 (c/ell)^ell)^(1/(ell+1)).
double next_coefficient(double c, int ell);

/// Minimizer of eps -> c (4/eps)^(1/ell) + eps log s.
double optimal_epsilon(double c, int ell, double s);

struct CoefficientFamily {
  // exact[k] = PowerLog{c_k, k+1} for k = 0..ell_max, c_0 = 1 and
  // c_k = next_coefficient(c_{k-1}, k).
  std::vector<PowerLog> exact;
  // simplified[k-1] = PowerLog{4k, k} for k = 1..ell_max.
  std::vector<PowerLog> simplified;
};

CoefficientFamily g_ell_family(int ell_max);

// The *_at_log variants take log s directly so that sizes beyond the double
// range (e.g. s = 2^1024) can be evaluated.
double closed_form_envelope_at_log(double log_s);
double simplified_envelope_at_log(double log_s, int ell_max = kMaxEll);
int simplified_envelope_argmin_at_log(double log_s, int ell_max = kMaxEll);
double exact_envelope_at_log(double log_s, int ell_max = kMaxEll);

/// d - log s.
double pseudo_cube_bound(int d, double s);

/// log log s, clamped at 0 for s <= 2.
double clamped_log_log(double s);

/// 8 (1 + log log s) with the clamp above.
double closed_form_envelope(double s);

/// min over 1 <= ell <= ell_max of 4 ell (log s)^(1/ell).
double simplified_envelope(double s, int ell_max = kMaxEll);
/// The minimizing ell of simplified_envelope (smallest on ties).
int simplified_envelope_argmin(double s, int ell_max = kMaxEll);

/// min over the exact-coefficient family of c_k (log s)^(1/(k+1)).
double exact_envelope(double s, int ell_max = kMaxEll);

/// d - 8 (1 + log log s), clamped.
double dual_systolic_closed_form(int d, double s);

/// d - min(simplified envelope, closed form).
double dual_systolic_bound(int d, double s);

}  // namespace bounds
}  // namespace sysgraph

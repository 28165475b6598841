#include "sysgraph/bounds.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace sysgraph::bounds {

namespace {

void require(bool condition, const char* what) {
  if (!condition) throw std::logic_error(what);
}

double log_of(double s) {
  if (!(s > 1.0)) throw DomainError("bounding functions are defined for s > 1");
  return std::log2(s);
}

// Works on log s so that 2^(4/epsilon) never has to be formed.
struct Evaluator {
  double log_s;

  double operator()(const PseudoCubeLog&) const { return log_s; }
  double operator()(const PowerLog& f) const { return f.c * std::pow(log_s, 1.0 / f.ell); }
  double operator()(const Bootstrap& f) const {
    return std::visit(Evaluator{4.0 / f.epsilon}, *f.inner) + f.epsilon * log_s;
  }
};

}  // namespace

BoundingFunction bootstrap(BoundingFunction inner, double epsilon) {
  if (!(epsilon > 0.0)) throw DomainError("bootstrap epsilon must be positive");
  return Bootstrap{std::make_shared<const BoundingFunction>(std::move(inner)), epsilon};
}

double eval(const BoundingFunction& f, double s) {
  return std::visit(Evaluator{log_of(s)}, f);
}

double next_coefficient(double c, int ell) {
  if (!(c >= 1.0)) throw DomainError("coefficient must be >= 1");
  if (ell < 1) throw DomainError("ell must be a positive integer");
  const double root = 1.0 / (ell + 1);
  const double next = std::pow(4.0 * std::pow(c, ell) * ell, root) +
                      std::pow(4.0 * std::pow(c / ell, ell), root);
  require(next >= 1.0, "next_coefficient fell below 1");
  // c <= 4 ell implies c' <= 4 (ell + 1), with equality at ell = 1.
  require(c > 4.0 * ell || next <= 4.0 * (ell + 1) * (1.0 + kSlack),
          "next_coefficient broke the 4 ell induction bound");
  return next;
}

double optimal_epsilon(double c, int ell, double s) {
  if (!(c > 0.0) || ell < 1) throw DomainError("optimal_epsilon needs c > 0 and ell >= 1");
  const double log_s = log_of(s);
  return std::pow(c * std::pow(4.0, 1.0 / ell) / (ell * log_s),
                  static_cast<double>(ell) / (ell + 1));
}

CoefficientFamily g_ell_family(int ell_max) {
  if (ell_max < 1 || ell_max > kMaxEll) {
    throw DomainError("ell_max must be in 1.." + std::to_string(kMaxEll));
  }
  CoefficientFamily fam;
  double c = 1.0;
  fam.exact.push_back({c, 1});
  for (int k = 1; k <= ell_max; ++k) {
    c = next_coefficient(c, k);
    require(c <= 4.0 * k * (1.0 + kSlack), "c_ell exceeded 4 ell");
    fam.exact.push_back({c, k + 1});
    fam.simplified.push_back({4.0 * k, k});
  }
  return fam;
}

double pseudo_cube_bound(int d, double s) {
  if (!(s >= 1.0)) throw DomainError("set size must be >= 1");
  return d - std::log2(s);
}

double clamped_log_log(double s) {
  const double log_s = log_of(s);
  return log_s <= 1.0 ? 0.0 : std::log2(log_s);
}

double closed_form_envelope_at_log(double log_s) {
  if (!(log_s > 0.0)) throw DomainError("envelope needs s > 1");
  return 8.0 * (1.0 + (log_s <= 1.0 ? 0.0 : std::log2(log_s)));
}

double closed_form_envelope(double s) { return closed_form_envelope_at_log(log_of(s)); }

int simplified_envelope_argmin_at_log(double log_s, int ell_max) {
  if (!(log_s > 0.0)) throw DomainError("envelope needs s > 1");
  int best_ell = 1;
  double best = std::numeric_limits<double>::infinity();
  for (int ell = 1; ell <= ell_max; ++ell) {
    const double value = 4.0 * ell * std::pow(log_s, 1.0 / ell);
    if (value < best) {
      best = value;
      best_ell = ell;
    }
  }
  return best_ell;
}

double simplified_envelope_at_log(double log_s, int ell_max) {
  const int ell = simplified_envelope_argmin_at_log(log_s, ell_max);
  return 4.0 * ell * std::pow(log_s, 1.0 / ell);
}

double exact_envelope_at_log(double log_s, int ell_max) {
  if (!(log_s > 0.0)) throw DomainError("envelope needs s > 1");
  const auto fam = g_ell_family(ell_max);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& f : fam.exact) best = std::min(best, f.c * std::pow(log_s, 1.0 / f.ell));
  return best;
}

int simplified_envelope_argmin(double s, int ell_max) {
  return simplified_envelope_argmin_at_log(log_of(s), ell_max);
}

double simplified_envelope(double s, int ell_max) {
  return simplified_envelope_at_log(log_of(s), ell_max);
}

double exact_envelope(double s, int ell_max) { return exact_envelope_at_log(log_of(s), ell_max); }

double dual_systolic_closed_form(int d, double s) { return d - closed_form_envelope(s); }

double dual_systolic_bound(int d, double s) {
  const double log_s = log_of(s);
  const double envelope = simplified_envelope_at_log(log_s);
  const double closed = closed_form_envelope_at_log(log_s);
  require(log_s < 2.0 || envelope <= closed + kSlack, "envelope exceeded 8(1 + log log s)");
  return d - std::min(envelope, closed);
}

}  // namespace sysgraph::bounds

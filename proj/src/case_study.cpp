#include "amic/case_study.hpp"

#include <cmath>

namespace amic {

Stretch cualni_stretch(const LatticeParams& params) {
  if (!(params.alpha > 0.0) || !(params.beta > 0.0) || !(params.gamma > 0.0))
    raise(errc::invalid_argument, "lattice parameters must be positive");
  double p = 0.5 * (params.alpha + params.gamma);
  double q = 0.5 * (params.alpha - params.gamma);
  Mat3 u;
  u(0, 0) = params.beta;
  u(1, 1) = p;
  u(1, 2) = q;
  u(2, 1) = q;
  u(2, 2) = p;
  return Stretch(u);
}

CaseReport run_cualni_case(const LatticeParams& params) {
  Stretch u = cualni_stretch(params);
  CubicAusteniteReport check = cubic_austenite_check(u);

  CaseReport report;
  report.delta_cbrt = std::cbrt(u.determinant());
  report.kappa_star = check.winner.kappa;
  report.provenance = check.winner;
  report.epsilon = check.certificate.epsilon;
  report.lhs = check.certificate.lhs;
  report.holds = check.certificate.holds;
  report.candidates = check.candidates;
  report.certificate = check.certificate;
  return report;
}

std::vector<double> volume_fraction_roots(const VolumeFractionCoefficients& coeffs,
                                          double lambda_compound) {
  double q = lambda_compound * lambda_compound - lambda_compound;
  double num = coeffs.a0 + coeffs.a2 * q;
  double den = coeffs.a1 + coeffs.a3 * q;
  if (std::abs(den) <= 1e-14 * std::max(1.0, std::abs(num)))
    raise(errc::degenerate_denominator,
          "a1 + a3 (Lambda^2 - Lambda) vanishes at this Lambda");
  double rhs = num / den;

  // lambda^2 - lambda - rhs = 0: roots 1/2 +- sqrt(1/4 + rhs)
  double disc = 0.25 + rhs;
  if (disc < 0.0) return {};
  double s = std::sqrt(disc);
  double lo = 0.5 - s, hi = 0.5 + s;
  if (lo < -1e-12 || hi > 1.0 + 1e-12) return {};
  return {lo, hi};
}

}  // namespace amic

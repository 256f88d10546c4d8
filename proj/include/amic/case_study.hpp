#pragma once

#include <vector>

#include "amic/interior_point.hpp"

namespace amic {

/// Orthorhombic lattice parameters of a cubic-to-orthorhombic transition.
struct LatticeParams {
  double alpha, beta, gamma;
};

/// Reference CuAlNi dataset used throughout the case study.
inline constexpr LatticeParams cualni_reference_params{1.06372, 0.91542, 1.02368};

/// Transformation stretch
///   [ beta        0                0          ]
///   [ 0    (alpha+gamma)/2  (alpha-gamma)/2   ]
///   [ 0    (alpha-gamma)/2  (alpha+gamma)/2   ]
/// with determinant alpha*beta*gamma.
Stretch cualni_stretch(const LatticeParams& params);

struct CaseReport {
  double delta_cbrt;
  double kappa_star;
  KappaEntry provenance;
  double epsilon;
  double lhs;
  bool holds;
  std::vector<KappaCandidate> candidates;
  InteriorPointCertificate certificate;
};

/// Full interior-point evaluation of the CuAlNi stretch.
CaseReport run_cualni_case(const LatticeParams& params = cualni_reference_params);

struct VolumeFractionCoefficients {
  double a0, a1, a2, a3;
};

/// Roots in [0, 1] of lambda^2 - lambda = (a0 + a2 q)/(a1 + a3 q) with
/// q = Lambda^2 - Lambda. Returns zero or two values, paired as (l, 1 - l).
std::vector<double> volume_fraction_roots(const VolumeFractionCoefficients& coeffs,
                                          double lambda_compound);

}  // namespace amic

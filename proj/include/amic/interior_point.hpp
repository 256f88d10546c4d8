#pragma once

#include <vector>

#include "amic/hulls.hpp"

namespace amic {

/// Explicit interior-ball radius (kappa - 1)^2 / 62 for the embedded
/// tetragonal configuration, valid for 0 < kappa < 3/2, kappa != 1.
double epsilon_dk(double kappa);

/// delta^{1/3} - 1 without cancellation near delta = 1.
double cbrt_minus_one(double delta);

/// Left side of the determinant condition:
/// |Delta^{1/3} - 1| / Delta^{1/3} * sqrt(Delta^{4/3} + 2 Delta + Delta^{2/3} + 2).
double delta_condition_lhs(double delta);

/// Record of the constructive rank-one interior point F = 1 + (Delta-1) n(x)n.
struct InteriorPointCertificate {
  double delta;
  double kappa;
  double epsilon;      // epsilon_dk(kappa)
  double lhs;          // delta_condition_lhs(delta)
  bool holds;          // lhs < epsilon
  Mat3 point;          // F = 1 + shear(x)normal
  Vec3 shear;          // (Delta - 1) n
  Vec3 normal;         // unit
  double ball_radius;  // Delta^{1/3} * epsilon
};

/// Builds the certificate for the given Delta, unit normal and kappa. When the
/// condition holds, det F = Delta and |F - Delta^{1/3} 1| < Delta^{1/3} epsilon
/// are re-asserted numerically.
InteriorPointCertificate construct_interior_point(double delta, const Vec3& n,
                                                  double kappa);

/// |F - Delta^{1/3} 1|_F^2 for F = 1 + (Delta-1) n(x)n, assembled entrywise
/// from the defining pieces so the tiny deviations survive near Delta = 1.
double interior_deviation_sq(double delta, const Vec3& n);

struct KappaCandidate {
  KappaEntry entry;
  bool admissible;  // 0 < kappa < 3/2 and kappa != 1
  double epsilon;   // valid when admissible
  double lhs;
  bool holds;
};

struct CubicAusteniteReport {
  InteriorPointCertificate certificate;  // for the winning kappa
  KappaEntry winner;
  std::vector<KappaCandidate> candidates;  // every kappa in S(U), with verdicts
};

/// Evaluates the interior-point condition for a cubic-austenite stretch:
/// builds S(U), keeps 0 < kappa < 3/2 with kappa != 1, picks the kappa
/// maximizing (kappa - 1)^2 and certifies the condition for it.
CubicAusteniteReport cubic_austenite_check(const Stretch& u);

}  // namespace amic

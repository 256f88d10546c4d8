#pragma once

#include <array>
#include <vector>

#include "amic/symmetry.hpp"

namespace amic {

/// Two diagonal wells U1 = diag(eta1, eta2, eta3), U2 = diag(eta2, eta1, eta3).
struct TwoWellSpec {
  double eta1, eta2, eta3;

  TwoWellSpec(double e1, double e2, double e3);
  Stretch well1() const { return Stretch(Mat3::diagonal(eta1, eta2, eta3)); }
  Stretch well2() const { return Stretch(Mat3::diagonal(eta2, eta1, eta3)); }
};

struct MembershipTolerances {
  double block_abs = 1e-8;    // absolute, on squared entries
  double det_rel = 1e-8;      // relative, on the 2x2 minor identity
  double trace_slack = 1e-10; // slack for the trace inequality
};

/// Ledger of the explicit two-well membership test. F belongs to the hull
/// exactly when F^T F has the zero/eta3^2 block structure, the in-plane minor
/// equals eta1^2 eta2^2, and a + b + 2|c| <= eta1^2 + eta2^2.
struct HullVerdict {
  bool member;
  double block_structure_residual;  // max deviation of the constrained entries
  double det_residual;              // relative error of ab - c^2 = eta1^2 eta2^2
  double trace_margin;              // eta1^2 + eta2^2 - (a + b + 2|c|)
};

HullVerdict two_well_membership(const Mat3& f, const TwoWellSpec& spec,
                                const MembershipTolerances& tol = {});

/// Two-step twin-averaging chain that diagonalizes U inside the hull:
/// averages across `first_axis`, then across `second_axis`, and returns
/// V = sqrt of the resulting diagonal metric. Axes are 0-based. A degenerate
/// first step throws no_twin; a degenerate second step means the metric is
/// already diagonal and is skipped.
Mat3 mallard_diagonalize(const Stretch& u, int first_axis, int second_axis);

/// Embedded tetragonal three-well configuration diag(mu, s, s) + coordinate
/// permutations, s = sqrt(nu*xi), carrying the kappa with mu = Delta^{1/3}
/// kappa^2.
struct ThreeWellConfig {
  double mu, nu, xi;
  std::array<Mat3, 3> wells;
  double kappa;
  int j, k;        // 0-based index pair of the generating value set
  int mu_role;     // which of the three values plays mu (0, 1, 2)
  bool degenerate; // kappa == 1 within tolerance: unusable downstream
};

/// All configurations over ordered pairs j != k and the three mu assignments.
std::vector<ThreeWellConfig> three_well_configs(const Stretch& u);

struct KappaEntry {
  double kappa;
  int j, k;        // 0-based
  int formula;     // 0: D^{1/3}/cof^{1/4}; 1: cof^{1/4}/(U2^{1/4} D^{1/6}); 2: U2^{1/4}/D^{1/6}
  bool degenerate; // kappa == 1 within tolerance
};

struct KappaSet {
  std::vector<KappaEntry> entries;  // deduplicated, first provenance kept
  double dedup_tol;
};

/// The candidate kappa values extracted from U (union over j != k of the
/// three formulas), deduplicated within `dedup_tol`.
KappaSet kappa_set(const Stretch& u, double dedup_tol = 1e-10);

}  // namespace amic

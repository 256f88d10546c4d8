#include "amic/hulls.hpp"

#include <cmath>

#include "amic/twinning.hpp"

namespace amic {

TwoWellSpec::TwoWellSpec(double e1, double e2, double e3)
    : eta1(e1), eta2(e2), eta3(e3) {
  if (!(e1 > 0.0) || !(e2 > 0.0) || !(e3 > 0.0))
    raise(errc::invalid_argument, "well parameters must be positive");
  if (std::abs(e1 - e2) <= 1e-12 * std::max(e1, e2))
    raise(errc::invalid_argument, "eta1 == eta2 makes the two wells coincide");
}

HullVerdict two_well_membership(const Mat3& f, const TwoWellSpec& spec,
                                const MembershipTolerances& tol) {
  if (!all_finite(f)) raise(errc::non_finite, "membership input has NaN/Inf entries");
  Mat3 g = transpose(f) * f;

  double eta3_sq = spec.eta3 * spec.eta3;
  double block = std::max({std::abs(g(0, 2)), std::abs(g(1, 2)),
                           std::abs(g(2, 2) - eta3_sq)});

  double a = g(0, 0), b = g(1, 1), c = g(0, 1);
  double minor_target = spec.eta1 * spec.eta1 * spec.eta2 * spec.eta2;
  double det_res = std::abs(a * b - c * c - minor_target) / minor_target;

  double trace_margin =
      spec.eta1 * spec.eta1 + spec.eta2 * spec.eta2 - (a + b + 2.0 * std::abs(c));

  bool member = block <= tol.block_abs && det_res <= tol.det_rel &&
                trace_margin >= -tol.trace_slack;
  return {member, block, det_res, trace_margin};
}

Mat3 mallard_diagonalize(const Stretch& u, int first_axis, int second_axis) {
  if (first_axis < 0 || first_axis > 2 || second_axis < 0 || second_axis > 2 ||
      first_axis == second_axis)
    raise(errc::invalid_argument, "axes must be distinct indices in 0..2");

  Vec3 ep, eq;
  ep[first_axis] = 1.0;
  eq[second_axis] = 1.0;

  Mat3 f = u.matrix();
  if (detail::mallard_degenerate(f, ep))
    raise(errc::no_twin, "first axis is an invariant direction of the stretch");
  f = f + 0.5 * outer(detail::mallard_shear(f, ep), ep);

  // After the first average the metric has zeros along the first axis; if the
  // remaining off-diagonal pair already vanished there is nothing to do.
  if (!detail::mallard_degenerate(f, eq))
    f = f + 0.5 * outer(detail::mallard_shear(f, eq), eq);

  Mat3 d = transpose(f) * f;
  double off = std::max({std::abs(d(0, 1)), std::abs(d(0, 2)), std::abs(d(1, 2))});
  if (off > 1e-8 * std::max(1.0, frobenius_norm(d)))
    raise(errc::numeric_failure, "averaged metric failed to diagonalize");

  Mat3 v = Mat3::diagonal(std::sqrt(d(0, 0)), std::sqrt(d(1, 1)), std::sqrt(d(2, 2)));
  double delta = u.determinant();
  if (std::abs(det(v) - delta) > 1e-10 * delta)
    raise(errc::numeric_failure, "diagonalized well lost the determinant");
  return v;
}

std::vector<ThreeWellConfig> three_well_configs(const Stretch& u) {
  const Mat3 u2 = u.matrix() * u.matrix();
  const Mat3 cof2 = cofactor(u2);
  const double delta = u.determinant();
  const double delta_cbrt = std::cbrt(delta);

  std::vector<ThreeWellConfig> out;
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      if (k == j) continue;
      const double w[3] = {delta / std::sqrt(cof2(j, j)),
                           std::sqrt(cof2(j, j) / u2(k, k)),
                           std::sqrt(u2(k, k))};
      for (int role = 0; role < 3; ++role) {
        ThreeWellConfig cfg;
        cfg.mu = w[role];
        cfg.nu = w[(role + 1) % 3];
        cfg.xi = w[(role + 2) % 3];
        double s = std::sqrt(cfg.nu * cfg.xi);
        cfg.wells = {Mat3::diagonal(cfg.mu, s, s), Mat3::diagonal(s, cfg.mu, s),
                     Mat3::diagonal(s, s, cfg.mu)};
        cfg.kappa = std::sqrt(cfg.mu / delta_cbrt);
        cfg.j = j;
        cfg.k = k;
        cfg.mu_role = role;
        cfg.degenerate = std::abs(cfg.kappa - 1.0) <= 1e-10;
        out.push_back(cfg);
      }
    }
  }
  return out;
}

KappaSet kappa_set(const Stretch& u, double dedup_tol) {
  const Mat3 u2 = u.matrix() * u.matrix();
  const Mat3 cof2 = cofactor(u2);
  const double delta = u.determinant();
  const double delta_cbrt = std::cbrt(delta);
  const double delta_sixth = std::pow(delta, 1.0 / 6.0);

  KappaSet out;
  out.dedup_tol = dedup_tol;
  auto push = [&](double kappa, int j, int k, int formula) {
    for (const KappaEntry& e : out.entries)
      if (std::abs(e.kappa - kappa) <= dedup_tol) return;
    out.entries.push_back({kappa, j, k, formula, std::abs(kappa - 1.0) <= 1e-10});
  };

  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      if (k == j) continue;
      double cq = std::pow(cof2(j, j), 0.25);
      double uq = std::pow(u2(k, k), 0.25);
      push(delta_cbrt / cq, j, k, 0);
      push(cq / (uq * delta_sixth), j, k, 1);
      push(uq / delta_sixth, j, k, 2);
    }
  }
  return out;
}

}  // namespace amic

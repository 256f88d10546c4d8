#include "amic/interior_point.hpp"

#include <cmath>

namespace amic {

double epsilon_dk(double kappa) {
  if (!std::isfinite(kappa)) raise(errc::non_finite, "kappa is not finite");
  if (kappa <= 0.0 || kappa >= 1.5)
    raise(errc::kappa_out_of_range,
          "kappa = " + std::to_string(kappa) + " outside (0, 3/2)");
  if (std::abs(kappa - 1.0) <= 1e-12)
    raise(errc::kappa_degenerate, "kappa = 1 has no interior ball");
  return (kappa - 1.0) * (kappa - 1.0) / 62.0;
}

double cbrt_minus_one(double delta) {
  return std::expm1(std::log1p(delta - 1.0) / 3.0);
}

double delta_condition_lhs(double delta) {
  if (!std::isfinite(delta)) raise(errc::non_finite, "delta is not finite");
  if (delta <= 0.0) raise(errc::non_positive_delta, "delta must be positive");
  double tm1 = cbrt_minus_one(delta);
  double t = 1.0 + tm1;
  return std::abs(tm1) / t *
         std::sqrt(t * t * t * t + 2.0 * delta + t * t + 2.0);
}

InteriorPointCertificate construct_interior_point(double delta, const Vec3& n,
                                                  double kappa) {
  if (!all_finite(n)) raise(errc::non_finite, "normal has NaN/Inf entries");
  double nn = norm(n);
  if (std::abs(nn - 1.0) > 1e-8)
    raise(errc::invalid_argument, "normal must be a unit vector");
  Vec3 nh = n / nn;

  InteriorPointCertificate cert;
  cert.delta = delta;
  cert.kappa = kappa;
  cert.epsilon = epsilon_dk(kappa);
  cert.lhs = delta_condition_lhs(delta);
  cert.holds = cert.lhs < cert.epsilon;
  cert.normal = nh;
  cert.shear = (delta - 1.0) * nh;
  cert.point = Mat3::identity() + outer(cert.shear, cert.normal);
  cert.ball_radius = std::cbrt(delta) * cert.epsilon;

  if (cert.holds) {
    double df = det(cert.point);
    if (std::abs(df - delta) > 1e-12 * delta)
      raise(errc::numeric_failure, "interior point lost the determinant");
    double dist = std::sqrt(interior_deviation_sq(delta, nh));
    if (!(dist < cert.ball_radius))
      raise(errc::numeric_failure, "interior point escaped its ball");
  }
  return cert;
}

double interior_deviation_sq(double delta, const Vec3& n) {
  double shear = delta - 1.0;
  double tm1 = cbrt_minus_one(delta);
  double sum = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double d = shear * n[i] * n[j] - (i == j ? tm1 : 0.0);
      sum += d * d;
    }
  }
  return sum;
}

CubicAusteniteReport cubic_austenite_check(const Stretch& u) {
  const double delta = u.determinant();
  const double lhs = delta_condition_lhs(delta);
  KappaSet s = kappa_set(u);

  CubicAusteniteReport report;
  bool have_winner = false;
  double best_sq = -1.0;

  for (const KappaEntry& e : s.entries) {
    KappaCandidate cand;
    cand.entry = e;
    cand.admissible =
        e.kappa > 0.0 && e.kappa < 1.5 && std::abs(e.kappa - 1.0) > 1e-12;
    cand.lhs = lhs;
    if (cand.admissible) {
      cand.epsilon = epsilon_dk(e.kappa);
      cand.holds = lhs < cand.epsilon;
      double sq = (e.kappa - 1.0) * (e.kappa - 1.0);
      if (sq > best_sq) {
        best_sq = sq;
        report.winner = e;
        have_winner = true;
      }
    } else {
      cand.epsilon = 0.0;
      cand.holds = false;
    }
    report.candidates.push_back(cand);
  }

  if (!have_winner)
    raise(errc::no_admissible_kappa,
          "S(U) has no kappa in (0, 3/2) distinct from 1");

  report.certificate =
      construct_interior_point(delta, vec3(1, 0, 0), report.winner.kappa);
  return report;
}

}  // namespace amic

#include "amic/surface.hpp"

#include <cmath>
#include <limits>

#include "amic/rng.hpp"

namespace amic {

namespace {
constexpr int kDenseSamples = 4097;
}

ProfileFunction::ProfileFunction(std::function<double(double)> h,
                                 std::function<double(double)> hdot,
                                 double sup_bound, std::string name)
    : h_(std::move(h)), hdot_(std::move(hdot)), sup_bound_(sup_bound),
      name_(std::move(name)) {
  if (!h_ || !hdot_) raise(errc::invalid_argument, "profile callbacks must be set");
  if (!(sup_bound_ >= 0.0) || !std::isfinite(sup_bound_))
    raise(errc::invalid_argument, "slope bound must be a finite nonnegative number");
  if (std::abs(h_(0.0)) > 1e-12 || std::abs(hdot_(0.0)) > 1e-12)
    raise(errc::invalid_argument, "profile must satisfy h(0) = 0 and h'(0) = 0");
}

ProfileFunction ProfileFunction::gauss_bump(double scale) {
  if (!std::isfinite(scale)) raise(errc::non_finite, "scale is not finite");
  // |h'| = |2t - 2t^3| e^{-t^2} peaks where 2t^4 - 5t^2 + 1 = 0.
  double tsq = (5.0 - std::sqrt(17.0)) / 4.0;
  double t = std::sqrt(tsq);
  double peak = std::abs(2.0 * t - 2.0 * t * tsq) * std::exp(-tsq);
  return ProfileFunction(
      [scale](double x) { return scale * x * x * std::exp(-x * x); },
      [scale](double x) {
        return scale * (2.0 * x - 2.0 * x * x * x) * std::exp(-x * x);
      },
      std::abs(scale) * peak, "gauss-bump");
}

ProfileFunction ProfileFunction::zero() {
  return ProfileFunction([](double) { return 0.0; }, [](double) { return 0.0; },
                         0.0, "zero");
}

InterfaceSurface build_surface(const Vec3& n, const Vec3& a,
                               const ProfileFunction& profile, double epsilon,
                               double radius, bool allow_planar) {
  if (!all_finite(n) || !all_finite(a))
    raise(errc::non_finite, "surface directions have NaN/Inf entries");
  double an = norm(a);
  if (an <= 1e-14) raise(errc::zero_shear, "shear vector vanishes");
  if (std::abs(norm(n) - 1.0) > 1e-8)
    raise(errc::invalid_argument, "normal must be a unit vector");
  if (!(epsilon > 0.0) || !(radius > 0.0))
    raise(errc::invalid_argument, "epsilon and radius must be positive");
  Vec3 nh = normalized(n);

  Vec3 c = cross(a, nh);
  double w = norm(c);
  Vec3 tau;
  if (w <= 1e-12 * an) {
    // a parallel to n: deterministic perpendicular, scaled like |a ^ n| at
    // right angles so the slope bound keeps its meaning
    int k = 0;
    if (std::abs(nh[1]) < std::abs(nh[k])) k = 1;
    if (std::abs(nh[2]) < std::abs(nh[k])) k = 2;
    Vec3 e;
    e[k] = 1.0;
    tau = normalized(e - dot(e, nh) * nh);
    w = an;
  } else {
    tau = c / w;
  }

  // Dense slope scan over the working interval [-w r, w r]: certify the
  // stored bound and detect constant-slope (planar) profiles.
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  double span = w * radius;
  for (int i = 0; i < kDenseSamples; ++i) {
    double t = -span + 2.0 * span * i / (kDenseSamples - 1);
    double s = profile.slope(t);
    if (!std::isfinite(s)) raise(errc::non_finite, "profile slope is not finite");
    if (std::abs(s) > profile.sup_bound() + 1e-12)
      raise(errc::invalid_argument,
            "profile slope exceeds its certified bound at t = " + std::to_string(t));
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  if (hi - lo <= 1e-6 && !allow_planar)
    raise(errc::planar_profile,
          "profile slope is constant on the working interval: Gamma is planar");

  if (!(profile.sup_bound() * w < epsilon / an))
    raise(errc::bound_violated,
          "slope bound violated: sup|h'| * |c| = " +
              std::to_string(profile.sup_bound() * w) +
              " must stay below epsilon/|a| = " + std::to_string(epsilon / an));

  return InterfaceSurface(nh, a, tau, w, profile, epsilon, radius, allow_planar);
}

double InterfaceSurface::implicit_value(const Vec3& x) const {
  return dot(x, n_) + profile_.value(w_ * dot(x, tau_));
}

Vec3 InterfaceSurface::implicit_gradient(const Vec3& x) const {
  return n_ + (profile_.slope(w_ * dot(x, tau_)) * w_) * tau_;
}

Vec3 InterfaceSurface::normal_at(const Vec3& x) const {
  return normalized(implicit_gradient(x));
}

Vec3 InterfaceSurface::shear_at(const Vec3& x) const {
  return norm(implicit_gradient(x)) * a_;
}

Vec3 InterfaceSurface::frame_point(double xi, double s) const {
  return (-profile_.value(w_ * xi)) * n_ + xi * tau_ + s * m_;
}

Vec3 InterfaceSurface::frame_velocity(double xi, double dxi, double ds) const {
  return (-profile_.slope(w_ * xi) * w_ * dxi) * n_ + dxi * tau_ + ds * m_;
}

double InterfaceSurface::working_radius() const {
  return std::sqrt(2.0) * radius_ + profile_.sup_bound() * w_ * radius_;
}

DeformationValue deformation_plus(const InterfaceSurface& surface, const Vec3& x) {
  if (!all_finite(x)) raise(errc::non_finite, "point has NaN/Inf entries");
  if (norm(x) > surface.working_radius() * (1.0 + 1e-9))
    raise(errc::out_of_domain, "point lies outside the working ball");
  double f = surface.implicit_value(x);
  Vec3 g = surface.implicit_gradient(x);
  return {x + f * surface.shear(), Mat3::identity() + outer(surface.shear(), g)};
}

SurfaceMesh mesh_interface(const InterfaceSurface& surface, int resolution) {
  if (resolution < 2) raise(errc::invalid_argument, "resolution must be >= 2");
  SurfaceMesh mesh;
  mesh.resolution = resolution;
  const int n = resolution;
  const double r = surface.domain_radius();
  mesh.vertices.reserve(static_cast<std::size_t>(n) * n);

  for (int i = 0; i < n; ++i) {
    double xi = -r + 2.0 * r * i / (n - 1);
    for (int j = 0; j < n; ++j) {
      double s = -r + 2.0 * r * j / (n - 1);
      Vec3 x = surface.frame_point(xi, s);
      mesh.vertices.push_back(x);
      mesh.normals.push_back(surface.normal_at(x));
      mesh.shears.push_back(surface.shear_at(x));
      mesh.frame_coords.push_back({xi, s});
    }
  }
  for (int i = 0; i + 1 < n; ++i) {
    for (int j = 0; j + 1 < n; ++j) {
      int v00 = i * n + j, v10 = (i + 1) * n + j;
      int v11 = (i + 1) * n + j + 1, v01 = i * n + j + 1;
      mesh.triangles.push_back({v00, v10, v11});
      mesh.triangles.push_back({v00, v11, v01});
    }
  }

  mesh.source_normal = surface.normal();
  mesh.source_shear = surface.shear();
  mesh.source_transverse = surface.transverse();
  mesh.source_weight = surface.transverse_weight();
  mesh.source_radius = r;
  return mesh;
}

namespace {

void require_match(const InterfaceSurface& surface, const SurfaceMesh& mesh) {
  bool ok = mesh.resolution >= 2 &&
            distance(mesh.source_normal, surface.normal()) <= 1e-12 &&
            distance(mesh.source_shear, surface.shear()) <= 1e-12 &&
            distance(mesh.source_transverse, surface.transverse()) <= 1e-12 &&
            std::abs(mesh.source_weight - surface.transverse_weight()) <= 1e-12 &&
            std::abs(mesh.source_radius - surface.domain_radius()) <= 1e-12;
  if (ok) {
    for (const Vec3& v : mesh.vertices)
      if (std::abs(surface.implicit_value(v)) > 1e-10) {
        ok = false;
        break;
      }
  }
  if (!ok)
    raise(errc::mesh_surface_mismatch, "mesh was not produced from this surface");
}

}  // namespace

CompatibilityReport verify_compatibility(const InterfaceSurface& surface,
                                         const SurfaceMesh& mesh,
                                         const HullTest& hull_test) {
  require_match(surface, mesh);

  CompatibilityReport rep{};
  rep.max_jump_residual = 0.0;
  rep.det_deviation = 0.0;
  rep.ball_membership_margin = std::numeric_limits<double>::infinity();
  rep.path_continuity_residual = 0.0;

  const Vec3 a = surface.shear();
  const double det_target = 1.0 + dot(a, surface.normal());
  const double ball = surface.epsilon() / norm(a);

  int lo_idx = 0, hi_idx = 0;
  double lo_slope = std::numeric_limits<double>::infinity();
  double hi_slope = -lo_slope;

  for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
    const Vec3& x = mesh.vertices[i];
    Vec3 g = surface.implicit_gradient(x);
    Mat3 grad = Mat3::identity() + outer(a, g);

    double jump = frobenius_distance(grad, Mat3::identity() +
                                               outer(mesh.shears[i], mesh.normals[i]));
    rep.max_jump_residual = std::max(rep.max_jump_residual, jump);
    rep.det_deviation =
        std::max(rep.det_deviation, std::abs(det(grad) - det_target));
    rep.ball_membership_margin =
        std::min(rep.ball_membership_margin, ball - distance(g, surface.normal()));

    double slope = surface.profile().slope(surface.transverse_weight() *
                                           dot(x, surface.transverse()));
    if (slope < lo_slope) { lo_slope = slope; lo_idx = static_cast<int>(i); }
    if (slope > hi_slope) { hi_slope = slope; hi_idx = static_cast<int>(i); }

    if (hull_test && !hull_test(grad)) ++rep.hull_failures;
  }

  double gap = distance(mesh.normals[hi_idx], mesh.normals[lo_idx]);
  if (gap > 1e-6) {
    rep.witness_a = lo_idx;
    rep.witness_b = hi_idx;
    rep.witness_normal_gap = gap;
  }
  return rep;
}

HullTest make_ball_membership_test(double delta, double epsilon,
                                   double det_rel_tol) {
  double t = std::cbrt(delta);
  double radius = t * epsilon;
  return [delta, t, radius, det_rel_tol](const Mat3& f) {
    if (std::abs(det(f) - delta) > det_rel_tol * std::abs(delta)) return false;
    return frobenius_distance(f, t * Mat3::identity()) < radius;
  };
}

double path_continuity_check(const InterfaceSurface& surface,
                             const SurfaceMesh& mesh, int trials, int steps,
                             std::uint64_t seed) {
  require_match(surface, mesh);
  if (mesh.vertices.size() < 2)
    raise(errc::disconnected_mesh, "mesh has fewer than two vertices");
  if (trials < 1 || steps < 1)
    raise(errc::invalid_argument, "trials and steps must be positive");

  double worst = 0.0;
  for (const Vec3& v : mesh.vertices) {
    DeformationValue d = deformation_plus(surface, v);
    worst = std::max(worst, distance(d.value, v));
  }

  Rng rng(seed);
  const int nv = static_cast<int>(mesh.vertices.size());
  for (int trial = 0; trial < trials; ++trial) {
    int i = rng.uniform_int(nv);
    int j = rng.uniform_int(nv);
    if (j == i) j = (j + 1) % nv;

    const auto& pi = mesh.frame_coords[i];
    const auto& pj = mesh.frame_coords[j];
    double dxi = pj[0] - pi[0], ds = pj[1] - pi[1];

    // trapezoid over the lifted in-surface segment; the velocity is tangent,
    // so the pointwise jump [a(x)(x)n(x)] gamma'(t) vanishes identically
    Vec3 closure;
    for (int k = 0; k <= steps; ++k) {
      double t = static_cast<double>(k) / steps;
      double xi = pi[0] + t * dxi;
      double s = pi[1] + t * ds;
      Vec3 x = surface.frame_point(xi, s);
      Vec3 vel = surface.frame_velocity(xi, dxi, ds);
      Vec3 integrand = dot(surface.normal_at(x), vel) * surface.shear_at(x);
      double wk = (k == 0 || k == steps) ? 0.5 : 1.0;
      closure = closure + (wk / steps) * integrand;
    }
    worst = std::max(worst, norm(closure));
  }
  return worst;
}

double chord_tangency_defect(const InterfaceSurface& surface, const Vec3& x0,
                             const Vec3& x1, int steps) {
  if (steps < 1) raise(errc::invalid_argument, "steps must be positive");
  Vec3 vel = x1 - x0;
  double acc = 0.0;
  for (int k = 0; k <= steps; ++k) {
    double t = static_cast<double>(k) / steps;
    Vec3 x = x0 + t * vel;
    double rate = std::abs(dot(surface.normal_at(x), vel)) * norm(surface.shear_at(x));
    double wk = (k == 0 || k == steps) ? 0.5 : 1.0;
    acc += (wk / steps) * rate;
  }
  return acc;
}

}  // namespace amic

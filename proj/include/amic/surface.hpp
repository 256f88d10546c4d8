#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "amic/mat3.hpp"

namespace amic {

/// Scalar profile h with derivative and a certified bound on |h'|.
/// Requires h(0) = 0 and h'(0) = 0.
class ProfileFunction {
 public:
  ProfileFunction(std::function<double(double)> h,
                  std::function<double(double)> hdot, double sup_bound,
                  std::string name = "custom");

  /// scale * t^2 exp(-t^2); the slope bound is the analytic global maximum.
  static ProfileFunction gauss_bump(double scale = 1.0);

  /// h == 0, planar control.
  static ProfileFunction zero();

  double value(double t) const { return h_(t); }
  double slope(double t) const { return hdot_(t); }
  double sup_bound() const { return sup_bound_; }
  const std::string& name() const { return name_; }

 private:
  std::function<double(double)> h_, hdot_;
  double sup_bound_;
  std::string name_;
};

/// Level set Gamma = { f = 0 } of f(x) = x.n + h(x.c) with c = a ^ n (or a
/// deterministic perpendicular scaled to |a| when a is parallel to n).
/// The gradient n + h'(x.c) c keeps a . grad f = a . n everywhere.
class InterfaceSurface {
 public:
  const Vec3& normal() const { return n_; }        // unit, = grad f(0)
  const Vec3& shear() const { return a_; }
  const Vec3& transverse() const { return tau_; }  // unit direction of c
  const Vec3& in_plane() const { return m_; }      // n ^ tau, tangent everywhere
  double transverse_weight() const { return w_; }  // |c|
  const ProfileFunction& profile() const { return profile_; }
  double domain_radius() const { return radius_; }
  double epsilon() const { return epsilon_; }
  bool planar_allowed() const { return planar_allowed_; }

  double implicit_value(const Vec3& x) const;
  Vec3 implicit_gradient(const Vec3& x) const;
  Vec3 normal_at(const Vec3& x) const;  // grad f / |grad f|
  Vec3 shear_at(const Vec3& x) const;   // |grad f| a

  /// Exact point of Gamma with frame coordinates (xi, s) along (tau, m).
  Vec3 frame_point(double xi, double s) const;
  /// Velocity of t -> frame_point(xi(t), s(t)) for given coordinate rates.
  Vec3 frame_velocity(double xi, double dxi, double ds) const;

  /// Radius of the ball on which deformation_plus is defined.
  double working_radius() const;

 private:
  friend InterfaceSurface build_surface(const Vec3&, const Vec3&,
                                        const ProfileFunction&, double, double,
                                        bool);
  InterfaceSurface(Vec3 n, Vec3 a, Vec3 tau, double w, ProfileFunction profile,
                   double epsilon, double radius, bool planar_allowed)
      : n_(n), a_(a), tau_(tau), m_(cross(n, tau)), w_(w),
        profile_(std::move(profile)), epsilon_(epsilon), radius_(radius),
        planar_allowed_(planar_allowed) {}

  Vec3 n_, a_, tau_, m_;
  double w_;
  ProfileFunction profile_;
  double epsilon_, radius_;
  bool planar_allowed_;
};

/// Validates the slope bound sup|h'| * |c| < epsilon / |a| (which keeps
/// |grad f - n| < epsilon / |a|), rejects constant-slope profiles unless
/// `allow_planar`, and assembles the surface.
InterfaceSurface build_surface(const Vec3& n, const Vec3& a,
                               const ProfileFunction& profile, double epsilon,
                               double radius, bool allow_planar = false);

struct DeformationValue {
  Vec3 value;     // y+(x) = x + a f(x)
  Mat3 gradient;  // 1 + a (x) grad f(x)
};

/// Deformation on the martensite side; det gradient = 1 + a.n independent of x.
DeformationValue deformation_plus(const InterfaceSurface& surface, const Vec3& x);

/// Triangulated graph mesh of Gamma over the (tau, m) frame plane.
struct SurfaceMesh {
  int resolution = 0;
  std::vector<Vec3> vertices;
  std::vector<std::array<int, 3>> triangles;
  std::vector<Vec3> normals;                      // n(x) per vertex
  std::vector<Vec3> shears;                       // a(x) per vertex
  std::vector<std::array<double, 2>> frame_coords;  // (xi, s) per vertex

  // construction fingerprint, checked by the verification passes
  Vec3 source_normal, source_shear, source_transverse;
  double source_weight = 0.0, source_radius = 0.0;
};

/// resolution x resolution vertex grid over [-r, r]^2 in frame coordinates;
/// every vertex lies on Gamma up to rounding.
SurfaceMesh mesh_interface(const InterfaceSurface& surface, int resolution);

struct CompatibilityReport {
  double max_jump_residual;       // max |Dy+ - 1 - a(x)(x)n(x)|
  double det_deviation;           // max |det Dy+ - (1 + a.n)|
  double ball_membership_margin;  // min of epsilon/|a| - |grad f - n|
  double path_continuity_residual;  // filled by path_continuity_check
  int witness_a = -1, witness_b = -1;  // vertex pair with distinct normals
  double witness_normal_gap = 0.0;
  long hull_failures = 0;  // gradients rejected by the optional predicate
};

using HullTest = std::function<bool(const Mat3&)>;

/// Per-vertex certification of the generalized jump condition.
CompatibilityReport verify_compatibility(const InterfaceSurface& surface,
                                         const SurfaceMesh& mesh,
                                         const HullTest& hull_test = {});

/// Membership predicate for the relative ball B(D^{1/3} 1, D^{1/3} eps) on
/// the determinant-Delta leaf.
HullTest make_ball_membership_test(double delta, double epsilon,
                                   double det_rel_tol = 1e-9);

/// Integrates the pointwise jump [a(x)(x)n(x)] gamma'(t) along in-surface
/// paths between random vertex pairs and returns the largest closure norm;
/// also re-checks y+(x) = x at the vertices. Trapezoid rule with `steps`
/// panels per path.
double path_continuity_check(const InterfaceSurface& surface,
                             const SurfaceMesh& mesh, int trials,
                             int steps = 1000, std::uint64_t seed = 1);

/// Accumulated pointwise tangency defect along the straight chord
/// x0 -> x1: integral of |(n(c(t)) . c'(t))| |a(c(t))| dt. Zero for paths
/// tangent to Gamma, generically positive for chords that leave it.
double chord_tangency_defect(const InterfaceSurface& surface, const Vec3& x0,
                             const Vec3& x1, int steps = 1000);

}  // namespace amic

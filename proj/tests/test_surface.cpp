#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "amic/interior_point.hpp"
#include "amic/surface.hpp"
#include "amic/surface_io.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace amic;
using testsupport::check_mat_near;
using testsupport::check_vec_near;

namespace {

// gauss-bump graph over the transverse direction, unconstrained slope
InterfaceSurface canonical_surface(double radius = 2.0) {
  return build_surface(vec3(1, 0, 0), vec3(0, 0, 1),
                       ProfileFunction::gauss_bump(1.0), 1.0, radius);
}

}  // namespace

TEST_CASE("gauss-bump: certified slope bound matches numeric maximization") {
  ProfileFunction p = ProfileFunction::gauss_bump(1.0);
  double numeric = oracles::max_abs_1d(
      [&](double t) { return p.slope(t); }, -6.0, 6.0);
  CHECK(p.sup_bound() == doctest::Approx(numeric).epsilon(1e-10));
  CHECK(p.sup_bound() == doctest::Approx(0.5872).epsilon(1e-3));
  CHECK(p.value(0.0) == 0.0);
  CHECK(p.slope(0.0) == 0.0);
}

TEST_CASE("ProfileFunction: rejects profiles off the origin") {
  CHECK_THROWS_AS(ProfileFunction([](double t) { return t + 1.0; },
                                  [](double) { return 1.0; }, 1.0),
                  Error);
  CHECK_THROWS_AS(ProfileFunction([](double t) { return t; },
                                  [](double) { return 1.0; }, 1.0),
                  Error);  // h'(0) != 0
}

TEST_CASE("build_surface: canonical parameters") {
  InterfaceSurface s = canonical_surface();
  check_vec_near(s.transverse(), vec3(0, 1, 0), 1e-15);  // a ^ n
  CHECK(s.transverse_weight() == doctest::Approx(1.0).epsilon(1e-15));
  check_vec_near(s.in_plane(), vec3(0, 0, 1), 1e-15);    // n ^ tau
  CHECK(s.implicit_value(vec3(0, 0, 0)) == 0.0);
  check_vec_near(s.implicit_gradient(vec3(0, 0, 0)), s.normal(), 1e-15);
}

TEST_CASE("build_surface: slope bound enforcement") {
  // epsilon = 1e-3, |a| = 1: need sup|h'| < 1e-3
  double scale_ok = 0.99e-3 / ProfileFunction::gauss_bump(1.0).sup_bound();
  InterfaceSurface ok = build_surface(vec3(1, 0, 0), vec3(0, 0, 1),
                                      ProfileFunction::gauss_bump(scale_ok),
                                      1e-3, 2.0);
  CHECK(ok.epsilon() == 1e-3);
  try {
    build_surface(vec3(1, 0, 0), vec3(0, 0, 1), ProfileFunction::gauss_bump(1.0),
                  1e-3, 2.0);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::bound_violated);
  }
}

TEST_CASE("build_surface: planar profile rejected unless forced") {
  try {
    build_surface(vec3(1, 0, 0), vec3(0, 0, 1), ProfileFunction::zero(), 1.0, 2.0);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::planar_profile);
  }
  InterfaceSurface s = build_surface(vec3(1, 0, 0), vec3(0, 0, 1),
                                     ProfileFunction::zero(), 1.0, 2.0, true);
  CHECK(s.planar_allowed());
}

TEST_CASE("build_surface: zero shear and bad normal rejected") {
  try {
    build_surface(vec3(1, 0, 0), vec3(0, 0, 0), ProfileFunction::gauss_bump(1.0),
                  1.0, 2.0);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::zero_shear);
  }
  CHECK_THROWS_AS(build_surface(vec3(2, 0, 0), vec3(0, 0, 1),
                                ProfileFunction::gauss_bump(1.0), 1.0, 2.0),
                  Error);
}

TEST_CASE("build_surface: parallel shear falls back to a deterministic transverse") {
  InterfaceSurface s = build_surface(vec3(1, 0, 0), vec3(2, 0, 0),
                                     ProfileFunction::gauss_bump(0.01), 1.0, 2.0);
  check_vec_near(s.transverse(), vec3(0, 1, 0), 1e-15);
  CHECK(s.transverse_weight() == doctest::Approx(2.0).epsilon(1e-15));
  // orthogonality identity still exact: a . grad f = a . n everywhere
  Rng rng(501);
  for (int i = 0; i < 100; ++i) {
    Vec3 x = rng.uniform(0.0, 1.5) * rng.unit_vector();
    CHECK(std::abs(dot(s.shear(), s.implicit_gradient(x)) -
                   dot(s.shear(), s.normal())) <= 1e-14);
  }
}

TEST_CASE("deformation_plus: gradient at the origin and constant determinant") {
  InterfaceSurface s = canonical_surface();
  DeformationValue d0 = deformation_plus(s, vec3(0, 0, 0));
  check_mat_near(d0.gradient,
                 Mat3::identity() + outer(s.shear(), s.normal()), 1e-15);

  double target = 1.0 + dot(s.shear(), s.normal());
  Rng rng(502);
  for (int i = 0; i < 10000; ++i) {
    Vec3 x = rng.uniform(0.0, 2.0) * rng.unit_vector();
    DeformationValue d = deformation_plus(s, x);
    CHECK(std::abs(det(d.gradient) - target) <= 1e-12);
  }
}

TEST_CASE("deformation_plus: analytic gradient matches finite differences") {
  InterfaceSurface s = canonical_surface();
  Rng rng(503);
  for (int i = 0; i < 100; ++i) {
    Vec3 x = rng.uniform(0.0, 1.8) * rng.unit_vector();
    Mat3 fd = oracles::fd_gradient(
        [&](const Vec3& p) { return deformation_plus(s, p).value; }, x);
    Mat3 an = deformation_plus(s, x).gradient;
    CHECK(frobenius_distance(fd, an) <= 1e-6 * std::max(1.0, frobenius_norm(an)));
  }
}

TEST_CASE("deformation_plus: out-of-domain points rejected") {
  InterfaceSurface s = canonical_surface();
  try {
    deformation_plus(s, vec3(100, 0, 0));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::out_of_domain);
  }
}

TEST_CASE("mesh_interface: minimal resolution") {
  InterfaceSurface s = canonical_surface();
  SurfaceMesh m = mesh_interface(s, 2);
  CHECK(m.vertices.size() == 4);
  CHECK(m.triangles.size() == 2);
  for (const Vec3& v : m.vertices) CHECK(std::abs(s.implicit_value(v)) <= 1e-10);
  CHECK_THROWS_AS(mesh_interface(s, 1), Error);
}

TEST_CASE("mesh_interface: vertices sit on the zero set exactly up to rounding") {
  InterfaceSurface s = canonical_surface();
  SurfaceMesh m = mesh_interface(s, 100);
  REQUIRE(m.vertices.size() == 10000);
  for (const Vec3& v : m.vertices) CHECK(std::abs(s.implicit_value(v)) <= 1e-12);
  for (std::size_t i = 0; i < m.vertices.size(); ++i)
    CHECK(std::abs(norm(m.normals[i]) - 1.0) <= 1e-12);
}

TEST_CASE("mesh_interface: cross-sections trace (-h(t), t, k) in frame coordinates") {
  InterfaceSurface s = canonical_surface();
  SurfaceMesh m = mesh_interface(s, 25);
  for (std::size_t i = 0; i < m.vertices.size(); ++i) {
    const Vec3& v = m.vertices[i];
    double t = m.frame_coords[i][0];
    double k = m.frame_coords[i][1];
    CHECK(std::abs(dot(v, s.normal()) + s.profile().value(t)) <= 1e-14);
    CHECK(std::abs(dot(v, s.transverse()) - t) <= 1e-14);
    CHECK(std::abs(dot(v, s.in_plane()) - k) <= 1e-14);
  }
}

TEST_CASE("verify_compatibility: jump condition holds to rounding") {
  InterfaceSurface s = canonical_surface();
  SurfaceMesh m = mesh_interface(s, 100);
  CompatibilityReport r = verify_compatibility(s, m);
  CHECK(r.max_jump_residual <= 1e-12);
  CHECK(r.det_deviation <= 1e-12);
  // epsilon/|a| - max|grad f - n| over the sampled vertices
  double worst = 0.0;
  for (const Vec3& v : m.vertices)
    worst = std::max(worst, distance(s.implicit_gradient(v), s.normal()));
  CHECK(r.ball_membership_margin == doctest::Approx(1.0 - worst).epsilon(1e-12));
  // the sampled max sits just under the certified bound
  CHECK(worst <= ProfileFunction::gauss_bump(1.0).sup_bound());
  CHECK(worst > 0.58);
  CHECK(r.witness_a >= 0);
  CHECK(r.witness_b >= 0);
  CHECK(r.witness_normal_gap > 1e-6);
  CHECK(r.hull_failures == 0);
}

TEST_CASE("verify_compatibility: planar control degenerates cleanly") {
  InterfaceSurface s = build_surface(vec3(1, 0, 0), vec3(0, 0, 1),
                                     ProfileFunction::zero(), 1.0, 2.0, true);
  SurfaceMesh m = mesh_interface(s, 20);
  CompatibilityReport r = verify_compatibility(s, m);
  CHECK(r.max_jump_residual == 0.0);
  CHECK(r.det_deviation <= 1e-15);
  CHECK(r.witness_a == -1);  // no non-planarity witness
  CHECK(r.witness_b == -1);
}

TEST_CASE("verify_compatibility: mismatched mesh rejected") {
  InterfaceSurface s1 = canonical_surface();
  InterfaceSurface s2 = build_surface(vec3(0, 1, 0), vec3(0, 0, 1),
                                      ProfileFunction::gauss_bump(1.0), 1.0, 2.0);
  SurfaceMesh m = mesh_interface(s2, 10);
  CHECK_THROWS_AS(verify_compatibility(s1, m), Error);
}

TEST_CASE("verify_compatibility: certificate ball test accepts every gradient") {
  // near-volume-preserving certificate, then a surface built from its (a, n)
  double delta = 1.0 + 1e-9;
  double a_lat = 1.02;
  Stretch u(Mat3::diagonal(a_lat, std::sqrt(delta / a_lat), std::sqrt(delta / a_lat)));
  CubicAusteniteReport rep = cubic_austenite_check(u);
  REQUIRE(rep.certificate.holds);

  const InteriorPointCertificate& c = rep.certificate;
  double t = std::cbrt(c.delta);
  double slack = c.ball_radius - frobenius_distance(c.point, t * Mat3::identity());
  REQUIRE(slack > 0.0);

  InterfaceSurface s = build_surface(c.normal, c.shear,
                                     ProfileFunction::gauss_bump(1000.0),
                                     0.9 * slack, 2.0);
  SurfaceMesh m = mesh_interface(s, 40);
  CompatibilityReport r =
      verify_compatibility(s, m, make_ball_membership_test(c.delta, c.epsilon));
  CHECK(r.hull_failures == 0);
  CHECK(r.ball_membership_margin >= 0.0);
  CHECK(r.max_jump_residual <= 1e-12);
}

TEST_CASE("path_continuity_check: in-surface paths close to quadrature accuracy") {
  InterfaceSurface s = canonical_surface();
  SurfaceMesh m = mesh_interface(s, 30);
  double res = path_continuity_check(s, m, 50, 1000, 42);
  CHECK(res <= 1e-8);
}

TEST_CASE("path_continuity_check: trivial inputs rejected") {
  InterfaceSurface s = canonical_surface();
  SurfaceMesh m = mesh_interface(s, 30);
  CHECK_THROWS_AS(path_continuity_check(s, m, 0, 1000, 1), Error);
}

TEST_CASE("chord_tangency_defect: zero-length chords vanish") {
  InterfaceSurface s = canonical_surface();
  Vec3 x = s.frame_point(0.7, -0.3);
  CHECK(chord_tangency_defect(s, x, x) == 0.0);
}

TEST_CASE("chord_tangency_defect: chords off the surface accumulate defect") {
  InterfaceSurface s = canonical_surface();
  SurfaceMesh m = mesh_interface(s, 30);
  Rng rng(504);
  int exceed = 0;
  const int trials = 100;
  for (int t = 0; t < trials; ++t) {
    int i = rng.uniform_int(static_cast<int>(m.vertices.size()));
    int j = rng.uniform_int(static_cast<int>(m.vertices.size()));
    if (i == j) j = (j + 1) % m.vertices.size();
    double defect = chord_tangency_defect(s, m.vertices[i], m.vertices[j]);
    if (defect > 1e-4) ++exceed;
  }
  CHECK(exceed >= 90);

  // chords within a ruling of the surface stay tangent: zero defect
  Vec3 p0 = s.frame_point(0.5, -1.0);
  Vec3 p1 = s.frame_point(0.5, 1.5);
  CHECK(chord_tangency_defect(s, p0, p1) <= 1e-12);
}

TEST_CASE("surface_io: OBJ and CSV round-trip through a parser") {
  InterfaceSurface s = canonical_surface();
  SurfaceMesh m = mesh_interface(s, 3);

  std::ostringstream obj;
  write_obj(m, obj);
  std::istringstream in(obj.str());
  std::string tok;
  int vcount = 0, fcount = 0;
  std::vector<Vec3> parsed;
  while (in >> tok) {
    if (tok == "v") {
      Vec3 v;
      in >> v[0] >> v[1] >> v[2];
      parsed.push_back(v);
      ++vcount;
    } else if (tok == "f") {
      int a, b, c;
      in >> a >> b >> c;
      CHECK(a >= 1);
      CHECK(b >= 1);
      CHECK(c >= 1);
      CHECK(a <= static_cast<int>(m.vertices.size()));
      CHECK(b <= static_cast<int>(m.vertices.size()));
      CHECK(c <= static_cast<int>(m.vertices.size()));
      ++fcount;
    }
  }
  CHECK(vcount == static_cast<int>(m.vertices.size()));
  CHECK(fcount == static_cast<int>(m.triangles.size()));
  for (std::size_t i = 0; i < parsed.size(); ++i)
    check_vec_near(parsed[i], m.vertices[i], 0.0);  // shortest round-trip is exact

  std::ostringstream csv;
  write_residuals_csv(s, m, csv);
  std::string text = csv.str();
  CHECK(text.rfind("x,y,z,jump_residual,det_deviation,ball_margin\r\n", 0) == 0);
  int rows = 0;
  for (std::size_t pos = 0; (pos = text.find("\r\n", pos)) != std::string::npos;
       pos += 2)
    ++rows;
  CHECK(rows == static_cast<int>(m.vertices.size()) + 1);  // header + data
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "amic/case_study.hpp"
#include "amic/twinning.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace amic;
using testsupport::check_mat_near;
using testsupport::check_vec_near;

namespace {

double recomputed_residual(const Mat3& a, const Mat3& b, const RankOneConnection& c) {
  return frobenius_distance(c.rotation.matrix() * b,
                            a + outer(c.shear, c.normal));
}

}  // namespace

TEST_CASE("solve_rank_one: coincident wells are a degenerate verdict") {
  auto r = solve_rank_one(Mat3::identity(), Mat3::identity());
  CHECK(r.verdict == RankOneVerdict::degenerate_coincidence);
  CHECK(r.connections.empty());

  Rng rng(201);
  Mat3 q = rng.rotation();
  Mat3 u = testsupport::random_spd(rng, 0.6, 1.6);
  auto r2 = solve_rank_one(u, q * u);
  CHECK(r2.verdict == RankOneVerdict::degenerate_coincidence);
}

TEST_CASE("solve_rank_one: recovers a planted simple shear off the identity") {
  Vec3 b0 = vec3(0.12, 0.0, -0.05);
  Vec3 m0 = normalized(vec3(0.0, 1.0, 0.0));
  CHECK(std::abs(dot(b0, m0)) < 1e-15);  // det-preserving shear
  Mat3 b = Mat3::identity() + outer(b0, m0);

  auto r = solve_rank_one(Mat3::identity(), b);
  REQUIRE(r.verdict == RankOneVerdict::two_solutions);
  REQUIRE(r.connections.size() == 2);
  double best = 1e30;
  for (const auto& c : r.connections) {
    CHECK(recomputed_residual(Mat3::identity(), b, c) <= 1e-10);
    CHECK(std::abs(norm(c.normal) - 1.0) <= 1e-12);
    best = std::min(best, frobenius_distance(outer(c.shear, c.normal), outer(b0, m0)));
  }
  CHECK(best <= 1e-8);  // one branch is the planted (1, b0, m0)
}

TEST_CASE("solve_rank_one: diagonal two-well pair twins across (1,+-1,0)") {
  Mat3 a = Mat3::diagonal(0.9, 1.1, 1.0);
  Mat3 b = Mat3::diagonal(1.1, 0.9, 1.0);
  auto r = solve_rank_one(a, b);
  REQUIRE(r.verdict == RankOneVerdict::two_solutions);
  REQUIRE(r.connections.size() == 2);

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  bool plus = false, minus = false;
  for (const auto& c : r.connections) {
    CHECK(recomputed_residual(a, b, c) <= 1e-10);
    if (distance(c.normal, vec3(inv_sqrt2, inv_sqrt2, 0)) <= 1e-10) plus = true;
    if (distance(c.normal, vec3(inv_sqrt2, -inv_sqrt2, 0)) <= 1e-10) minus = true;
  }
  CHECK(plus);
  CHECK(minus);

  // brute-force oracle over the rotation group finds the same two connections
  auto oracle = oracles::brute_force_rank_one(a, b);
  REQUIRE(oracle.size() == 2);
  for (const auto& oc : oracle) {
    CHECK(oc.residual <= 1e-8);
    double best = 1e30;
    for (const auto& c : r.connections)
      best = std::min(best, frobenius_distance(outer(oc.shear, oc.normal),
                                               outer(c.shear, c.normal)));
    CHECK(best <= 1e-6);
  }
}

TEST_CASE("solve_rank_one: reversal keeps residuals small") {
  Mat3 a = Mat3::diagonal(0.9, 1.1, 1.0);
  Mat3 b = Mat3::diagonal(1.1, 0.9, 1.0);
  auto r = solve_rank_one(b, a);
  REQUIRE(r.verdict == RankOneVerdict::two_solutions);
  for (const auto& c : r.connections)
    CHECK(recomputed_residual(b, a, c) <= 1e-8);
}

TEST_CASE("solve_rank_one: variant pairs of the CuAlNi stretch") {
  Stretch u = cualni_stretch(cualni_reference_params);
  auto vs = variants(u, cubic_group());
  REQUIRE(vs.size() == 6);
  int solvable = 0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      auto r = solve_rank_one(vs[i].matrix(), vs[j].matrix());
      if (r.verdict != RankOneVerdict::two_solutions) continue;
      ++solvable;
      for (const auto& c : r.connections)
        CHECK(recomputed_residual(vs[i].matrix(), vs[j].matrix(), c) <= 1e-8);
    }
  }
  CHECK(solvable > 0);
}

TEST_CASE("solve_rank_one: brute-force oracle on a non-diagonal variant pair") {
  Stretch u = cualni_stretch(cualni_reference_params);
  auto vs = variants(u, cubic_group());
  REQUIRE(vs.size() == 6);
  // pick the first solvable pair with full off-diagonal structure
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      auto r = solve_rank_one(vs[i].matrix(), vs[j].matrix());
      if (r.verdict != RankOneVerdict::two_solutions) continue;

      auto oracle = oracles::brute_force_rank_one(vs[i].matrix(), vs[j].matrix());
      REQUIRE(oracle.size() == 2);
      for (const auto& oc : oracle) {
        double best = 1e30;
        for (const auto& c : r.connections)
          best = std::min(best, frobenius_distance(outer(oc.shear, oc.normal),
                                                   outer(c.shear, c.normal)));
        CHECK(best <= 1e-6);
      }
      return;
    }
  }
  CHECK(false);  // no solvable pair found
}

TEST_CASE("solve_rank_one: determinant mismatch and singular input rejected") {
  CHECK_THROWS_AS(solve_rank_one(Mat3::diagonal(1, 1, 1), Mat3::diagonal(1, 1, 1.1)),
                  Error);
  try {
    solve_rank_one(Mat3::diagonal(1, 1, 1), Mat3::diagonal(1, 1, 1.1));
  } catch (const Error& e) {
    CHECK(e.code() == errc::determinant_mismatch);
  }
  CHECK_THROWS_AS(solve_rank_one(Mat3::diagonal(1, 0, 1), Mat3::diagonal(1, 0, 1)),
                  Error);
}

TEST_CASE("solve_rank_one: no solution when the middle eigenvalue is off") {
  // dets match but A^-T B^T B A^-1 = diag has middle eigenvalue != 1
  Mat3 a = Mat3::identity();
  Mat3 b = Mat3::diagonal(1.21, 1.1, 1.0 / 1.331);
  CHECK(std::abs(det(a) - det(b)) <= 1e-12);
  auto r = solve_rank_one(a, b);
  CHECK(r.verdict == RankOneVerdict::no_solution);
}

TEST_CASE("mallard_twin: CuAlNi stretch across e2") {
  Stretch u = cualni_stretch(cualni_reference_params);
  RankOneConnection c = mallard_twin(u, vec3(0, 1, 0));
  check_vec_near(c.normal, vec3(0, 1, 0), 1e-15);
  Mat3 r = 2.0 * outer(c.normal, c.normal) - Mat3::identity();
  double res = frobenius_distance(c.rotation.matrix() * (u.matrix() * r),
                                  u.matrix() + outer(c.shear, c.normal));
  CHECK(res <= 1e-10);

  // consistent with the generic solver applied to (U, U R)
  auto full = solve_rank_one(u.matrix(), u.matrix() * r);
  REQUIRE(full.verdict == RankOneVerdict::two_solutions);
  double best = 1e30;
  for (const auto& f : full.connections)
    best = std::min(best, frobenius_distance(outer(f.shear, f.normal),
                                             outer(c.shear, c.normal)));
  CHECK(best <= 1e-8);
}

TEST_CASE("mallard_twin: axes that are invariant directions have no twin") {
  // diagonal stretch: every coordinate axis is an eigenvector
  CHECK_THROWS_AS(mallard_twin(Stretch(Mat3::diagonal(0.9, 1.0, 1.2)), vec3(1, 0, 0)),
                  Error);
  // the CuAlNi stretch keeps e1 as an eigenvector, so e1 degenerates too
  Stretch u = cualni_stretch(cualni_reference_params);
  try {
    mallard_twin(u, vec3(1, 0, 0));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == errc::no_twin);
  }
}

TEST_CASE("mallard_twin: rejects axes outside the two-fold set") {
  Rng rng(202);
  Stretch u(testsupport::random_noncommuting_spd(rng));
  CHECK_THROWS_AS(mallard_twin(u, vec3(1, 1, 1)), Error);  // three-fold axis
  CHECK_THROWS_AS(mallard_twin(u, vec3(0, 0, 0)), Error);
}

TEST_CASE("mallard_twin: shear components reproduce the metric identity") {
  // (U a)_j = -2 (U^2)_{1j} for j != 1, e = e1
  Rng rng(203);
  for (int trial = 0; trial < 50; ++trial) {
    Mat3 um = testsupport::random_noncommuting_spd(rng);
    Stretch u(um);
    RankOneConnection c = mallard_twin(u, vec3(1, 0, 0));
    Vec3 ua = um * c.shear;
    Mat3 u2 = um * um;
    CHECK(std::abs(ua[1] + 2.0 * u2(0, 1)) <= 1e-10);
    CHECK(std::abs(ua[2] + 2.0 * u2(0, 2)) <= 1e-10);
  }
}

TEST_CASE("mallard_average: averaged metric drops the axis couplings") {
  Rng rng(204);
  for (int trial = 0; trial < 50; ++trial) {
    Mat3 um = testsupport::random_noncommuting_spd(rng);
    Stretch u(um);
    Mat3 f = mallard_average(u, vec3(1, 0, 0));
    Mat3 c = transpose(f) * f;
    CHECK(std::abs(c(0, 1)) <= 1e-10);
    CHECK(std::abs(c(0, 2)) <= 1e-10);
    double delta = u.determinant();
    double target = delta * delta / cofactor(um * um)(0, 0);
    CHECK(std::abs(c(0, 0) - target) <= 1e-10 * target);
    // untouched block
    Mat3 u2 = um * um;
    CHECK(std::abs(c(1, 2) - u2(1, 2)) <= 1e-10);
    CHECK(std::abs(c(1, 1) - u2(1, 1)) <= 1e-10);
    CHECK(std::abs(c(2, 2) - u2(2, 2)) <= 1e-10);
  }
}

TEST_CASE("mallard_average: face-diagonal axis") {
  Rng rng(205);
  Mat3 um = testsupport::random_noncommuting_spd(rng);
  Stretch u(um);
  Vec3 e = normalized(vec3(1, 1, 0));
  RankOneConnection c = mallard_twin(u, e);
  Mat3 r = 2.0 * outer(e, e) - Mat3::identity();
  CHECK(frobenius_distance(c.rotation.matrix() * (u.matrix() * r),
                           u.matrix() + outer(c.shear, c.normal)) <= 1e-10);
  // averaged metric has e as an eigenvector
  Mat3 f = u.matrix() + 0.5 * outer(c.shear, c.normal);
  Mat3 cm = transpose(f) * f;
  Vec3 ce = cm * e;
  CHECK(norm(ce - dot(e, ce) * e) <= 1e-10);
}

TEST_CASE("habit_plane: recovers a planted shear") {
  Vec3 b0 = vec3(0.08, 0.02, 0.01);
  Vec3 m0 = normalized(vec3(0.1, 0.95, 0.2));
  CHECK(dot(b0, m0) >= 0.0);
  Mat3 m = Mat3::identity() + outer(b0, m0);

  auto r = habit_plane(m);
  REQUIRE(r.verdict == HabitVerdict::two_solutions);
  double best = 1e30;
  for (const auto& s : r.solutions) {
    CHECK(frobenius_distance(s.rotation.matrix() * m,
                             Mat3::identity() + outer(s.shape, s.normal)) <= 1e-10);
    best = std::min(best, frobenius_distance(outer(s.shape, s.normal), outer(b0, m0)));
  }
  CHECK(best <= 1e-8);
}

TEST_CASE("habit_plane: diagonal example with unit middle stretch") {
  Mat3 m = Mat3::diagonal(0.95, 1.0, 1.08);
  auto r = habit_plane(m);
  REQUIRE(r.verdict == HabitVerdict::two_solutions);
  REQUIRE(r.solutions.size() == 2);
  for (const auto& s : r.solutions) {
    CHECK(s.residual <= 1e-10);
    CHECK(frobenius_distance(s.rotation.matrix() * m,
                             Mat3::identity() + outer(s.shape, s.normal)) <= 1e-10);
    // determinant identity
    double lhs = det(Mat3::identity() + outer(s.shape, s.normal));
    CHECK(std::abs(lhs - (1.0 + dot(s.shape, s.normal))) <= 1e-12);
    CHECK(std::abs(lhs - det(m)) <= 1e-10);
  }
  // deterministic ordering by normal
  const Vec3& n0 = r.solutions[0].normal;
  const Vec3& n1 = r.solutions[1].normal;
  CHECK((n0[0] < n1[0] || (n0[0] == n1[0] && n0[1] <= n1[1])));
}

TEST_CASE("habit_plane: no solution when the middle eigenvalue misses 1") {
  auto r = habit_plane(Mat3::diagonal(0.9, 0.95, 1.1));
  CHECK(r.verdict == HabitVerdict::no_solution);
  CHECK(r.solutions.empty());
}

TEST_CASE("habit_plane: rotations are the trivial input") {
  Rng rng(206);
  auto r = habit_plane(rng.rotation());
  CHECK(r.verdict == HabitVerdict::identity_input);
}

TEST_CASE("habit_plane: frame indifference") {
  Rng rng(207);
  Mat3 m = Mat3::diagonal(0.95, 1.0, 1.08);
  auto base = habit_plane(m);
  REQUIRE(base.verdict == HabitVerdict::two_solutions);
  for (int trial = 0; trial < 20; ++trial) {
    Mat3 r0 = rng.rotation();
    auto moved = habit_plane(r0 * m);
    REQUIRE(moved.verdict == HabitVerdict::two_solutions);
    for (std::size_t i = 0; i < 2; ++i) {
      check_vec_near(moved.solutions[i].shape, base.solutions[i].shape, 1e-8);
      check_vec_near(moved.solutions[i].normal, base.solutions[i].normal, 1e-8);
      check_mat_near(moved.solutions[i].rotation.matrix(),
                     base.solutions[i].rotation.matrix() * transpose(r0), 1e-8);
    }
  }
}

TEST_CASE("habit_plane: random solvable inputs keep residuals at closed-form level") {
  Rng rng(208);
  for (int trial = 0; trial < 100; ++trial) {
    // M = Q diag(sqrt(c1), 1, sqrt(c3)) P^T has M^T M with middle eigenvalue 1
    double c1 = rng.uniform(0.5, 0.999);
    double c3 = rng.uniform(1.001, 1.8);
    Mat3 m = rng.rotation() *
             Mat3::diagonal(std::sqrt(c1), 1.0, std::sqrt(c3)) *
             transpose(rng.rotation());
    if (det(m) < 0.1) continue;
    auto r = habit_plane(m);
    REQUIRE(r.verdict == HabitVerdict::two_solutions);
    for (const auto& s : r.solutions) {
      CHECK(frobenius_distance(s.rotation.matrix() * m,
                               Mat3::identity() + outer(s.shape, s.normal)) <= 1e-8);
      CHECK(std::abs(det(Mat3::identity() + outer(s.shape, s.normal)) - det(m)) <=
            1e-10 * std::max(1.0, det(m)));
    }
  }
}

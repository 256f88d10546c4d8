#pragma once

#include <vector>

#include "amic/symmetry.hpp"

namespace amic {

/// A certified rank-one connection: Q * B = A + shear (x) normal.
struct RankOneConnection {
  Rotation rotation;
  Vec3 shear;
  Vec3 normal;      // unit, largest-magnitude component positive
  double residual;  // |Q*B - A - shear(x)normal|_F
};

enum class RankOneVerdict { two_solutions, no_solution, degenerate_coincidence };

struct RankOneResult {
  RankOneVerdict verdict;
  std::vector<RankOneConnection> connections;  // size 2 when solvable, else 0
};

/// All (Q, a, n) with Q*B = A + a(x)n. Solvable exactly when
/// C = A^-T B^T B A^-1 differs from the identity and has middle eigenvalue 1
/// (within `middle_tol`). Returns exactly two solutions or none; wells that
/// coincide (B = Q*A) are reported as a degenerate verdict.
RankOneResult solve_rank_one(const Mat3& a, const Mat3& b,
                             double middle_tol = 1e-8,
                             double coincidence_tol = 1e-10);

/// Twin of U across the 180-degree rotation about `axis` (which must be a
/// two-fold axis of the cubic group): Q*U*R - U = a(x)e with R = -1 + 2e(x)e.
/// The normal is the axis itself. Throws no_twin when R^T U R = U.
RankOneConnection mallard_twin(const Stretch& u, const Vec3& axis);

/// Midpoint F_1/2 = U + a/2 (x) e of the Mallard twin pair.
Mat3 mallard_average(const Stretch& u, const Vec3& axis);

struct HabitPlaneSolution {
  Rotation rotation;
  Vec3 shape;       // b
  Vec3 normal;      // m, unit, largest-magnitude component positive
  double residual;  // |R*M - 1 - b(x)m|_F
};

enum class HabitVerdict { two_solutions, no_solution, identity_input };

struct HabitResult {
  HabitVerdict verdict;
  std::vector<HabitPlaneSolution> solutions;  // sorted by normal
};

/// Habit-plane equation R*M = 1 + b(x)m. Solvable exactly when M^T M has
/// middle eigenvalue 1 (within `middle_tol`) and M is not a rotation.
HabitResult habit_plane(const Mat3& m, double middle_tol = 1e-8);

namespace detail {

/// One Mallard step for a general invertible F: the shear a with
/// Q(F R) = F + a(x)e, R = -1 + 2e(x)e, namely a = 2(F^-T e/|F^-T e|^2 - F e).
Vec3 mallard_shear(const Mat3& f, const Vec3& e);

/// True when e is (numerically) an eigenvector of F^T F, i.e. the step above
/// degenerates to a = 0.
bool mallard_degenerate(const Mat3& f, const Vec3& e, double tol = 1e-10);

}  // namespace detail

}  // namespace amic

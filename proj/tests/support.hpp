#pragma once

#include <doctest.h>

#include "amic/symmetry.hpp"
#include "generators.hpp"

namespace testsupport {

inline void check_mat_near(const Mat3& a, const Mat3& b, double tol) {
  CHECK(frobenius_distance(a, b) <= tol);
}

inline void check_vec_near(const Vec3& a, const Vec3& b, double tol) {
  CHECK(distance(a, b) <= tol);
}

}  // namespace testsupport

#pragma once

#include <array>
#include <cmath>

#include "amic/error.hpp"

namespace amic {

struct Vec3 {
  double v[3]{0.0, 0.0, 0.0};
  double& operator[](int i) { return v[i]; }
  double operator[](int i) const { return v[i]; }
};

constexpr Vec3 vec3(double x, double y, double z) { return Vec3{{x, y, z}}; }

inline Vec3 operator+(const Vec3& a, const Vec3& b) {
  return vec3(a[0] + b[0], a[1] + b[1], a[2] + b[2]);
}
inline Vec3 operator-(const Vec3& a, const Vec3& b) {
  return vec3(a[0] - b[0], a[1] - b[1], a[2] - b[2]);
}
inline Vec3 operator-(const Vec3& a) { return vec3(-a[0], -a[1], -a[2]); }
inline Vec3 operator*(double s, const Vec3& a) {
  return vec3(s * a[0], s * a[1], s * a[2]);
}
inline Vec3 operator*(const Vec3& a, double s) { return s * a; }
inline Vec3 operator/(const Vec3& a, double s) { return (1.0 / s) * a; }

inline double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return vec3(a[1] * b[2] - a[2] * b[1],
              a[2] * b[0] - a[0] * b[2],
              a[0] * b[1] - a[1] * b[0]);
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline Vec3 normalized(const Vec3& a) { return a / norm(a); }
inline double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }

/// Real 3x3 matrix, row-major.
struct Mat3 {
  double m[3][3]{{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};

  double& operator()(int i, int j) { return m[i][j]; }
  double operator()(int i, int j) const { return m[i][j]; }

  static Mat3 identity() {
    Mat3 r;
    r(0, 0) = r(1, 1) = r(2, 2) = 1.0;
    return r;
  }
  static Mat3 diagonal(double a, double b, double c) {
    Mat3 r;
    r(0, 0) = a;
    r(1, 1) = b;
    r(2, 2) = c;
    return r;
  }
  static Mat3 from_rows(const Vec3& r0, const Vec3& r1, const Vec3& r2) {
    Mat3 r;
    for (int j = 0; j < 3; ++j) {
      r(0, j) = r0[j];
      r(1, j) = r1[j];
      r(2, j) = r2[j];
    }
    return r;
  }
};

inline Mat3 operator+(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}
inline Mat3 operator-(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}
inline Mat3 operator*(double s, const Mat3& a) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = s * a(i, j);
  return r;
}
inline Mat3 operator*(const Mat3& a, double s) { return s * a; }
inline Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
      r(i, j) = s;
    }
  return r;
}
inline Vec3 operator*(const Mat3& a, const Vec3& x) {
  Vec3 r;
  for (int i = 0; i < 3; ++i)
    r[i] = a(i, 0) * x[0] + a(i, 1) * x[1] + a(i, 2) * x[2];
  return r;
}

inline Mat3 transpose(const Mat3& a) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = a(j, i);
  return r;
}

inline Mat3 outer(const Vec3& a, const Vec3& b) {
  Mat3 r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r(i, j) = a[i] * b[j];
  return r;
}

inline double trace(const Mat3& a) { return a(0, 0) + a(1, 1) + a(2, 2); }

inline double det(const Mat3& a) {
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

inline double frobenius_norm(const Mat3& a) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

inline double frobenius_distance(const Mat3& a, const Mat3& b) {
  return frobenius_norm(a - b);
}

inline double max_abs(const Mat3& a) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) s = std::max(s, std::abs(a(i, j)));
  return s;
}

inline Vec3 row(const Mat3& a, int i) {
  return vec3(a(i, 0), a(i, 1), a(i, 2));
}
inline Vec3 col(const Mat3& a, int j) {
  return vec3(a(0, j), a(1, j), a(2, j));
}

inline bool all_finite(const Vec3& a) {
  return std::isfinite(a[0]) && std::isfinite(a[1]) && std::isfinite(a[2]);
}
inline bool all_finite(const Mat3& a) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!std::isfinite(a(i, j))) return false;
  return true;
}

/// Sorted spectral decomposition of a symmetric matrix.
struct SymEigen {
  std::array<double, 3> values;   // nondecreasing
  std::array<Vec3, 3> vectors;    // orthonormal, sign-normalized

  Mat3 reconstruct() const {
    Mat3 r;
    for (int k = 0; k < 3; ++k) r = r + values[k] * outer(vectors[k], vectors[k]);
    return r;
  }
};

/// Spectral decomposition of a symmetric 3x3 matrix.
///
/// Closed-form characteristic-polynomial roots with one Newton polish each,
/// followed by a deflation step for the eigenvectors. The eigenvector sign
/// convention is fixed: the largest-magnitude component is positive.
SymEigen sym_eigen(const Mat3& a, double asym_tol = 1e-12);

/// Rotation factor R of the polar decomposition F = R * sqrt(F^T F).
Mat3 polar_rotation(const Mat3& f);

/// Cofactor matrix, satisfying cof(A)^T A = det(A) * 1.
Mat3 cofactor(const Mat3& a);

Mat3 inverse(const Mat3& a);

/// Symmetric square root of a symmetric positive-semidefinite matrix.
Mat3 sqrt_spd(const Mat3& a);

}  // namespace amic

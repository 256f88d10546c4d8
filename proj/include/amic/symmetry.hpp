#pragma once

#include <vector>

#include "amic/mat3.hpp"

namespace amic {

/// Proper rotation: R^T R = 1 and det R = 1, validated at construction.
class Rotation {
 public:
  explicit Rotation(const Mat3& m, double tol = 1e-12);
  static Rotation identity() { return Rotation(Mat3::identity()); }

  const Mat3& matrix() const { return m_; }
  Rotation inverse() const { return Rotation(transpose(m_)); }

 private:
  Mat3 m_;
};

inline Rotation operator*(const Rotation& a, const Rotation& b) {
  return Rotation(a.matrix() * b.matrix());
}

/// Rotation by `angle` (radians) about `axis` (normalized internally).
Rotation rotation_about_axis(double angle, const Vec3& axis);

struct PointGroup {
  std::vector<Rotation> elements;

  /// Index of the closest element within `tol` (Frobenius), or -1.
  int find(const Mat3& r, double tol = 1e-10) const;
};

/// The 24 rotations of the cube, in a fixed enumeration order: identity,
/// +-90 degrees about the axes, +-120 degrees about the body diagonals,
/// 180 degrees about the axes, 180 degrees about the face diagonals.
const PointGroup& cubic_group();

/// Symmetric positive-definite transformation stretch with cached determinant.
class Stretch {
 public:
  explicit Stretch(const Mat3& m);

  const Mat3& matrix() const { return m_; }
  double determinant() const { return det_; }

 private:
  Mat3 m_;
  double det_;
};

/// Distinct variants { R^T U R : R in group }, deduplicated by Frobenius
/// distance.
std::vector<Stretch> variants(const Stretch& u, const PointGroup& group,
                              double dedup_tol = 1e-8);

}  // namespace amic

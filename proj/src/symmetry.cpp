#include "amic/symmetry.hpp"

#include <cmath>

namespace amic {

Rotation::Rotation(const Mat3& m, double tol) : m_(m) {
  if (!all_finite(m)) raise(errc::non_finite, "rotation matrix has NaN/Inf entries");
  double ortho = frobenius_distance(transpose(m) * m, Mat3::identity());
  double d = det(m);
  if (ortho > tol || std::abs(d - 1.0) > tol)
    raise(errc::invalid_argument,
          "matrix is not a proper rotation (orthogonality residual " +
              std::to_string(ortho) + ", det " + std::to_string(d) + ")");
}

Rotation rotation_about_axis(double angle, const Vec3& axis) {
  if (!all_finite(axis) || !std::isfinite(angle))
    raise(errc::non_finite, "axis/angle has NaN/Inf entries");
  double n = norm(axis);
  if (n <= 1e-14) raise(errc::zero_axis, "rotation axis has zero length");
  Vec3 e = axis / n;

  double c = std::cos(angle);
  double s = std::sin(angle);
  Mat3 skew;
  skew(0, 1) = -e[2];
  skew(0, 2) = e[1];
  skew(1, 0) = e[2];
  skew(1, 2) = -e[0];
  skew(2, 0) = -e[1];
  skew(2, 1) = e[0];
  Mat3 r = c * Mat3::identity() + s * skew + (1.0 - c) * outer(e, e);
  return Rotation(r, 1e-10);
}

int PointGroup::find(const Mat3& r, double tol) const {
  int best = -1;
  double best_d = tol;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    double d = frobenius_distance(elements[i].matrix(), r);
    if (d <= best_d) {
      best = static_cast<int>(i);
      best_d = d;
    }
  }
  return best;
}

const PointGroup& cubic_group() {
  static const PointGroup group = [] {
    PointGroup g;
    const double quarter = M_PI / 2.0;
    const double third = 2.0 * M_PI / 3.0;
    const double half = M_PI;
    const Vec3 e1 = vec3(1, 0, 0);
    const Vec3 e2 = vec3(0, 1, 0);
    const Vec3 e3 = vec3(0, 0, 1);

    g.elements.push_back(Rotation::identity());
    for (const Vec3& e : {e1, e2, e3}) {
      g.elements.push_back(rotation_about_axis(quarter, e));
      g.elements.push_back(rotation_about_axis(-quarter, e));
    }
    for (const Vec3& d : {vec3(1, 1, 1), vec3(-1, 1, 1), vec3(1, -1, 1), vec3(1, 1, -1)}) {
      g.elements.push_back(rotation_about_axis(third, d));
      g.elements.push_back(rotation_about_axis(-third, d));
    }
    for (const Vec3& e : {e1, e2, e3}) g.elements.push_back(rotation_about_axis(half, e));
    for (const Vec3& d : {vec3(1, 1, 0), vec3(1, -1, 0), vec3(0, 1, 1),
                          vec3(0, 1, -1), vec3(1, 0, 1), vec3(-1, 0, 1)}) {
      g.elements.push_back(rotation_about_axis(half, d));
    }
    return g;
  }();
  return group;
}

Stretch::Stretch(const Mat3& m) : m_(m) {
  if (!all_finite(m)) raise(errc::non_finite, "stretch has NaN/Inf entries");
  double scale = std::max(1.0, frobenius_norm(m));
  double asym = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      asym = std::max(asym, std::abs(m(i, j) - m(j, i)));
  if (asym > 1e-12 * scale)
    raise(errc::non_symmetric, "stretch is not symmetric");
  SymEigen e = sym_eigen(m);
  if (e.values[0] <= 0.0)
    raise(errc::invalid_argument, "stretch is not positive definite");
  det_ = det(m);
}

std::vector<Stretch> variants(const Stretch& u, const PointGroup& group,
                              double dedup_tol) {
  std::vector<Stretch> out;
  for (const Rotation& r : group.elements) {
    Mat3 v = transpose(r.matrix()) * u.matrix() * r.matrix();
    // symmetrize away rounding so the Stretch constructor stays happy
    v = 0.5 * (v + transpose(v));
    bool duplicate = false;
    for (const Stretch& w : out) {
      if (frobenius_distance(w.matrix(), v) <= dedup_tol) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) out.emplace_back(v);
  }
  return out;
}

}  // namespace amic

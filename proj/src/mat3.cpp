#include "amic/mat3.hpp"

#include <algorithm>
#include <cmath>

namespace amic {

namespace {

void require_finite(const Mat3& a, const char* what) {
  if (!all_finite(a)) raise(errc::non_finite, std::string(what) + " has NaN/Inf entries");
}

// Characteristic polynomial p(x) = -x^3 + i1 x^2 - i2 x + i3 and one guarded
// Newton step per root.
struct CharPoly {
  double i1, i2, i3;
  double eval(double x) const { return ((-x + i1) * x - i2) * x + i3; }
  double deriv(double x) const { return (-3.0 * x + 2.0 * i1) * x - i2; }
  double polish(double x, double scale) const {
    double d = deriv(x);
    if (d == 0.0) return x;
    double step = eval(x) / d;
    if (std::abs(step) > 1e-8 * std::max(1.0, scale)) return x;
    return x - step;
  }
};

Vec3 any_unit_perpendicular(const Vec3& v) {
  int k = 0;
  if (std::abs(v[1]) < std::abs(v[k])) k = 1;
  if (std::abs(v[2]) < std::abs(v[k])) k = 2;
  Vec3 e;
  e[k] = 1.0;
  Vec3 u = e - dot(e, v) * v;
  return normalized(u);
}

// Unit null vector of (S - lambda*1), assuming rank 2. Candidates come from
// cross products of the rows; the largest wins.
Vec3 null_vector(const Mat3& s, double lambda) {
  Mat3 m = s - lambda * Mat3::identity();
  Vec3 c01 = cross(row(m, 0), row(m, 1));
  Vec3 c02 = cross(row(m, 0), row(m, 2));
  Vec3 c12 = cross(row(m, 1), row(m, 2));
  double n01 = norm(c01), n02 = norm(c02), n12 = norm(c12);
  Vec3 best = c01;
  double best_n = n01;
  if (n02 > best_n) { best = c02; best_n = n02; }
  if (n12 > best_n) { best = c12; best_n = n12; }
  if (best_n == 0.0) {
    // rank deficiency beyond 1; any direction is as good as another
    return vec3(1.0, 0.0, 0.0);
  }
  return best / best_n;
}

void sign_normalize(Vec3& v) {
  double top = std::max({std::abs(v[0]), std::abs(v[1]), std::abs(v[2])});
  int k = 0;
  for (int i = 0; i < 3; ++i) {
    if (std::abs(v[i]) >= top * (1.0 - 1e-9)) {
      k = i;
      break;
    }
  }
  if (v[k] < 0.0) v = -v;
}

}  // namespace

SymEigen sym_eigen(const Mat3& a, double asym_tol) {
  require_finite(a, "sym_eigen input");
  double scale = std::max(1.0, frobenius_norm(a));
  double asym = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      asym = std::max(asym, std::abs(a(i, j) - a(j, i)));
  if (asym > asym_tol * scale)
    raise(errc::non_symmetric, "asymmetry " + std::to_string(asym) +
                                   " exceeds tolerance");

  Mat3 s = 0.5 * (a + transpose(a));

  CharPoly cp;
  cp.i1 = trace(s);
  cp.i2 = s(0, 0) * s(1, 1) - s(0, 1) * s(0, 1) +
          s(0, 0) * s(2, 2) - s(0, 2) * s(0, 2) +
          s(1, 1) * s(2, 2) - s(1, 2) * s(1, 2);
  cp.i3 = det(s);

  double q = cp.i1 / 3.0;
  double p1 = s(0, 1) * s(0, 1) + s(0, 2) * s(0, 2) + s(1, 2) * s(1, 2);
  double p2 = (s(0, 0) - q) * (s(0, 0) - q) + (s(1, 1) - q) * (s(1, 1) - q) +
              (s(2, 2) - q) * (s(2, 2) - q) + 2.0 * p1;

  SymEigen out;
  if (p2 <= 1e-30 * scale * scale) {
    // isotropic: S = q*1
    out.values = {q, q, q};
    out.vectors = {vec3(1, 0, 0), vec3(0, 1, 0), vec3(0, 0, 1)};
    return out;
  }

  double p = std::sqrt(p2 / 6.0);
  Mat3 b = (1.0 / p) * (s - q * Mat3::identity());
  double r = std::clamp(0.5 * det(b), -1.0, 1.0);
  double phi = std::acos(r) / 3.0;

  double l3 = q + 2.0 * p * std::cos(phi);
  double l1 = q + 2.0 * p * std::cos(phi + 2.0 * M_PI / 3.0);
  double l2 = cp.i1 - l1 - l3;

  l1 = cp.polish(l1, scale);
  l2 = cp.polish(l2, scale);
  l3 = cp.polish(l3, scale);
  std::array<double, 3> lam = {l1, l2, l3};
  std::sort(lam.begin(), lam.end());

  // Pick the extremal eigenvalue with the larger gap to the middle one: its
  // eigenvector is the best conditioned, then diagonalize the 2x2 complement.
  bool low_isolated = (lam[1] - lam[0]) >= (lam[2] - lam[1]);
  double target = low_isolated ? lam[0] : lam[2];
  Vec3 v = null_vector(s, target);

  Vec3 u = any_unit_perpendicular(v);
  Vec3 w = cross(v, u);

  double s11 = dot(u, s * u);
  double s12 = dot(u, s * w);
  double s22 = dot(w, s * w);
  double c = 1.0, sn = 0.0;
  if (s12 != 0.0) {
    double tau = (s22 - s11) / (2.0 * s12);
    double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    c = 1.0 / std::sqrt(1.0 + t * t);
    sn = t * c;
  }
  Vec3 x1 = c * u - sn * w;
  Vec3 x2 = sn * u + c * w;

  std::array<std::pair<double, Vec3>, 3> pairs = {
      std::make_pair(dot(v, s * v), v),
      std::make_pair(dot(x1, s * x1), x1),
      std::make_pair(dot(x2, s * x2), x2)};
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  for (int k = 0; k < 3; ++k) {
    out.values[k] = pairs[k].first;
    Vec3 vk = normalized(pairs[k].second);
    sign_normalize(vk);
    out.vectors[k] = vk;
  }
  return out;
}

Mat3 polar_rotation(const Mat3& f) {
  require_finite(f, "polar_rotation input");
  double d = det(f);
  if (d <= 1e-12)
    raise(errc::singular_input,
          "determinant " + std::to_string(d) + " is not positive");

  SymEigen e = sym_eigen(transpose(f) * f, 1e-9);
  Mat3 uinv;
  for (int k = 0; k < 3; ++k) {
    if (e.values[k] <= 0.0)
      raise(errc::singular_input, "F^T F has a non-positive eigenvalue");
    uinv = uinv + (1.0 / std::sqrt(e.values[k])) * outer(e.vectors[k], e.vectors[k]);
  }
  Mat3 r = f * uinv;
  // Newton-Schulz orthogonality polish
  for (int it = 0; it < 2; ++it)
    r = 0.5 * (r * (3.0 * Mat3::identity() - transpose(r) * r));
  return r;
}

Mat3 cofactor(const Mat3& a) {
  require_finite(a, "cofactor input");
  Mat3 c;
  c(0, 0) = a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1);
  c(0, 1) = -(a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0));
  c(0, 2) = a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0);
  c(1, 0) = -(a(0, 1) * a(2, 2) - a(0, 2) * a(2, 1));
  c(1, 1) = a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0);
  c(1, 2) = -(a(0, 0) * a(2, 1) - a(0, 1) * a(2, 0));
  c(2, 0) = a(0, 1) * a(1, 2) - a(0, 2) * a(1, 1);
  c(2, 1) = -(a(0, 0) * a(1, 2) - a(0, 2) * a(1, 0));
  c(2, 2) = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  return c;
}

Mat3 inverse(const Mat3& a) {
  require_finite(a, "inverse input");
  double d = det(a);
  double fn = frobenius_norm(a);
  if (std::abs(d) <= 1e-14 * std::max(1.0, fn * fn * fn))
    raise(errc::singular_input, "matrix is numerically singular");
  return (1.0 / d) * transpose(cofactor(a));
}

Mat3 sqrt_spd(const Mat3& a) {
  SymEigen e = sym_eigen(a);
  double top = std::max(1.0, std::abs(e.values[2]));
  if (e.values[0] < -1e-10 * top)
    raise(errc::invalid_argument, "matrix is not positive semidefinite");
  Mat3 r;
  for (int k = 0; k < 3; ++k) {
    double lk = std::max(0.0, e.values[k]);
    r = r + std::sqrt(lk) * outer(e.vectors[k], e.vectors[k]);
  }
  return r;
}

}  // namespace amic

#include "amic/twinning.hpp"

#include <algorithm>
#include <cmath>

namespace amic {

namespace {

void sign_normalize_pair(Vec3& shear, Vec3& normal) {
  double top = std::max({std::abs(normal[0]), std::abs(normal[1]),
                         std::abs(normal[2])});
  // smallest index among near-maximal components, so exact magnitude ties
  // (e.g. (1,-1,0)/sqrt 2) resolve the same way regardless of rounding
  int k = 0;
  for (int i = 0; i < 3; ++i) {
    if (std::abs(normal[i]) >= top * (1.0 - 1e-9)) {
      k = i;
      break;
    }
  }
  if (normal[k] < 0.0) {
    normal = -normal;
    shear = -shear;
  }
}

bool lex_less(const Vec3& a, const Vec3& b) {
  for (int i = 0; i < 3; ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return false;
}

// Rank-one factors of C = (1 + m(x)b)(1 + b(x)m) given the sorted spectrum
// of C with middle eigenvalue pinned to 1. kappa = +-1 selects the branch.
struct Factor {
  Vec3 b;
  Vec3 m;  // unit
};

Factor rank_one_factor(const SymEigen& e, int kappa) {
  double c1 = e.values[0], c3 = e.values[2];
  double s1 = std::max(0.0, 1.0 - c1);
  double s3 = std::max(0.0, c3 - 1.0);
  double d = c3 - c1;
  double k = static_cast<double>(kappa);

  Vec3 b = std::sqrt(c3 * s1 / d) * e.vectors[0] +
           k * std::sqrt(c1 * s3 / d) * e.vectors[2];
  Vec3 m = ((std::sqrt(c3) - std::sqrt(c1)) / std::sqrt(d)) *
           (-std::sqrt(s1) * e.vectors[0] + k * std::sqrt(s3) * e.vectors[2]);
  double mn = norm(m);
  return {mn * b, m / mn};
}

}  // namespace

RankOneResult solve_rank_one(const Mat3& a, const Mat3& b, double middle_tol,
                             double coincidence_tol) {
  if (!all_finite(a) || !all_finite(b))
    raise(errc::non_finite, "solve_rank_one input has NaN/Inf entries");
  double da = det(a), db = det(b);
  if (da <= 1e-12 || db <= 1e-12)
    raise(errc::singular_input, "inputs must have positive determinant");
  if (std::abs(da - db) > 1e-10 * std::max(da, db))
    raise(errc::determinant_mismatch,
          "det A = " + std::to_string(da) + " but det B = " + std::to_string(db));

  Mat3 m = b * inverse(a);
  Mat3 c = transpose(m) * m;
  if (frobenius_distance(c, Mat3::identity()) <= coincidence_tol)
    return {RankOneVerdict::degenerate_coincidence, {}};

  SymEigen e = sym_eigen(c, 1e-9);
  if (std::abs(e.values[1] - 1.0) > middle_tol)
    return {RankOneVerdict::no_solution, {}};

  RankOneResult out;
  out.verdict = RankOneVerdict::two_solutions;
  for (int kappa : {+1, -1}) {
    Factor f = rank_one_factor(e, kappa);
    // Q B A^-1 = 1 + b(x)m  =>  Q B = A + b (x) (A^T m)
    Vec3 n_raw = transpose(a) * f.m;
    double nn = norm(n_raw);
    Vec3 normal = n_raw / nn;
    Vec3 shear = nn * f.b;
    sign_normalize_pair(shear, normal);
    Mat3 q = polar_rotation((a + outer(shear, normal)) * transpose(b));
    double res = frobenius_distance(q * b, a + outer(shear, normal));
    out.connections.push_back({Rotation(q, 1e-9), shear, normal, res});
  }
  std::sort(out.connections.begin(), out.connections.end(),
            [](const RankOneConnection& x, const RankOneConnection& y) {
              if (lex_less(x.normal, y.normal)) return true;
              if (lex_less(y.normal, x.normal)) return false;
              return lex_less(x.shear, y.shear);
            });
  return out;
}

namespace detail {

Vec3 mallard_shear(const Mat3& f, const Vec3& e) {
  Vec3 fe = f * e;
  Vec3 g = transpose(inverse(f)) * e;
  return 2.0 * (g / dot(g, g) - fe);
}

bool mallard_degenerate(const Mat3& f, const Vec3& e, double tol) {
  Mat3 c = transpose(f) * f;
  Vec3 ce = c * e;
  Vec3 defect = ce - dot(e, ce) * e;
  return norm(defect) <= tol * std::max(1.0, frobenius_norm(c));
}

}  // namespace detail

RankOneConnection mallard_twin(const Stretch& u, const Vec3& axis) {
  if (!all_finite(axis)) raise(errc::non_finite, "axis has NaN/Inf entries");
  double an = norm(axis);
  if (an <= 1e-14) raise(errc::zero_axis, "axis has zero length");
  Vec3 e = axis / an;
  Mat3 r = 2.0 * outer(e, e) - Mat3::identity();
  if (cubic_group().find(r, 1e-8) < 0)
    raise(errc::invalid_argument,
          "axis is not a two-fold axis of the cubic group");

  const Mat3& um = u.matrix();
  if (frobenius_distance(r * um * r, um) <= 1e-10 * std::max(1.0, frobenius_norm(um)))
    raise(errc::no_twin, "axis is an invariant direction of the stretch");

  Vec3 a = detail::mallard_shear(um, e);
  Mat3 q = polar_rotation((um + outer(a, e)) * transpose(um * r));
  double res = frobenius_distance(q * (um * r), um + outer(a, e));
  return {Rotation(q, 1e-9), a, e, res};
}

Mat3 mallard_average(const Stretch& u, const Vec3& axis) {
  RankOneConnection t = mallard_twin(u, axis);
  return u.matrix() + 0.5 * outer(t.shear, t.normal);
}

HabitResult habit_plane(const Mat3& m, double middle_tol) {
  if (!all_finite(m)) raise(errc::non_finite, "habit_plane input has NaN/Inf entries");
  if (det(m) <= 1e-12)
    raise(errc::singular_input, "habit_plane input must have positive determinant");

  Mat3 c = transpose(m) * m;
  if (frobenius_distance(c, Mat3::identity()) <= 1e-10)
    return {HabitVerdict::identity_input, {}};

  SymEigen e = sym_eigen(c, 1e-9);
  if (std::abs(e.values[1] - 1.0) > middle_tol)
    return {HabitVerdict::no_solution, {}};

  HabitResult out;
  out.verdict = HabitVerdict::two_solutions;
  for (int kappa : {+1, -1}) {
    Factor f = rank_one_factor(e, kappa);
    Vec3 shape = f.b;
    Vec3 normal = f.m;
    sign_normalize_pair(shape, normal);
    Mat3 r = polar_rotation((Mat3::identity() + outer(shape, normal)) * transpose(m));
    double res = frobenius_distance(r * m, Mat3::identity() + outer(shape, normal));
    out.solutions.push_back({Rotation(r, 1e-9), shape, normal, res});
  }
  std::sort(out.solutions.begin(), out.solutions.end(),
            [](const HabitPlaneSolution& x, const HabitPlaneSolution& y) {
              if (lex_less(x.normal, y.normal)) return true;
              if (lex_less(y.normal, x.normal)) return false;
              return lex_less(x.shape, y.shape);
            });
  return out;
}

}  // namespace amic

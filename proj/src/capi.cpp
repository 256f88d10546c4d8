#include "amic.h"

#include <cstring>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include "amic/case_study.hpp"
#include "amic/hulls.hpp"
#include "amic/interior_point.hpp"
#include "amic/rng.hpp"
#include "amic/surface.hpp"
#include "amic/surface_io.hpp"
#include "amic/twinning.hpp"

namespace {

thread_local std::string g_last_error;

amic_status status_of(amic::errc c) {
  using amic::errc;
  switch (c) {
    case errc::ok: return AMIC_OK;
    case errc::non_finite: return AMIC_ERR_NON_FINITE;
    case errc::non_symmetric: return AMIC_ERR_NON_SYMMETRIC;
    case errc::singular_input: return AMIC_ERR_SINGULAR_INPUT;
    case errc::zero_axis: return AMIC_ERR_ZERO_AXIS;
    case errc::determinant_mismatch: return AMIC_ERR_DETERMINANT_MISMATCH;
    case errc::no_twin: return AMIC_ERR_NO_TWIN;
    case errc::kappa_out_of_range: return AMIC_ERR_KAPPA_OUT_OF_RANGE;
    case errc::kappa_degenerate: return AMIC_ERR_KAPPA_DEGENERATE;
    case errc::non_positive_delta: return AMIC_ERR_NON_POSITIVE_DELTA;
    case errc::no_admissible_kappa: return AMIC_ERR_NO_ADMISSIBLE_KAPPA;
    case errc::zero_shear: return AMIC_ERR_ZERO_SHEAR;
    case errc::bound_violated: return AMIC_ERR_BOUND_VIOLATED;
    case errc::planar_profile: return AMIC_ERR_PLANAR_PROFILE;
    case errc::out_of_domain: return AMIC_ERR_OUT_OF_DOMAIN;
    case errc::mesh_surface_mismatch: return AMIC_ERR_MESH_SURFACE_MISMATCH;
    case errc::disconnected_mesh: return AMIC_ERR_DISCONNECTED_MESH;
    case errc::degenerate_denominator: return AMIC_ERR_DEGENERATE_DENOMINATOR;
    case errc::invalid_argument: return AMIC_ERR_INVALID_ARGUMENT;
    case errc::numeric_failure: return AMIC_ERR_NUMERIC_FAILURE;
  }
  return AMIC_ERR_INTERNAL;
}

template <typename Fn>
amic_status guarded(Fn&& fn) {
  try {
    fn();
    return AMIC_OK;
  } catch (const amic::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return AMIC_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return AMIC_ERR_INTERNAL;
  }
}

amic::Mat3 to_mat(const double a[9]) {
  amic::Mat3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = a[3 * i + j];
  return m;
}

void from_mat(const amic::Mat3& m, double out[9]) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[3 * i + j] = m(i, j);
}

amic::Vec3 to_vec(const double a[3]) { return amic::vec3(a[0], a[1], a[2]); }

void from_vec(const amic::Vec3& v, double out[3]) {
  out[0] = v[0];
  out[1] = v[1];
  out[2] = v[2];
}

void fill_connection(const amic::RankOneConnection& c,
                     amic_rank_one_connection* out) {
  from_mat(c.rotation.matrix(), out->rotation);
  from_vec(c.shear, out->shear);
  from_vec(c.normal, out->normal);
  out->residual = c.residual;
}

void fill_kappa_entry(const amic::KappaEntry& e, amic_kappa_entry* out) {
  out->kappa = e.kappa;
  out->j = e.j;
  out->k = e.k;
  out->formula = e.formula;
  out->degenerate = e.degenerate ? 1 : 0;
}

void fill_certificate(const amic::InteriorPointCertificate& c,
                      amic_interior_certificate* out) {
  out->delta = c.delta;
  out->kappa = c.kappa;
  out->epsilon = c.epsilon;
  out->lhs = c.lhs;
  out->holds = c.holds ? 1 : 0;
  from_mat(c.point, out->point);
  from_vec(c.shear, out->shear);
  from_vec(c.normal, out->normal);
  out->ball_radius = c.ball_radius;
}

struct CaseData {
  double delta_cbrt;
  amic::KappaEntry winner;
  amic::InteriorPointCertificate certificate;
  std::vector<amic::KappaCandidate> candidates;
};

}  // namespace

struct amic_kappa_set {
  amic::KappaSet data;
};
struct amic_three_well_list {
  std::vector<amic::ThreeWellConfig> data;
};
struct amic_case_report {
  CaseData data;
};
struct amic_surface {
  std::unique_ptr<amic::InterfaceSurface> data;
};
struct amic_mesh {
  amic::SurfaceMesh data;
};

extern "C" {

const char* amic_status_name(int status) {
  switch (status) {
    case AMIC_OK: return "ok";
    case AMIC_ERR_NON_FINITE: return "non-finite";
    case AMIC_ERR_NON_SYMMETRIC: return "non-symmetric";
    case AMIC_ERR_SINGULAR_INPUT: return "singular-input";
    case AMIC_ERR_ZERO_AXIS: return "zero-axis";
    case AMIC_ERR_DETERMINANT_MISMATCH: return "determinant-mismatch";
    case AMIC_ERR_NO_TWIN: return "no-twin";
    case AMIC_ERR_KAPPA_OUT_OF_RANGE: return "kappa-out-of-range";
    case AMIC_ERR_KAPPA_DEGENERATE: return "kappa-degenerate";
    case AMIC_ERR_NON_POSITIVE_DELTA: return "non-positive-delta";
    case AMIC_ERR_NO_ADMISSIBLE_KAPPA: return "no-admissible-kappa";
    case AMIC_ERR_ZERO_SHEAR: return "zero-shear";
    case AMIC_ERR_BOUND_VIOLATED: return "bound-violated";
    case AMIC_ERR_PLANAR_PROFILE: return "planar-profile";
    case AMIC_ERR_OUT_OF_DOMAIN: return "out-of-domain";
    case AMIC_ERR_MESH_SURFACE_MISMATCH: return "mesh-surface-mismatch";
    case AMIC_ERR_DISCONNECTED_MESH: return "disconnected-mesh";
    case AMIC_ERR_DEGENERATE_DENOMINATOR: return "degenerate-denominator";
    case AMIC_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case AMIC_ERR_NUMERIC_FAILURE: return "numeric-failure";
    case AMIC_ERR_IO: return "io";
    case AMIC_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* amic_last_error_message(void) { return g_last_error.c_str(); }

amic_status amic_sym_eigen(const double a[9], double values[3], double vectors[9]) {
  return guarded([&] {
    amic::SymEigen e = amic::sym_eigen(to_mat(a));
    for (int i = 0; i < 3; ++i) {
      values[i] = e.values[i];
      from_vec(e.vectors[i], vectors + 3 * i);
    }
  });
}

amic_status amic_polar_rotation(const double f[9], double r[9]) {
  return guarded([&] { from_mat(amic::polar_rotation(to_mat(f)), r); });
}

amic_status amic_cofactor(const double a[9], double c[9]) {
  return guarded([&] { from_mat(amic::cofactor(to_mat(a)), c); });
}

amic_status amic_rotation_about_axis(double angle, const double axis[3], double r[9]) {
  return guarded([&] {
    from_mat(amic::rotation_about_axis(angle, to_vec(axis)).matrix(), r);
  });
}

amic_status amic_cubic_group(double out[216]) {
  return guarded([&] {
    const amic::PointGroup& g = amic::cubic_group();
    for (int i = 0; i < 24; ++i) from_mat(g.elements[i].matrix(), out + 9 * i);
  });
}

amic_status amic_variants(const double u[9], double* out, int cap, int* count) {
  return guarded([&] {
    auto vs = amic::variants(amic::Stretch(to_mat(u)), amic::cubic_group());
    *count = static_cast<int>(vs.size());
    for (int i = 0; i < *count && i < cap; ++i) from_mat(vs[i].matrix(), out + 9 * i);
  });
}

amic_status amic_solve_rank_one(const double a[9], const double b[9],
                                double middle_tol, int* verdict,
                                amic_rank_one_connection out[2], int* count) {
  return guarded([&] {
    amic::RankOneResult r = amic::solve_rank_one(to_mat(a), to_mat(b), middle_tol);
    switch (r.verdict) {
      case amic::RankOneVerdict::two_solutions: *verdict = AMIC_TWO_SOLUTIONS; break;
      case amic::RankOneVerdict::no_solution: *verdict = AMIC_NO_SOLUTION; break;
      case amic::RankOneVerdict::degenerate_coincidence:
        *verdict = AMIC_DEGENERATE_COINCIDENCE;
        break;
    }
    *count = static_cast<int>(r.connections.size());
    for (int i = 0; i < *count; ++i) fill_connection(r.connections[i], &out[i]);
  });
}

amic_status amic_mallard_twin(const double u[9], const double axis[3],
                              amic_rank_one_connection* out) {
  return guarded([&] {
    fill_connection(amic::mallard_twin(amic::Stretch(to_mat(u)), to_vec(axis)), out);
  });
}

amic_status amic_mallard_average(const double u[9], const double axis[3],
                                 double f[9]) {
  return guarded([&] {
    from_mat(amic::mallard_average(amic::Stretch(to_mat(u)), to_vec(axis)), f);
  });
}

amic_status amic_habit_plane(const double m[9], double middle_tol, int* verdict,
                             amic_habit_solution out[2], int* count) {
  return guarded([&] {
    amic::HabitResult r = amic::habit_plane(to_mat(m), middle_tol);
    switch (r.verdict) {
      case amic::HabitVerdict::two_solutions: *verdict = AMIC_HABIT_TWO_SOLUTIONS; break;
      case amic::HabitVerdict::no_solution: *verdict = AMIC_HABIT_NO_SOLUTION; break;
      case amic::HabitVerdict::identity_input: *verdict = AMIC_HABIT_IDENTITY; break;
    }
    *count = static_cast<int>(r.solutions.size());
    for (int i = 0; i < *count; ++i) {
      from_mat(r.solutions[i].rotation.matrix(), out[i].rotation);
      from_vec(r.solutions[i].shape, out[i].shape);
      from_vec(r.solutions[i].normal, out[i].normal);
      out[i].residual = r.solutions[i].residual;
    }
  });
}

amic_status amic_two_well_membership(const double f[9], double eta1, double eta2,
                                     double eta3, amic_hull_verdict* out) {
  return guarded([&] {
    amic::HullVerdict v =
        amic::two_well_membership(to_mat(f), amic::TwoWellSpec(eta1, eta2, eta3));
    out->member = v.member ? 1 : 0;
    out->block_structure_residual = v.block_structure_residual;
    out->det_residual = v.det_residual;
    out->trace_margin = v.trace_margin;
  });
}

amic_status amic_mallard_diagonalize(const double u[9], int first_axis,
                                     int second_axis, double v[9]) {
  return guarded([&] {
    from_mat(amic::mallard_diagonalize(amic::Stretch(to_mat(u)), first_axis,
                                       second_axis),
             v);
  });
}

amic_status amic_kappa_set_compute(const double u[9], amic_kappa_set** out) {
  return guarded([&] {
    auto* set = new amic_kappa_set{amic::kappa_set(amic::Stretch(to_mat(u)))};
    *out = set;
  });
}

int amic_kappa_set_size(const amic_kappa_set* set) {
  return set ? static_cast<int>(set->data.entries.size()) : 0;
}

amic_status amic_kappa_set_entry(const amic_kappa_set* set, int index,
                                 amic_kappa_entry* out) {
  return guarded([&] {
    if (!set || index < 0 || index >= static_cast<int>(set->data.entries.size()))
      amic::raise(amic::errc::invalid_argument, "kappa set index out of range");
    fill_kappa_entry(set->data.entries[index], out);
  });
}

void amic_kappa_set_free(amic_kappa_set* set) { delete set; }

amic_status amic_three_well_configs(const double u[9], amic_three_well_list** out) {
  return guarded([&] {
    *out = new amic_three_well_list{
        amic::three_well_configs(amic::Stretch(to_mat(u)))};
  });
}

int amic_three_well_count(const amic_three_well_list* list) {
  return list ? static_cast<int>(list->data.size()) : 0;
}

amic_status amic_three_well_get(const amic_three_well_list* list, int index,
                                amic_three_well_config* out) {
  return guarded([&] {
    if (!list || index < 0 || index >= static_cast<int>(list->data.size()))
      amic::raise(amic::errc::invalid_argument, "config index out of range");
    const amic::ThreeWellConfig& c = list->data[index];
    out->mu = c.mu;
    out->nu = c.nu;
    out->xi = c.xi;
    out->kappa = c.kappa;
    out->j = c.j;
    out->k = c.k;
    out->mu_role = c.mu_role;
    out->degenerate = c.degenerate ? 1 : 0;
    for (int w = 0; w < 3; ++w) from_mat(c.wells[w], out->wells[w]);
  });
}

void amic_three_well_free(amic_three_well_list* list) { delete list; }

amic_status amic_epsilon_dk(double kappa, double* out) {
  return guarded([&] { *out = amic::epsilon_dk(kappa); });
}

amic_status amic_delta_condition_lhs(double delta, double* out) {
  return guarded([&] { *out = amic::delta_condition_lhs(delta); });
}

amic_status amic_construct_interior_point(double delta, const double n[3],
                                          double kappa,
                                          amic_interior_certificate* out) {
  return guarded([&] {
    fill_certificate(amic::construct_interior_point(delta, to_vec(n), kappa), out);
  });
}

amic_status amic_cubic_austenite_check(const double u[9], amic_case_report** out) {
  return guarded([&] {
    amic::Stretch stretch(to_mat(u));
    amic::CubicAusteniteReport r = amic::cubic_austenite_check(stretch);
    *out = new amic_case_report{{std::cbrt(stretch.determinant()), r.winner,
                                 r.certificate, r.candidates}};
  });
}

amic_status amic_run_cualni_case(double alpha, double beta, double gamma,
                                 amic_case_report** out) {
  return guarded([&] {
    amic::CaseReport r = amic::run_cualni_case({alpha, beta, gamma});
    *out = new amic_case_report{
        {r.delta_cbrt, r.provenance, r.certificate, r.candidates}};
  });
}

amic_status amic_case_certificate(const amic_case_report* report,
                                  amic_interior_certificate* out) {
  return guarded([&] {
    if (!report) amic::raise(amic::errc::invalid_argument, "null report");
    fill_certificate(report->data.certificate, out);
  });
}

amic_status amic_case_winner(const amic_case_report* report, amic_kappa_entry* out) {
  return guarded([&] {
    if (!report) amic::raise(amic::errc::invalid_argument, "null report");
    fill_kappa_entry(report->data.winner, out);
  });
}

double amic_case_delta_cbrt(const amic_case_report* report) {
  return report ? report->data.delta_cbrt : 0.0;
}

int amic_case_candidate_count(const amic_case_report* report) {
  return report ? static_cast<int>(report->data.candidates.size()) : 0;
}

amic_status amic_case_candidate(const amic_case_report* report, int index,
                                amic_kappa_candidate* out) {
  return guarded([&] {
    if (!report || index < 0 ||
        index >= static_cast<int>(report->data.candidates.size()))
      amic::raise(amic::errc::invalid_argument, "candidate index out of range");
    const amic::KappaCandidate& c = report->data.candidates[index];
    fill_kappa_entry(c.entry, &out->entry);
    out->admissible = c.admissible ? 1 : 0;
    out->epsilon = c.epsilon;
    out->lhs = c.lhs;
    out->holds = c.holds ? 1 : 0;
  });
}

void amic_case_report_free(amic_case_report* report) { delete report; }

amic_status amic_cualni_stretch(double alpha, double beta, double gamma,
                                double u[9]) {
  return guarded([&] {
    from_mat(amic::cualni_stretch({alpha, beta, gamma}).matrix(), u);
  });
}

amic_status amic_volume_fraction_roots(double a0, double a1, double a2, double a3,
                                       double lambda_compound, double roots[2],
                                       int* count) {
  return guarded([&] {
    auto r = amic::volume_fraction_roots({a0, a1, a2, a3}, lambda_compound);
    *count = static_cast<int>(r.size());
    for (int i = 0; i < *count; ++i) roots[i] = r[i];
  });
}

amic_status amic_surface_create(const double normal[3], const double shear[3],
                                const char* profile_name, double profile_scale,
                                double epsilon, double radius, amic_surface** out) {
  return guarded([&] {
    amic::ProfileFunction profile = [&] {
      std::string name = profile_name ? profile_name : "";
      if (name == "gauss-bump") return amic::ProfileFunction::gauss_bump(profile_scale);
      if (name == "zero") return amic::ProfileFunction::zero();
      amic::raise(amic::errc::invalid_argument,
                  "unknown profile '" + name + "' (expected gauss-bump or zero)");
    }();
    auto surface = std::make_unique<amic::InterfaceSurface>(
        amic::build_surface(to_vec(normal), to_vec(shear), profile, epsilon, radius));
    *out = new amic_surface{std::move(surface)};
  });
}

void amic_surface_free(amic_surface* surface) { delete surface; }

amic_status amic_surface_deformation(const amic_surface* surface, const double x[3],
                                     double y[3], double grad[9]) {
  return guarded([&] {
    if (!surface) amic::raise(amic::errc::invalid_argument, "null surface");
    amic::DeformationValue d = amic::deformation_plus(*surface->data, to_vec(x));
    from_vec(d.value, y);
    from_mat(d.gradient, grad);
  });
}

amic_status amic_surface_mesh(const amic_surface* surface, int resolution,
                              amic_mesh** out) {
  return guarded([&] {
    if (!surface) amic::raise(amic::errc::invalid_argument, "null surface");
    *out = new amic_mesh{amic::mesh_interface(*surface->data, resolution)};
  });
}

void amic_mesh_free(amic_mesh* mesh) { delete mesh; }

int amic_mesh_vertex_count(const amic_mesh* mesh) {
  return mesh ? static_cast<int>(mesh->data.vertices.size()) : 0;
}

int amic_mesh_triangle_count(const amic_mesh* mesh) {
  return mesh ? static_cast<int>(mesh->data.triangles.size()) : 0;
}

amic_status amic_mesh_vertices(const amic_mesh* mesh, double* out) {
  return guarded([&] {
    if (!mesh) amic::raise(amic::errc::invalid_argument, "null mesh");
    for (std::size_t i = 0; i < mesh->data.vertices.size(); ++i)
      from_vec(mesh->data.vertices[i], out + 3 * i);
  });
}

amic_status amic_mesh_triangles(const amic_mesh* mesh, int* out) {
  return guarded([&] {
    if (!mesh) amic::raise(amic::errc::invalid_argument, "null mesh");
    for (std::size_t i = 0; i < mesh->data.triangles.size(); ++i)
      for (int k = 0; k < 3; ++k) out[3 * i + k] = mesh->data.triangles[i][k];
  });
}

amic_status amic_verify_compatibility(const amic_surface* surface,
                                      const amic_mesh* mesh,
                                      const amic_interior_certificate* ball,
                                      amic_compatibility_report* out) {
  return guarded([&] {
    if (!surface || !mesh) amic::raise(amic::errc::invalid_argument, "null handle");
    amic::HullTest test;
    if (ball) test = amic::make_ball_membership_test(ball->delta, ball->epsilon);
    amic::CompatibilityReport r =
        amic::verify_compatibility(*surface->data, mesh->data, test);
    out->max_jump_residual = r.max_jump_residual;
    out->det_deviation = r.det_deviation;
    out->ball_membership_margin = r.ball_membership_margin;
    out->path_continuity_residual = r.path_continuity_residual;
    out->witness_a = r.witness_a;
    out->witness_b = r.witness_b;
    out->witness_normal_gap = r.witness_normal_gap;
    out->hull_failures = r.hull_failures;
  });
}

amic_status amic_path_continuity(const amic_surface* surface, const amic_mesh* mesh,
                                 int trials, int steps, unsigned long long seed,
                                 double* out) {
  return guarded([&] {
    if (!surface || !mesh) amic::raise(amic::errc::invalid_argument, "null handle");
    *out = amic::path_continuity_check(*surface->data, mesh->data, trials, steps, seed);
  });
}

amic_status amic_chord_control(const amic_surface* surface, const amic_mesh* mesh,
                               int trials, int steps, unsigned long long seed,
                               double threshold, int* exceed_count,
                               double* max_defect) {
  return guarded([&] {
    if (!surface || !mesh) amic::raise(amic::errc::invalid_argument, "null handle");
    if (mesh->data.vertices.size() < 2)
      amic::raise(amic::errc::disconnected_mesh, "mesh has fewer than two vertices");
    amic::Rng rng(seed);
    const int nv = static_cast<int>(mesh->data.vertices.size());
    int exceed = 0;
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
      int i = rng.uniform_int(nv);
      int j = rng.uniform_int(nv);
      if (j == i) j = (j + 1) % nv;
      double defect = amic::chord_tangency_defect(
          *surface->data, mesh->data.vertices[i], mesh->data.vertices[j], steps);
      if (defect > threshold) ++exceed;
      worst = std::max(worst, defect);
    }
    *exceed_count = exceed;
    *max_defect = worst;
  });
}

amic_status amic_mesh_write_obj(const amic_mesh* mesh, const char* path) {
  return guarded([&] {
    if (!mesh || !path) amic::raise(amic::errc::invalid_argument, "null argument");
    std::ofstream out(path, std::ios::binary);
    if (!out) amic::raise(amic::errc::invalid_argument,
                          std::string("cannot open '") + path + "' for writing");
    amic::write_obj(mesh->data, out);
    if (!out.good())
      amic::raise(amic::errc::invalid_argument, "write failed");
  });
}

amic_status amic_surface_write_residuals_csv(const amic_surface* surface,
                                             const amic_mesh* mesh,
                                             const char* path) {
  return guarded([&] {
    if (!surface || !mesh || !path)
      amic::raise(amic::errc::invalid_argument, "null argument");
    std::ofstream out(path, std::ios::binary);
    if (!out) amic::raise(amic::errc::invalid_argument,
                          std::string("cannot open '") + path + "' for writing");
    amic::write_residuals_csv(*surface->data, mesh->data, out);
    if (!out.good())
      amic::raise(amic::errc::invalid_argument, "write failed");
  });
}

}  // extern "C"

/* C interface to the austenite-martensite interface compatibility library.
 *
 * Matrices are row-major double[9]; vectors are double[3]. Every function
 * returns an amic_status; outputs are written through pointers only on
 * AMIC_OK. Variable-sized results are returned through opaque handles with
 * explicit free functions. amic_last_error_message() describes the most
 * recent failure on the calling thread.
 */
#ifndef AMIC_H
#define AMIC_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum amic_status {
  AMIC_OK = 0,
  AMIC_ERR_NON_FINITE,
  AMIC_ERR_NON_SYMMETRIC,
  AMIC_ERR_SINGULAR_INPUT,
  AMIC_ERR_ZERO_AXIS,
  AMIC_ERR_DETERMINANT_MISMATCH,
  AMIC_ERR_NO_TWIN,
  AMIC_ERR_KAPPA_OUT_OF_RANGE,
  AMIC_ERR_KAPPA_DEGENERATE,
  AMIC_ERR_NON_POSITIVE_DELTA,
  AMIC_ERR_NO_ADMISSIBLE_KAPPA,
  AMIC_ERR_ZERO_SHEAR,
  AMIC_ERR_BOUND_VIOLATED,
  AMIC_ERR_PLANAR_PROFILE,
  AMIC_ERR_OUT_OF_DOMAIN,
  AMIC_ERR_MESH_SURFACE_MISMATCH,
  AMIC_ERR_DISCONNECTED_MESH,
  AMIC_ERR_DEGENERATE_DENOMINATOR,
  AMIC_ERR_INVALID_ARGUMENT,
  AMIC_ERR_NUMERIC_FAILURE,
  AMIC_ERR_IO,
  AMIC_ERR_INTERNAL
} amic_status;

const char* amic_status_name(int status);
const char* amic_last_error_message(void);

/* ---- 3x3 utilities ---- */

/* values sorted ascending; vectors[3*i..3*i+2] is the i-th unit eigenvector */
amic_status amic_sym_eigen(const double a[9], double values[3], double vectors[9]);
amic_status amic_polar_rotation(const double f[9], double r[9]);
amic_status amic_cofactor(const double a[9], double c[9]);

/* ---- symmetry ---- */

amic_status amic_rotation_about_axis(double angle, const double axis[3], double r[9]);
/* out holds 24 row-major matrices, out[9*i..9*i+8] */
amic_status amic_cubic_group(double out[216]);
/* writes up to cap variants (9 doubles each); *count is the true number */
amic_status amic_variants(const double u[9], double* out, int cap, int* count);

/* ---- twinning ---- */

typedef struct {
  double rotation[9];
  double shear[3];
  double normal[3];
  double residual;
} amic_rank_one_connection;

enum { AMIC_TWO_SOLUTIONS = 0, AMIC_NO_SOLUTION = 1, AMIC_DEGENERATE_COINCIDENCE = 2 };

amic_status amic_solve_rank_one(const double a[9], const double b[9],
                                double middle_tol, int* verdict,
                                amic_rank_one_connection out[2], int* count);
amic_status amic_mallard_twin(const double u[9], const double axis[3],
                              amic_rank_one_connection* out);
amic_status amic_mallard_average(const double u[9], const double axis[3],
                                 double f[9]);

typedef struct {
  double rotation[9];
  double shape[3];
  double normal[3];
  double residual;
} amic_habit_solution;

enum { AMIC_HABIT_TWO_SOLUTIONS = 0, AMIC_HABIT_NO_SOLUTION = 1, AMIC_HABIT_IDENTITY = 2 };

amic_status amic_habit_plane(const double m[9], double middle_tol, int* verdict,
                             amic_habit_solution out[2], int* count);

/* ---- quasiconvex hull tests ---- */

typedef struct {
  int member;
  double block_structure_residual;
  double det_residual;
  double trace_margin;
} amic_hull_verdict;

amic_status amic_two_well_membership(const double f[9], double eta1, double eta2,
                                     double eta3, amic_hull_verdict* out);

/* axes are 0-based; returns the diagonal well sqrt(D_1/2) */
amic_status amic_mallard_diagonalize(const double u[9], int first_axis,
                                     int second_axis, double v[9]);

typedef struct {
  double kappa;
  int j, k;       /* 0-based provenance pair */
  int formula;    /* 0, 1 or 2; see kappa_set documentation */
  int degenerate; /* kappa == 1 within tolerance */
} amic_kappa_entry;

typedef struct amic_kappa_set amic_kappa_set;
amic_status amic_kappa_set_compute(const double u[9], amic_kappa_set** out);
int amic_kappa_set_size(const amic_kappa_set* set);
amic_status amic_kappa_set_entry(const amic_kappa_set* set, int index,
                                 amic_kappa_entry* out);
void amic_kappa_set_free(amic_kappa_set* set);

typedef struct {
  double mu, nu, xi, kappa;
  int j, k, mu_role, degenerate;
  double wells[3][9];
} amic_three_well_config;

typedef struct amic_three_well_list amic_three_well_list;
amic_status amic_three_well_configs(const double u[9], amic_three_well_list** out);
int amic_three_well_count(const amic_three_well_list* list);
amic_status amic_three_well_get(const amic_three_well_list* list, int index,
                                amic_three_well_config* out);
void amic_three_well_free(amic_three_well_list* list);

/* ---- interior point ---- */

amic_status amic_epsilon_dk(double kappa, double* out);
amic_status amic_delta_condition_lhs(double delta, double* out);

typedef struct {
  double delta, kappa, epsilon, lhs;
  int holds;
  double point[9];
  double shear[3];
  double normal[3];
  double ball_radius;
} amic_interior_certificate;

amic_status amic_construct_interior_point(double delta, const double n[3],
                                          double kappa,
                                          amic_interior_certificate* out);

typedef struct {
  amic_kappa_entry entry;
  int admissible;
  double epsilon;
  double lhs;
  int holds;
} amic_kappa_candidate;

typedef struct amic_case_report amic_case_report;
amic_status amic_cubic_austenite_check(const double u[9], amic_case_report** out);
amic_status amic_run_cualni_case(double alpha, double beta, double gamma,
                                 amic_case_report** out);
amic_status amic_case_certificate(const amic_case_report* report,
                                  amic_interior_certificate* out);
amic_status amic_case_winner(const amic_case_report* report, amic_kappa_entry* out);
double amic_case_delta_cbrt(const amic_case_report* report);
int amic_case_candidate_count(const amic_case_report* report);
amic_status amic_case_candidate(const amic_case_report* report, int index,
                                amic_kappa_candidate* out);
void amic_case_report_free(amic_case_report* report);

/* ---- case study ---- */

amic_status amic_cualni_stretch(double alpha, double beta, double gamma, double u[9]);
/* roots in [0,1]; *count is 0 or 2 */
amic_status amic_volume_fraction_roots(double a0, double a1, double a2, double a3,
                                       double lambda_compound, double roots[2],
                                       int* count);

/* ---- non-planar interfaces ---- */

typedef struct amic_surface amic_surface;
typedef struct amic_mesh amic_mesh;

/* profile_name: "gauss-bump" (scale * t^2 exp(-t^2)) or "zero" */
amic_status amic_surface_create(const double normal[3], const double shear[3],
                                const char* profile_name, double profile_scale,
                                double epsilon, double radius, amic_surface** out);
void amic_surface_free(amic_surface* surface);

amic_status amic_surface_deformation(const amic_surface* surface, const double x[3],
                                     double y[3], double grad[9]);
amic_status amic_surface_mesh(const amic_surface* surface, int resolution,
                              amic_mesh** out);
void amic_mesh_free(amic_mesh* mesh);
int amic_mesh_vertex_count(const amic_mesh* mesh);
int amic_mesh_triangle_count(const amic_mesh* mesh);
amic_status amic_mesh_vertices(const amic_mesh* mesh, double* out /* 3 per vertex */);
amic_status amic_mesh_triangles(const amic_mesh* mesh, int* out /* 3 per triangle */);

typedef struct {
  double max_jump_residual;
  double det_deviation;
  double ball_membership_margin;
  double path_continuity_residual;
  int witness_a, witness_b;
  double witness_normal_gap;
  long hull_failures;
} amic_compatibility_report;

/* ball: optional certificate whose (delta, epsilon) define the membership
 * predicate applied to every gradient; pass NULL to skip */
amic_status amic_verify_compatibility(const amic_surface* surface,
                                      const amic_mesh* mesh,
                                      const amic_interior_certificate* ball,
                                      amic_compatibility_report* out);
amic_status amic_path_continuity(const amic_surface* surface, const amic_mesh* mesh,
                                 int trials, int steps, unsigned long long seed,
                                 double* out);
/* counts chords whose accumulated tangency defect exceeds threshold */
amic_status amic_chord_control(const amic_surface* surface, const amic_mesh* mesh,
                               int trials, int steps, unsigned long long seed,
                               double threshold, int* exceed_count,
                               double* max_defect);
amic_status amic_mesh_write_obj(const amic_mesh* mesh, const char* path);
amic_status amic_surface_write_residuals_csv(const amic_surface* surface,
                                             const amic_mesh* mesh,
                                             const char* path);

#ifdef __cplusplus
}
#endif

#endif /* AMIC_H */

// Command-line surface over the shared library: reads JSON parameter files,
// emits JSON reports on stdout and OBJ/CSV artifacts on disk.
//
// Exit codes: 0 for a positive mathematical outcome, 2 for a well-formed
// negative verdict (no solution, no twin, non-member, condition fails),
// 1 for input or usage errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "amic.h"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNegative = 2;

struct Options {
  std::string params;
  std::string out = ".";
  double tol = -1.0;  // < 0 means "subcommand default"
  int resolution = 100;
  unsigned long long seed = 1;
};

struct CliError {
  std::string message;
};

[[noreturn]] void fail(const std::string& message) { throw CliError{message}; }

void require_status(amic_status status) {
  if (status != AMIC_OK)
    fail(std::string(amic_status_name(status)) + ": " + amic_last_error_message());
}

json load_params(const Options& opt) {
  if (opt.params.empty()) fail("missing --params <file>");
  std::ifstream in(opt.params);
  if (!in) fail("cannot open parameter file '" + opt.params + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    fail("malformed JSON in '" + opt.params + "': " + e.what());
  }
  return j;
}

void parse_mat(const json& j, const char* key, double out[9]) {
  if (!j.contains(key)) fail(std::string("missing matrix '") + key + "'");
  const json& m = j.at(key);
  if (!m.is_array() || m.size() != 3) fail(std::string(key) + " must be 3 rows");
  for (int i = 0; i < 3; ++i) {
    const json& row = m.at(i);
    if (!row.is_array() || row.size() != 3)
      fail(std::string(key) + " rows must hold 3 numbers");
    for (int c = 0; c < 3; ++c) {
      if (!row.at(c).is_number()) fail(std::string(key) + " entries must be numbers");
      out[3 * i + c] = row.at(c).get<double>();
    }
  }
}

void parse_vec(const json& j, const char* key, double out[3]) {
  if (!j.contains(key)) fail(std::string("missing vector '") + key + "'");
  const json& v = j.at(key);
  if (!v.is_array() || v.size() != 3) fail(std::string(key) + " must hold 3 numbers");
  for (int i = 0; i < 3; ++i) {
    if (!v.at(i).is_number()) fail(std::string(key) + " entries must be numbers");
    out[i] = v.at(i).get<double>();
  }
}

json mat_json(const double m[9]) {
  json rows = json::array();
  for (int i = 0; i < 3; ++i)
    rows.push_back(json::array({m[3 * i], m[3 * i + 1], m[3 * i + 2]}));
  return rows;
}

json vec_json(const double v[3]) { return json::array({v[0], v[1], v[2]}); }

json connection_json(const amic_rank_one_connection& c) {
  return json{{"rotation", mat_json(c.rotation)},
              {"shear", vec_json(c.shear)},
              {"normal", vec_json(c.normal)},
              {"residual", c.residual}};
}

json kappa_entry_json(const amic_kappa_entry& e) {
  // axes reported 1-based to match the e1/e2/e3 naming in the docs
  return json{{"kappa", e.kappa},
              {"j", e.j + 1},
              {"k", e.k + 1},
              {"formula", e.formula + 1},
              {"degenerate", e.degenerate != 0}};
}

json certificate_json(const amic_interior_certificate& c) {
  // the construction proves the point lies in the hull's relative interior
  // but says nothing about the laminate realizing it
  return json{{"delta", c.delta},
              {"kappa", c.kappa},
              {"epsilon", c.epsilon},
              {"lhs", c.lhs},
              {"holds", c.holds != 0},
              {"point", mat_json(c.point)},
              {"shear", vec_json(c.shear)},
              {"normal", vec_json(c.normal)},
              {"ball_radius", c.ball_radius},
              {"underlying_microstructure", "unknown"}};
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

// ---- subcommands ----

int cmd_twin(const Options& opt) {
  json p = load_params(opt);
  double middle_tol = opt.tol > 0.0 ? opt.tol : 1e-8;

  if (p.contains("A") && p.contains("B")) {
    double a[9], b[9];
    parse_mat(p, "A", a);
    parse_mat(p, "B", b);
    int verdict = -1, count = 0;
    amic_rank_one_connection out[2];
    require_status(amic_solve_rank_one(a, b, middle_tol, &verdict, out, &count));

    const char* names[] = {"two-solutions", "no-solution", "degenerate-coincidence"};
    json report{{"mode", "pair"},
                {"verdict", names[verdict]},
                {"middle_tolerance", middle_tol},
                {"connections", json::array()}};
    for (int i = 0; i < count; ++i)
      report["connections"].push_back(connection_json(out[i]));
    emit(report);
    return verdict == AMIC_TWO_SOLUTIONS ? kExitOk : kExitNegative;
  }

  if (p.contains("U") && p.contains("axis")) {
    double u[9], axis[3];
    parse_mat(p, "U", u);
    parse_vec(p, "axis", axis);
    amic_rank_one_connection c;
    amic_status status = amic_mallard_twin(u, axis, &c);
    if (status == AMIC_ERR_NO_TWIN) {
      emit(json{{"mode", "mallard"},
                {"verdict", "no-twin"},
                {"detail", amic_last_error_message()}});
      return kExitNegative;
    }
    require_status(status);
    emit(json{{"mode", "mallard"},
              {"verdict", "twin"},
              {"connection", connection_json(c)}});
    return kExitOk;
  }

  fail("parameters must provide either A and B, or U and axis");
}

int cmd_habit(const Options& opt) {
  json p = load_params(opt);
  double middle_tol = opt.tol > 0.0 ? opt.tol : 1e-8;
  double m[9];
  parse_mat(p, "M", m);

  int verdict = -1, count = 0;
  amic_habit_solution out[2];
  require_status(amic_habit_plane(m, middle_tol, &verdict, out, &count));

  const char* names[] = {"two-solutions", "no-solution", "identity-input"};
  json report{{"verdict", names[verdict]},
              {"middle_tolerance", middle_tol},
              {"solutions", json::array()}};
  for (int i = 0; i < count; ++i) {
    report["solutions"].push_back(json{{"rotation", mat_json(out[i].rotation)},
                                       {"shape", vec_json(out[i].shape)},
                                       {"normal", vec_json(out[i].normal)},
                                       {"residual", out[i].residual}});
  }
  emit(report);
  return verdict == AMIC_HABIT_TWO_SOLUTIONS ? kExitOk : kExitNegative;
}

int cmd_hull(const Options& opt) {
  json p = load_params(opt);
  double f[9], eta[3];
  parse_mat(p, "F", f);
  parse_vec(p, "eta", eta);

  amic_hull_verdict v;
  require_status(amic_two_well_membership(f, eta[0], eta[1], eta[2], &v));
  emit(json{{"member", v.member != 0},
            {"block_structure_residual", v.block_structure_residual},
            {"det_residual", v.det_residual},
            {"trace_margin", v.trace_margin},
            {"eta", vec_json(eta)}});
  return v.member ? kExitOk : kExitNegative;
}

int cmd_mallard(const Options& opt) {
  json p = load_params(opt);
  double u[9];
  parse_mat(p, "U", u);

  int axes[2] = {1, 2};  // 1-based default chain e1 -> e2
  if (p.contains("axes")) {
    const json& a = p.at("axes");
    if (!a.is_array() || a.size() != 2) fail("axes must hold two indices in 1..3");
    axes[0] = a.at(0).get<int>();
    axes[1] = a.at(1).get<int>();
  }
  if (axes[0] < 1 || axes[0] > 3 || axes[1] < 1 || axes[1] > 3 || axes[0] == axes[1])
    fail("axes must be distinct indices in 1..3");

  json report{{"axes", json::array({axes[0], axes[1]})}};

  // kappa data is independent of the chain and always reported
  amic_kappa_set* set = nullptr;
  require_status(amic_kappa_set_compute(u, &set));
  json kappas = json::array();
  for (int i = 0; i < amic_kappa_set_size(set); ++i) {
    amic_kappa_entry e;
    amic_kappa_set_entry(set, i, &e);
    kappas.push_back(kappa_entry_json(e));
  }
  amic_kappa_set_free(set);
  report["kappa_set"] = json{{"entries", kappas}, {"dedup_tolerance", 1e-10}};

  amic_three_well_list* list = nullptr;
  require_status(amic_three_well_configs(u, &list));
  json configs = json::array();
  for (int i = 0; i < amic_three_well_count(list); ++i) {
    amic_three_well_config c;
    amic_three_well_get(list, i, &c);
    configs.push_back(json{{"mu", c.mu},
                           {"nu", c.nu},
                           {"xi", c.xi},
                           {"kappa", c.kappa},
                           {"j", c.j + 1},
                           {"k", c.k + 1},
                           {"mu_role", c.mu_role + 1},
                           {"degenerate", c.degenerate != 0},
                           {"wells", json::array({mat_json(c.wells[0]),
                                                  mat_json(c.wells[1]),
                                                  mat_json(c.wells[2])})}});
  }
  amic_three_well_free(list);
  report["three_well_configs"] = configs;

  double axis[3] = {0, 0, 0};
  axis[axes[0] - 1] = 1.0;
  amic_rank_one_connection twin;
  amic_status status = amic_mallard_twin(u, axis, &twin);
  if (status == AMIC_ERR_NO_TWIN) {
    report["chain"] = json{{"status", "no-twin"}, {"detail", amic_last_error_message()}};
    emit(report);
    return kExitNegative;
  }
  require_status(status);

  double average[9], diagonal[9];
  require_status(amic_mallard_average(u, axis, average));
  amic_status diag_status =
      amic_mallard_diagonalize(u, axes[0] - 1, axes[1] - 1, diagonal);
  json chain{{"status", "ok"},
             {"twin", connection_json(twin)},
             {"average", mat_json(average)}};
  if (diag_status == AMIC_OK) {
    chain["diagonal_well"] = mat_json(diagonal);
  } else {
    chain["status"] = "no-twin";
    chain["detail"] = amic_last_error_message();
  }
  report["chain"] = chain;
  emit(report);
  return chain["status"] == "ok" ? kExitOk : kExitNegative;
}

int cmd_interior(const Options& opt) {
  json p = load_params(opt);

  if (p.contains("U")) {
    double u[9];
    parse_mat(p, "U", u);
    amic_case_report* report = nullptr;
    require_status(amic_cubic_austenite_check(u, &report));
    amic_interior_certificate cert;
    amic_case_certificate(report, &cert);
    amic_kappa_entry winner;
    amic_case_winner(report, &winner);

    json candidates = json::array();
    for (int i = 0; i < amic_case_candidate_count(report); ++i) {
      amic_kappa_candidate c;
      amic_case_candidate(report, i, &c);
      json e = kappa_entry_json(c.entry);
      e["admissible"] = c.admissible != 0;
      if (c.admissible) {
        e["epsilon"] = c.epsilon;
        e["lhs"] = c.lhs;
        e["holds"] = c.holds != 0;
      }
      candidates.push_back(e);
    }
    json out{{"mode", "cubic-austenite"},
             {"delta_cbrt", amic_case_delta_cbrt(report)},
             {"winner", kappa_entry_json(winner)},
             {"certificate", certificate_json(cert)},
             {"candidates", candidates}};
    amic_case_report_free(report);
    emit(out);
    return cert.holds ? kExitOk : kExitNegative;
  }

  if (p.contains("delta") && p.contains("kappa") && p.contains("normal")) {
    double normal[3];
    parse_vec(p, "normal", normal);
    amic_interior_certificate cert;
    require_status(amic_construct_interior_point(p.at("delta").get<double>(), normal,
                                                 p.at("kappa").get<double>(), &cert));
    emit(json{{"mode", "manual"}, {"certificate", certificate_json(cert)}});
    return cert.holds ? kExitOk : kExitNegative;
  }

  fail("parameters must provide either U, or delta/kappa/normal");
}

int cmd_surface(const Options& opt) {
  json p = load_params(opt);
  double normal[3], shear[3];
  parse_vec(p, "normal", normal);
  parse_vec(p, "shear", shear);

  std::string profile_name = "gauss-bump";
  double scale = 1.0;
  if (p.contains("profile")) {
    const json& prof = p.at("profile");
    profile_name = prof.value("type", "gauss-bump");
    scale = prof.value("scale", 1.0);
  }
  double epsilon = p.value("epsilon", 1.0);
  double radius = p.value("radius", 2.0);
  int trials = p.value("trials", 100);
  int steps = p.value("steps", 1000);
  double jump_tol = opt.tol > 0.0 ? opt.tol : 1e-10;

  amic_surface* surface = nullptr;
  amic_status status = amic_surface_create(normal, shear, profile_name.c_str(),
                                           scale, epsilon, radius, &surface);
  if (status == AMIC_ERR_BOUND_VIOLATED || status == AMIC_ERR_PLANAR_PROFILE) {
    std::cerr << amic_status_name(status) << ": " << amic_last_error_message()
              << '\n';
    emit(json{{"verdict", amic_status_name(status)},
              {"detail", amic_last_error_message()}});
    return kExitNegative;
  }
  require_status(status);

  amic_mesh* mesh = nullptr;
  status = amic_surface_mesh(surface, opt.resolution, &mesh);
  if (status != AMIC_OK) {
    amic_surface_free(surface);
    require_status(status);
  }

  amic_compatibility_report rep;
  require_status(amic_verify_compatibility(surface, mesh, nullptr, &rep));
  double path_residual = 0.0;
  require_status(
      amic_path_continuity(surface, mesh, trials, steps, opt.seed, &path_residual));

  std::filesystem::create_directories(opt.out);
  std::filesystem::path dir(opt.out);
  std::string obj_path = (dir / "mesh.obj").string();
  std::string csv_path = (dir / "residuals.csv").string();
  std::string report_path = (dir / "report.json").string();
  require_status(amic_mesh_write_obj(mesh, obj_path.c_str()));
  require_status(amic_surface_write_residuals_csv(surface, mesh, csv_path.c_str()));

  json report{
      {"surface",
       json{{"normal", vec_json(normal)},
            {"shear", vec_json(shear)},
            {"profile", json{{"type", profile_name}, {"scale", scale}}},
            {"epsilon", epsilon},
            {"radius", radius},
            {"resolution", opt.resolution},
            {"seed", opt.seed}}},
      {"mesh",
       json{{"vertices", amic_mesh_vertex_count(mesh)},
            {"triangles", amic_mesh_triangle_count(mesh)},
            {"obj", "mesh.obj"},
            {"residuals_csv", "residuals.csv"}}},
      {"compatibility",
       json{{"max_jump_residual", rep.max_jump_residual},
            {"det_deviation", rep.det_deviation},
            {"ball_membership_margin", rep.ball_membership_margin},
            {"path_continuity_residual", path_residual},
            {"path_trials", trials},
            {"path_steps", steps},
            {"witness_vertices", json::array({rep.witness_a, rep.witness_b})},
            {"witness_normal_gap", rep.witness_normal_gap},
            {"nonplanar_on_sampled_mesh", rep.witness_a >= 0}}},
      {"jump_tolerance", jump_tol}};

  {
    std::ofstream out_file(report_path, std::ios::binary);
    if (!out_file) fail("cannot write '" + report_path + "'");
    out_file << report.dump(2) << '\n';
  }
  emit(report);

  bool ok = rep.max_jump_residual <= jump_tol && rep.ball_membership_margin >= 0.0;
  amic_mesh_free(mesh);
  amic_surface_free(surface);
  return ok ? kExitOk : kExitNegative;
}

int cmd_cualni(const Options& opt) {
  double alpha = 1.06372, beta = 0.91542, gamma = 1.02368;
  if (!opt.params.empty()) {
    json p = load_params(opt);
    alpha = p.value("alpha", alpha);
    beta = p.value("beta", beta);
    gamma = p.value("gamma", gamma);
  }

  amic_case_report* report = nullptr;
  require_status(amic_run_cualni_case(alpha, beta, gamma, &report));
  amic_interior_certificate cert;
  amic_case_certificate(report, &cert);
  amic_kappa_entry winner;
  amic_case_winner(report, &winner);

  json admissible = json::array();
  for (int i = 0; i < amic_case_candidate_count(report); ++i) {
    amic_kappa_candidate c;
    amic_case_candidate(report, i, &c);
    if (!c.admissible) continue;
    json e = kappa_entry_json(c.entry);
    e["epsilon"] = c.epsilon;
    e["lhs"] = c.lhs;
    e["holds"] = c.holds != 0;
    admissible.push_back(e);
  }

  json out{{"delta_cbrt", amic_case_delta_cbrt(report)},
           {"kappa_star", winner.kappa},
           {"kappa_provenance", kappa_entry_json(winner)},
           {"epsilon", cert.epsilon},
           {"lhs", cert.lhs},
           {"holds", cert.holds != 0},
           {"all_admissible_kappas", admissible}};
  amic_case_report_free(report);
  emit(out);
  return cert.holds ? kExitOk : kExitNegative;
}

int cmd_volfrac(const Options& opt) {
  json p = load_params(opt);
  double a[4];
  if (p.contains("coefficients")) {
    const json& c = p.at("coefficients");
    if (!c.is_array() || c.size() != 4) fail("coefficients must hold a0..a3");
    for (int i = 0; i < 4; ++i) a[i] = c.at(i).get<double>();
  } else {
    const char* keys[] = {"a0", "a1", "a2", "a3"};
    for (int i = 0; i < 4; ++i) {
      if (!p.contains(keys[i])) fail("missing coefficient a0..a3");
      a[i] = p.at(keys[i]).get<double>();
    }
  }
  if (!p.contains("Lambda")) fail("missing Lambda");
  double lambda_compound = p.at("Lambda").get<double>();

  double roots[2];
  int count = 0;
  require_status(amic_volume_fraction_roots(a[0], a[1], a[2], a[3], lambda_compound,
                                            roots, &count));
  json out{{"Lambda", lambda_compound},
           {"coefficients", json::array({a[0], a[1], a[2], a[3]})},
           {"roots", json::array()}};
  for (int i = 0; i < count; ++i) out["roots"].push_back(roots[i]);
  emit(out);
  return count == 2 ? kExitOk : kExitNegative;
}

void add_common(CLI::App* cmd, Options& opt, bool with_mesh_flags = false) {
  cmd->add_option("--params", opt.params, "JSON parameter file");
  cmd->add_option("--out", opt.out, "output directory for artifacts");
  cmd->add_option("--tol", opt.tol, "tolerance override")
      ->check(CLI::PositiveNumber);
  if (with_mesh_flags) {
    cmd->add_option("--resolution", opt.resolution, "mesh resolution (>= 2)")
        ->check(CLI::Range(2, 100000));
    cmd->add_option("--seed", opt.seed, "seed for randomized sweeps");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"austenite-martensite interface compatibility toolkit"};
  app.require_subcommand(1);

  Options opt;
  struct Entry {
    const char* name;
    const char* help;
    int (*run)(const Options&);
    bool mesh_flags;
  };
  const Entry entries[] = {
      {"twin", "solve the rank-one connection equation", cmd_twin, false},
      {"habit", "solve the habit-plane equation", cmd_habit, false},
      {"hull", "two-well quasiconvex hull membership", cmd_hull, false},
      {"mallard", "twin-averaging chain, embedded configs and kappa set",
       cmd_mallard, false},
      {"interior", "interior-point certificate", cmd_interior, false},
      {"surface", "build, mesh and certify a non-planar interface", cmd_surface,
       true},
      {"cualni", "CuAlNi cubic-to-orthorhombic case study", cmd_cualni, false},
      {"volfrac", "volume-fraction roots from user coefficients", cmd_volfrac,
       false},
  };

  for (const Entry& e : entries) {
    CLI::App* cmd = app.add_subcommand(e.name, e.help);
    add_common(cmd, opt, e.mesh_flags);
    cmd->callback([&e, &opt]() {
      int code = e.run(opt);
      throw CLI::RuntimeError(code);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::RuntimeError& e) {
    return e.get_exit_code();  // subcommand result channeled through CLI11
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitOk;
}

#pragma once

#include <stdexcept>
#include <string>

namespace amic {

enum class errc {
  ok = 0,
  non_finite,
  non_symmetric,
  singular_input,
  zero_axis,
  determinant_mismatch,
  no_twin,
  kappa_out_of_range,
  kappa_degenerate,
  non_positive_delta,
  no_admissible_kappa,
  zero_shear,
  bound_violated,
  planar_profile,
  out_of_domain,
  mesh_surface_mismatch,
  disconnected_mesh,
  degenerate_denominator,
  invalid_argument,
  numeric_failure,
};

inline const char* errc_name(errc c) noexcept {
  switch (c) {
    case errc::ok: return "ok";
    case errc::non_finite: return "non-finite";
    case errc::non_symmetric: return "non-symmetric";
    case errc::singular_input: return "singular-input";
    case errc::zero_axis: return "zero-axis";
    case errc::determinant_mismatch: return "determinant-mismatch";
    case errc::no_twin: return "no-twin";
    case errc::kappa_out_of_range: return "kappa-out-of-range";
    case errc::kappa_degenerate: return "kappa-degenerate";
    case errc::non_positive_delta: return "non-positive-delta";
    case errc::no_admissible_kappa: return "no-admissible-kappa";
    case errc::zero_shear: return "zero-shear";
    case errc::bound_violated: return "bound-violated";
    case errc::planar_profile: return "planar-profile";
    case errc::out_of_domain: return "out-of-domain";
    case errc::mesh_surface_mismatch: return "mesh-surface-mismatch";
    case errc::disconnected_mesh: return "disconnected-mesh";
    case errc::degenerate_denominator: return "degenerate-denominator";
    case errc::invalid_argument: return "invalid-argument";
    case errc::numeric_failure: return "numeric-failure";
  }
  return "unknown";
}

/// Exception carrying a machine-readable error code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& message) {
  throw Error(code, std::string(errc_name(code)) + ": " + message);
}

}  // namespace amic

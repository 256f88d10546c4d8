#pragma once

#include <iosfwd>

#include "amic/surface.hpp"

namespace amic {

/// Wavefront OBJ: `v x y z` lines followed by `f i j k` (1-based indices).
/// Numbers use shortest round-trip formatting.
void write_obj(const SurfaceMesh& mesh, std::ostream& out);

/// RFC-4180 CSV of per-vertex residuals with header
/// x,y,z,jump_residual,det_deviation,ball_margin.
void write_residuals_csv(const InterfaceSurface& surface, const SurfaceMesh& mesh,
                         std::ostream& out);

/// Shortest decimal representation that round-trips to the same double.
std::string format_double(double value);

}  // namespace amic

#include "amic/surface_io.hpp"

#include <charconv>
#include <ostream>

namespace amic {

std::string format_double(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

void write_obj(const SurfaceMesh& mesh, std::ostream& out) {
  for (const Vec3& v : mesh.vertices) {
    out << "v " << format_double(v[0]) << ' ' << format_double(v[1]) << ' '
        << format_double(v[2]) << '\n';
  }
  for (const auto& t : mesh.triangles) {
    out << "f " << (t[0] + 1) << ' ' << (t[1] + 1) << ' ' << (t[2] + 1) << '\n';
  }
}

void write_residuals_csv(const InterfaceSurface& surface, const SurfaceMesh& mesh,
                         std::ostream& out) {
  const Vec3 a = surface.shear();
  const double det_target = 1.0 + dot(a, surface.normal());
  const double ball = surface.epsilon() / norm(a);

  out << "x,y,z,jump_residual,det_deviation,ball_margin\r\n";
  for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
    const Vec3& x = mesh.vertices[i];
    Vec3 g = surface.implicit_gradient(x);
    Mat3 grad = Mat3::identity() + outer(a, g);
    double jump = frobenius_distance(
        grad, Mat3::identity() + outer(mesh.shears[i], mesh.normals[i]));
    double det_dev = std::abs(det(grad) - det_target);
    double margin = ball - distance(g, surface.normal());
    out << format_double(x[0]) << ',' << format_double(x[1]) << ','
        << format_double(x[2]) << ',' << format_double(jump) << ','
        << format_double(det_dev) << ',' << format_double(margin) << "\r\n";
  }
}

}  // namespace amic

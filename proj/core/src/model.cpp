#include "diraccs/model.hpp"

#include <cmath>

namespace diraccs {

ModelParams::ModelParams(double omega_b, double zeta, double energy_scale)
    : omega_b_(omega_b), zeta_(zeta), energy_scale_(energy_scale) {
  if (!(omega_b > 0.0) || !std::isfinite(omega_b)) throw DomainError("omega_b must be positive");
  if (!(zeta > 0.0) || !std::isfinite(zeta)) throw DomainError("zeta must be positive");
  if (!std::isfinite(energy_scale)) throw DomainError("energy_scale must be finite");
}

EllipticPoint to_elliptic(const ModelParams& p, PlanePoint pt) {
  const double sz = std::sqrt(p.zeta());
  const double u = pt.x / sz;  // rho cos(theta)
  const double v = pt.y * sz;  // rho sin(theta)
  EllipticPoint e;
  e.rho = std::hypot(u, v);
  double th = std::atan2(v, u);
  if (th < 0.0) th += 2.0 * pi;
  if (th >= 2.0 * pi) th = 0.0;
  e.theta = th;
  const double half_root = 0.5 * std::sqrt(p.omega_b());
  e.xi = half_root * e.rho;
  e.z = cplx(half_root * u, half_root * v);
  return e;
}

PlanePoint from_elliptic(const ModelParams& p, double rho, double theta) {
  const double sz = std::sqrt(p.zeta());
  return {sz * rho * std::cos(theta), rho * std::sin(theta) / sz};
}

PlanePoint from_z(const ModelParams& p, cplx z) {
  const double scale = 2.0 / std::sqrt(p.omega_b());
  const double sz = std::sqrt(p.zeta());
  return {scale * sz * z.real(), scale * z.imag() / sz};
}

double energy_level(const ModelParams& p, int n, Band band) {
  if (n < 0) throw DomainError("energy_level: n must be nonnegative");
  const double e = std::sqrt(n * p.omega_b()) * p.energy_scale();
  return band == Band::conduction ? e : -e;
}

ClassicalEllipse classical_ellipse(const ModelParams& p, cplx alpha, cplx beta) {
  const double sz = std::sqrt(p.zeta());
  const double scale = 2.0 / std::sqrt(p.omega_b());
  const double phi = std::arg(beta);
  const double b = std::abs(beta);
  const double a = std::abs(alpha);
  ClassicalEllipse e;
  e.center = {scale * sz * b * std::cos(phi), scale * b * std::sin(phi) / sz};
  e.semi_axis_x = scale * sz * a;
  e.semi_axis_y = scale * a / sz;
  const double z = p.zeta();
  if (z < 1.0)
    e.eccentricity = std::sqrt(1.0 - z * z);
  else if (z > 1.0)
    e.eccentricity = std::sqrt(1.0 - 1.0 / (z * z));
  return e;
}

PlanePoint ClassicalEllipse::point_at(double t) const {
  return {center.x + semi_axis_x * std::cos(t), center.y + semi_axis_y * std::sin(t)};
}

double ClassicalEllipse::residual(PlanePoint pt) const {
  const double dx = (pt.x - center.x) / semi_axis_x;
  const double dy = (pt.y - center.y) / semi_axis_y;
  return dx * dx + dy * dy - 1.0;
}

}  // namespace diraccs

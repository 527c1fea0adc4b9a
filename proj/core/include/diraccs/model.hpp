#pragma once

#include "diraccs/common.hpp"

namespace diraccs {

// Working units: hbar = v'_F = 1. energy_scale multiplies every reported energy.
class ModelParams {
 public:
  ModelParams(double omega_b, double zeta, double energy_scale = 1.0);

  double omega_b() const noexcept { return omega_b_; }
  double zeta() const noexcept { return zeta_; }
  double energy_scale() const noexcept { return energy_scale_; }

 private:
  double omega_b_;
  double zeta_;
  double energy_scale_;
};

struct PlanePoint {
  double x = 0.0;
  double y = 0.0;
};

struct EllipticPoint {
  double rho = 0.0;
  double theta = 0.0;  // [0, 2pi)
  double xi = 0.0;
  cplx z;
};

enum class Band { conduction = +1, valence = -1 };

struct ClassicalEllipse {
  PlanePoint center;
  double semi_axis_x = 0.0;
  double semi_axis_y = 0.0;
  double eccentricity = 0.0;

  PlanePoint point_at(double t) const;
  // (x-x0)^2/a_x^2 + (y-y0)^2/a_y^2 - 1
  double residual(PlanePoint pt) const;
};

EllipticPoint to_elliptic(const ModelParams& p, PlanePoint pt);
PlanePoint from_elliptic(const ModelParams& p, double rho, double theta);
PlanePoint from_z(const ModelParams& p, cplx z);

double energy_level(const ModelParams& p, int n, Band band = Band::conduction);

ClassicalEllipse classical_ellipse(const ModelParams& p, cplx alpha, cplx beta);

}  // namespace diraccs

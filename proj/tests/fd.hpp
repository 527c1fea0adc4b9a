#pragma once

#include <cmath>
#include <complex>
#include <functional>

#include "diraccs/model.hpp"

namespace fd {

using diraccs::cplx;
using Field = std::function<cplx(double, double)>;

// Fourth-order central differences.
inline cplx d_dx(const Field& f, double x, double y, double h = 1e-3) {
  return (-f(x + 2 * h, y) + 8.0 * f(x + h, y) - 8.0 * f(x - h, y) + f(x - 2 * h, y)) / (12.0 * h);
}

inline cplx d_dy(const Field& f, double x, double y, double h = 1e-3) {
  return (-f(x, y + 2 * h) + 8.0 * f(x, y + h) - 8.0 * f(x, y - h) + f(x, y - 2 * h)) / (12.0 * h);
}

// A- = d/dz + z*/2 and B- = d/dz* + z/2 in the elliptic variable z.
inline cplx a_minus(const diraccs::ModelParams& p, const Field& f, double x, double y, double h = 1e-3) {
  const double sz = std::sqrt(p.zeta()), r = std::sqrt(p.omega_b());
  const cplx dz = (sz * d_dx(f, x, y, h) - cplx(0, 1) / sz * d_dy(f, x, y, h)) / r;
  return dz + 0.5 * std::conj(diraccs::to_elliptic(p, {x, y}).z) * f(x, y);
}

inline cplx b_minus(const diraccs::ModelParams& p, const Field& f, double x, double y, double h = 1e-3) {
  const double sz = std::sqrt(p.zeta()), r = std::sqrt(p.omega_b());
  const cplx dzc = (sz * d_dx(f, x, y, h) + cplx(0, 1) / sz * d_dy(f, x, y, h)) / r;
  return dzc + 0.5 * diraccs::to_elliptic(p, {x, y}).z * f(x, y);
}

}  // namespace fd

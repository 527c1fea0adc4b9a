#pragma once

// Reference implementations built from textbook formulas and Boost/libstdc++
// special functions, sharing no code with the library.

#include <boost/math/quadrature/exp_sinh.hpp>
#include <cmath>
#include <complex>
#include <limits>

namespace oracle {

using cplx = std::complex<double>;
inline constexpr double pi = 3.14159265358979323846;

// K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt
inline double bessel_k_integral(double nu, double x) {
  boost::math::quadrature::exp_sinh<double> integrator;
  auto f = [&](double t) {
    const double c = std::cosh(t);
    if (!std::isfinite(c)) return 0.0;
    return 0.5 * (std::exp(nu * t - x * c) + std::exp(-nu * t - x * c));
  };
  double err = 0.0;
  return integrator.integrate(f, 0.0, std::numeric_limits<double>::infinity(), 1e-14, &err);
}

// 0F1(;b;x) = Gamma(b) x^{(1-b)/2} I_{b-1}(2 sqrt x), x > 0
inline double hyp0f1_bessel(double b, double x) {
  return std::tgamma(b) * std::pow(x, 0.5 * (1.0 - b)) * std::cyl_bessel_i(b - 1.0, 2.0 * std::sqrt(x));
}

struct Polar {
  double rho, theta;
};

// x = zeta^{1/2} rho cos(theta), y = zeta^{-1/2} rho sin(theta)
inline Polar elliptic(double zeta, double x, double y) {
  const double c = x / std::sqrt(zeta), s = y * std::sqrt(zeta);
  return {std::sqrt(c * c + s * s), std::atan2(s, c)};
}

inline cplx z_of(double omega, double zeta, double x, double y) {
  return 0.5 * std::sqrt(omega) * cplx(x / std::sqrt(zeta), y * std::sqrt(zeta));
}

// Landau eigenfunction with std::assoc_laguerre; fine for small labels.
inline cplx psi(double omega, double zeta, int m, int n, double x, double y) {
  const auto e = elliptic(zeta, x, y);
  const int lo = std::min(m, n), hi = std::max(m, n), a = hi - lo;
  const double xi = 0.5 * std::sqrt(omega) * e.rho;
  const double pref = std::sqrt(omega / (4.0 * pi) * std::tgamma(lo + 1.0) / std::tgamma(hi + 1.0));
  const double sign = lo % 2 ? -1.0 : 1.0;
  const double mag = sign * pref * std::pow(xi, a) * std::exp(-0.5 * xi * xi) *
                     std::assoc_laguerre(static_cast<unsigned>(lo), static_cast<unsigned>(a), xi * xi);
  return mag * std::polar(1.0, (n - m) * e.theta);
}

struct Spinor {
  cplx upper, lower;
  double density() const { return std::norm(upper) + std::norm(lower); }
};

// Closed-form 2D-CS summed term by term (delta = eta = 0), scaled to unit area under dx dy.
inline Spinor cs2d(double omega, double zeta, cplx alpha, cplx beta, double x, double y, int terms = 200) {
  const cplx z = z_of(omega, zeta, x, y);
  const cplx w = z - beta;
  // an = alpha^n, wprev = w^{n-1}, fact = n!
  cplx up = 0.0, lo = 1.0, an = 1.0, wprev = 1.0;
  double fact = 1.0;
  for (int n = 1; n < terms; ++n) {
    an *= alpha;
    fact *= n;
    if (!std::isfinite(fact)) break;
    up += an / fact * std::sqrt(double(n)) * wprev;
    wprev *= w;
    lo += an / fact * wprev;
  }
  const cplx env = std::exp((beta - 0.5 * z) * std::conj(z) - 0.5 * std::norm(beta));
  const double norm = std::sqrt(pi * (2.0 * std::exp(std::norm(alpha)) - 1.0));
  const double jac = 0.5 * std::sqrt(omega);
  return {jac * env * up / norm, jac * env * cplx(0.0, 1.0) * lo / norm};
}

}  // namespace oracle

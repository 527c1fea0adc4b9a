#pragma once

#include <functional>
#include <vector>

namespace diraccs::quad {

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre on [-1, 1].
Rule gauss_legendre(int n);

// Gauss-Legendre mapped to [a, b].
Rule gauss_legendre(int n, double a, double b);

// Gauss-Laguerre for the weight e^{-x} on [0, inf). Nodes via Golub-Welsch,
// Newton-polished; weights from the Christoffel sum.
Rule gauss_laguerre(int n);

// Same nodes, weights multiplied by e^{x_i}: integrates f(x) directly.
Rule gauss_laguerre_unweighted(int n);

struct TanhSinhResult {
  double value = 0.0;
  double previous = 0.0;  // estimate at half the resolution
  int levels = 0;
  bool converged = false;
};

// Double-exponential quadrature on [a, b]; endpoint singularities allowed.
// f receives (x, distance to the nearer endpoint) so integrands can avoid
// cancellation close to the ends.
TanhSinhResult tanh_sinh(const std::function<double(double, double)>& f, double a, double b,
                         double rel_tol = 1e-12, int max_levels = 10);

}  // namespace diraccs::quad

#include "diraccs/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

#include "diraccs/common.hpp"

namespace diraccs::quad {

Rule gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre: n must be positive");
  Rule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 1.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.nodes[i] = -x;
    r.nodes[n - 1 - i] = x;
    r.weights[i] = w;
    r.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) r.nodes[n / 2] = 0.0;
  return r;
}

Rule gauss_legendre(int n, double a, double b) {
  Rule r = gauss_legendre(n);
  const double half = 0.5 * (b - a), mid = 0.5 * (b + a);
  for (int i = 0; i < n; ++i) {
    r.nodes[i] = mid + half * r.nodes[i];
    r.weights[i] *= half;
  }
  return r;
}

namespace {

// Orthonormal Laguerre functions l_k = L_k(x) e^{-x/2}, k < n, plus l_n; all bounded by 1.
struct LaguerreFunctions {
  double sum_sq = 0.0;
  double l_n = 0.0;
  double l_n_minus_1 = 0.0;
};

LaguerreFunctions laguerre_functions(int n, double x) {
  LaguerreFunctions r;
  double prev = 0.0, cur = std::exp(-0.5 * x);
  for (int k = 0; k < n; ++k) {
    r.sum_sq += cur * cur;
    const double next = ((2.0 * k + 1.0 - x) * cur - k * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  r.l_n = cur;
  r.l_n_minus_1 = prev;
  return r;
}

}  // namespace

Rule gauss_laguerre(int n) {
  Rule r = gauss_laguerre_unweighted(n);
  for (int i = 0; i < n; ++i) r.weights[i] *= std::exp(-r.nodes[i]);
  return r;
}

Rule gauss_laguerre_unweighted(int n) {
  if (n < 1) throw DomainError("gauss_laguerre: n must be positive");
  Eigen::VectorXd diag(n), sub(std::max(n - 1, 0));
  for (int i = 0; i < n; ++i) diag(i) = 2.0 * i + 1.0;
  for (int i = 0; i + 1 < n; ++i) sub(i) = i + 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  Rule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = es.eigenvalues()(i);
    for (int it = 0; it < 3; ++it) {
      // L_n' = n (L_n - L_{n-1}) / x; the e^{-x/2} scaling cancels in the ratio.
      const auto f = laguerre_functions(n, x);
      const double d = n * (f.l_n - f.l_n_minus_1) / x;
      if (d == 0.0) break;
      x -= f.l_n / d;
    }
    r.nodes[i] = x;
    r.weights[i] = 1.0 / laguerre_functions(n, x).sum_sq;
  }
  return r;
}

TanhSinhResult tanh_sinh(const std::function<double(double, double)>& f, double a, double b,
                         double rel_tol, int max_levels) {
  if (!(b > a)) throw DomainError("tanh_sinh: need b > a");
  const double half = 0.5 * (b - a);
  constexpr double t_max = 3.5;

  // Contribution of the abscissa pair at parameter t >= 0.
  auto pair = [&](double t) {
    const double u = 0.5 * pi * std::sinh(t);
    const double ch = std::cosh(u);
    const double w = half * 0.5 * pi * std::cosh(t) / (ch * ch);
    const double d = (b - a) / (std::exp(2.0 * u) + 1.0);
    if (!(d > 0.0) || w == 0.0) return 0.0;
    if (t == 0.0) return w * f(a + half, half);
    return w * (f(a + d, d) + f(b - d, d));
  };

  double h = 1.0;
  double sum = 0.0;
  for (double t = 0.0; t <= t_max; t += h) sum += pair(t);
  TanhSinhResult res;
  res.value = h * sum;
  res.previous = res.value;
  for (int level = 1; level <= max_levels; ++level) {
    h *= 0.5;
    for (double t = h; t <= t_max; t += 2.0 * h) sum += pair(t);
    res.previous = res.value;
    res.value = h * sum;
    res.levels = level;
    if (level >= 3 && std::abs(res.value - res.previous) <= rel_tol * std::abs(res.value)) {
      res.converged = true;
      break;
    }
  }
  return res;
}

}  // namespace diraccs::quad

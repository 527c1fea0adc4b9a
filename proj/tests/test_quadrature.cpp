#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "diraccs/common.hpp"
#include "diraccs/quadrature.hpp"

using namespace diraccs;

TEST(GaussLegendre, ExactForPolynomials) {
  const auto r = quad::gauss_legendre(10);
  for (int k = 0; k < 20; ++k) {
    double s = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * std::pow(r.nodes[i], k);
    EXPECT_NEAR(s, k % 2 ? 0.0 : 2.0 / (k + 1), 1e-14) << k;
  }
}

TEST(GaussLegendre, MappedInterval) {
  const auto r = quad::gauss_legendre(40, 0.0, pi);
  double s = 0.0;
  for (std::size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * std::sin(r.nodes[i]);
  EXPECT_NEAR(s, 2.0, 1e-14);
  EXPECT_THROW(quad::gauss_legendre(0), DomainError);
}

TEST(GaussLaguerre, Moments) {
  for (int n : {8, 64, 256}) {
    const auto r = quad::gauss_laguerre(n);
    for (int k = 0; k <= 12; ++k) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += r.weights[i] * std::pow(r.nodes[i], k);
      EXPECT_NEAR(s / std::tgamma(k + 1.0), 1.0, 1e-12) << n << ' ' << k;
    }
  }
}

TEST(GaussLaguerre, UnweightedTailWeightsAreAccurate) {
  // int_0^inf x^k e^{-x} dx with the e^{-x} folded into the integrand.
  const auto r = quad::gauss_laguerre_unweighted(64);
  for (int k : {0, 9, 30}) {
    double s = 0.0;
    for (int i = 0; i < 64; ++i) s += r.weights[i] * std::exp(k * std::log(r.nodes[i]) - r.nodes[i]);
    EXPECT_NEAR(s / std::tgamma(k + 1.0), 1.0, 1e-12) << k;
  }
  const double total = std::accumulate(r.weights.begin(), r.weights.end(), 0.0);
  EXPECT_TRUE(std::isfinite(total));
}

TEST(TanhSinh, EndpointSingularities) {
  const auto a = quad::tanh_sinh([](double x, double) { return std::log(x); }, 0.0, 1.0);
  EXPECT_TRUE(a.converged);
  EXPECT_NEAR(a.value, -1.0, 1e-12);
  const auto b = quad::tanh_sinh([](double x, double) { return 1.0 / std::sqrt(x); }, 0.0, 4.0);
  EXPECT_NEAR(b.value, 4.0, 1e-11);
}

TEST(TanhSinh, SmoothIntegrandAndErrors) {
  const auto r = quad::tanh_sinh([](double x, double) { return std::exp(-x * x); }, -3.0, 3.0);
  EXPECT_NEAR(r.value, std::sqrt(pi) * std::erf(3.0), 1e-13);
  EXPECT_NEAR(r.value, r.previous, 1e-10);
  EXPECT_THROW(quad::tanh_sinh([](double, double) { return 1.0; }, 1.0, 1.0), DomainError);
}

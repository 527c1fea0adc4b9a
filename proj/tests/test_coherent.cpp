#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "diraccs/coherent.hpp"
#include "diraccs/fock.hpp"
#include "fd.hpp"
#include "oracles.hpp"

using namespace diraccs;
using namespace diraccs::coherent;
using matrix_ops::PhaseParams;

namespace {

double diff(const SpinorValue& a, const SpinorValue& b) {
  return std::max(std::abs(a.upper - b.upper), std::abs(a.lower - b.lower));
}

double diff(const SpinorValue& a, const oracle::Spinor& b) {
  return std::max(std::abs(a.upper - b.upper), std::abs(a.lower - b.lower));
}

}  // namespace

TEST(CS2DSpec, EtaRestrictedToZeroOrPi) {
  EXPECT_NO_THROW((CS2DSpec{1.0, 1.0, 0.3, pi}).validate());
  EXPECT_THROW((CS2DSpec{1.0, 1.0, 0.0, 0.5}).validate(), DomainError);
  EXPECT_EQ((CS2DSpec{1.0, cplx(2.0, 1.0), 0.0, pi}).beta_tilde(), cplx(-2.0, -1.0));
  EXPECT_NEAR(std::abs((CS2DSpec{cplx(0, 1), 0.0, pi / 2, 0.0}).alpha_tilde() - 1.0), 0.0, 1e-15);
}

TEST(CS2D, ZeroAlphaIsShiftedGaussian) {
  const ModelParams p(1.0, 0.5);
  const CS2DSpec s{0.0, cplx(1.0, -0.5)};
  for (double x : {-1.0, 0.5, 2.0}) {
    const auto v = cs2d_amplitude(p, s, {x, 0.3});
    EXPECT_EQ(v.upper, cplx(0.0));
    const cplx z = to_elliptic(p, {x, 0.3}).z;
    EXPECT_NEAR(v.density(), 0.25 / pi * std::exp(-std::norm(z - s.beta)), 1e-15);
  }
}

TEST(CS2D, MatchesTermByTermOracleProperty) {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> ad(-2.1, 2.1), xd(-5.0, 9.0), zd(0.4, 2.5), wd(0.5, 2.0);
  for (int trial = 0; trial < 400; ++trial) {
    const double w = wd(rng), zeta = zd(rng);
    const cplx alpha(ad(rng), ad(rng)), beta(ad(rng), ad(rng));
    const double x = xd(rng), y = xd(rng) - 2.0;
    const auto got = cs2d_amplitude(ModelParams(w, zeta), CS2DSpec{alpha, beta}, {x, y});
    const auto ref = oracle::cs2d(w, zeta, alpha, beta, x, y);
    EXPECT_LT(diff(got, ref), 1e-12) << alpha << beta << x << ' ' << y;
  }
}

TEST(CS2D, LiteralPrefactorDropsJacobian) {
  const ModelParams p(2.0, 1.0);
  const CS2DSpec s{cplx(1.0, 0.5), 2.0};
  const auto a = cs2d_amplitude(p, s, {1.0, 1.0});
  const auto b = cs2d_amplitude(p, s, {1.0, 1.0}, {}, Normalization::paper_literal);
  EXPECT_NEAR(std::abs(a.lower - 0.5 * std::sqrt(2.0) * b.lower), 0.0, 1e-15);
}

TEST(CS2D, BetaTranslationProperty) {
  std::mt19937 rng(8);
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  const ModelParams p(1.0, 0.7);
  for (int trial = 0; trial < 100; ++trial) {
    const cplx alpha(d(rng), d(rng)), b1(d(rng), d(rng)), b2(d(rng), d(rng));
    const cplx z(d(rng), d(rng));
    const auto v1 = cs2d_amplitude(p, {alpha, b1}, from_z(p, z));
    const auto v2 = cs2d_amplitude(p, {alpha, b2}, from_z(p, z - b1 + b2));
    EXPECT_NEAR(std::abs(v1.upper), std::abs(v2.upper), 1e-10);
    EXPECT_NEAR(std::abs(v1.lower), std::abs(v2.lower), 1e-10);
  }
}

TEST(CS2D, EigenResidualsProperty) {
  std::mt19937 rng(12);
  std::uniform_real_distribution<double> mag(0.0, 3.0), ph(0.0, 2.0 * pi);
  for (int trial = 0; trial < 25; ++trial) {
    const cplx alpha = std::polar(mag(rng), ph(rng)), beta = std::polar(mag(rng), ph(rng));
    const double delta = ph(rng), eta = trial % 2 ? pi : 0.0;
    const CS2DSpec s{alpha, beta, delta, eta};
    const int cut = std::max(series_cutoff(std::abs(alpha)), series_cutoff(std::abs(beta)));
    const auto c = cs2d_coefficients(s, cut, cut);
    const PhaseParams ph_{delta, eta};
    EXPECT_LT(matrix_ops::eigen_residual(matrix_ops::apply_A_minus(ph_, c), alpha, c), 1e-8);
    EXPECT_LT(matrix_ops::eigen_residual(matrix_ops::apply_B_minus(ph_, c), beta, c), 1e-10);
  }
}

TEST(CS2D, CoefficientsNormalize) {
  const auto c0 = cs2d_coefficients({0.0, 0.0}, 5, 5);
  ASSERT_EQ(c0.size(), 1u);
  EXPECT_EQ(c0.begin()->first, (spinors::SpinorLabel{0, 0}));
  EXPECT_NEAR(std::abs(c0.begin()->second - 1.0), 0.0, 1e-15);
  const CS2DSpec s{cplx(1.5, -1.0), cplx(-2.0, 0.5)};
  const int cut = static_cast<int>(std::norm(s.alpha) + std::norm(s.beta)) + 40;
  const double n = matrix_ops::norm(cs2d_coefficients(s, cut, cut));
  EXPECT_NEAR(n * n, 1.0, 1e-12);
}

TEST(CS2D, CoefficientExpansionMatchesClosedForm) {
  const ModelParams p(1.0, 0.8);
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> xd(-4.0, 8.0);
  const double mags[] = {0.0, 0.7, 1.5, 2.2, 3.0};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      const CS2DSpec s{std::polar(mags[i], 0.3 * i), std::polar(mags[j], -0.5 * j)};
      const int cut = std::max(series_cutoff(mags[i]), series_cutoff(mags[j]));
      const auto c = cs2d_coefficients(s, cut, cut);
      for (int k = 0; k < 8; ++k) {
        const PlanePoint pt{xd(rng), xd(rng) - 2.0};
        EXPECT_LT(diff(expand(p, c, pt), cs2d_amplitude(p, s, pt)), 1e-9) << i << ' ' << j;
      }
    }
}

TEST(CS2D, ConvergenceCapReportsPartial) {
  SeriesControl ctl;
  ctl.max_terms = 2;
  try {
    cs2d_amplitude(ModelParams(1.0, 1.0), {3.0, 0.0}, {2.0, 0.0}, ctl);
    FAIL() << "expected ConvergenceError";
  } catch (const ConvergenceError& e) {
    EXPECT_EQ(e.partial().size(), 2u);
  }
}

TEST(CS2D, ErrorShrinksAsToleranceTightens) {
  const ModelParams p(1.0, 1.0);
  const CS2DSpec s{cplx(2.5, 1.0), 1.0};
  const PlanePoint pt{1.5, -0.7};
  SeriesControl tight;
  tight.rel_tol = 1e-16;
  const auto ref = cs2d_amplitude(p, s, pt, tight);
  double prev = INFINITY;
  for (double tol : {1e-2, 1e-5, 1e-8, 1e-12}) {
    SeriesControl ctl;
    ctl.rel_tol = tol;
    const double e = diff(cs2d_amplitude(p, s, pt, ctl), ref);
    EXPECT_LE(e, prev + 1e-16);
    prev = e;
  }
  EXPECT_LT(prev, 1e-12);
}

TEST(FixedN, GroundUpperVanishes) {
  const ModelParams p(1.0, 1.0);
  EXPECT_EQ(fixed_n_cs(p, 1.0, 0, {0.3, 0.2}).upper, cplx(0.0));
}

TEST(FixedN, BMinusEigenrelationProperty) {
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  const ModelParams p(1.2, 0.6);
  for (int trial = 0; trial < 30; ++trial) {
    const cplx beta(d(rng), d(rng));
    const int n = trial % 5;
    const double x = d(rng), y = d(rng);
    fd::Field up = [&](double u, double v) { return fixed_n_cs(p, beta, n, {u, v}).upper; };
    fd::Field lo = [&](double u, double v) { return fixed_n_cs(p, beta, n, {u, v}).lower; };
    const auto v = fixed_n_cs(p, beta, n, {x, y});
    EXPECT_NEAR(std::abs(fd::b_minus(p, up, x, y) - beta * v.upper), 0.0, 1e-6);
    EXPECT_NEAR(std::abs(fd::b_minus(p, lo, x, y) - beta * v.lower), 0.0, 1e-6);
  }
}

TEST(FixedN, WeightedSumReproducesCS2D) {
  const ModelParams p(1.0, 0.5);
  const CS2DSpec s{cplx(1.2, 0.4), cplx(2.0, -1.0)};
  for (const PlanePoint pt : {PlanePoint{0.5, 0.5}, PlanePoint{3.0, -2.0}, PlanePoint{-1.0, 1.5}}) {
    SpinorValue sum{};
    for (int n = 0; n < 80; ++n) {
      const auto v = fixed_n_cs(p, s.beta, n, pt);
      const cplx w = cs2d_level_weight(s, n);
      sum.upper += w * v.upper;
      sum.lower += w * v.lower;
    }
    EXPECT_LT(diff(sum, cs2d_amplitude(p, s, pt)), 1e-10);
  }
}

TEST(SU11, ZeroTauIsLowestState) {
  const ModelParams p(1.0, 0.7);
  const PlanePoint pt{0.6, -0.4};
  for (int mz = 0; mz <= 3; ++mz)
    EXPECT_LT(diff(su11_amplitude(p, {0.0, mz}, pt), spinors::phi_state(p, mz, mz, pt)), 1e-15) << mz;
  for (int mz = -3; mz < 0; ++mz)
    EXPECT_LT(diff(su11_amplitude(p, {0.0, mz}, pt), spinors::phi_state(p, mz, 0, pt)), 1e-15) << mz;
}

TEST(SU11, KMinusResidualProperty) {
  std::mt19937 rng(21);
  std::uniform_real_distribution<double> mag(0.0, 5.0), ph(0.0, 2.0 * pi);
  for (int mz = -3; mz <= 3; ++mz)
    for (int trial = 0; trial < 4; ++trial) {
      const cplx tau = std::polar(mag(rng), ph(rng));
      const double delta = ph(rng);
      const SU11Spec s{tau, mz, delta};
      const auto c = su11_coefficients(s, series_cutoff(std::abs(tau)) + std::abs(mz));
      for (const auto& [label, v] : c) EXPECT_EQ(label.j(), mz - 0.5);
      EXPECT_LT(matrix_ops::eigen_residual(matrix_ops::apply_K_minus({delta, 0.0}, c), tau, c), 1e-8) << mz;
    }
}

TEST(SU11, ExpansionMatchesAmplitude) {
  const ModelParams p(1.5, 1.5);
  for (int mz : {-3, -1, 0, 1, 2, 4})
    for (double t : {0.5, 2.0, 4.0}) {
      const SU11Spec s{std::polar(t, 0.4), mz, 0.2};
      const auto c = su11_coefficients(s, series_cutoff(t) + std::abs(mz));
      for (const PlanePoint pt : {PlanePoint{0.5, 0.1}, PlanePoint{-2.0, 1.0}, PlanePoint{3.5, -0.5}})
        EXPECT_LT(diff(expand(p, c, pt), su11_amplitude(p, s, pt)), 1e-10) << mz << ' ' << t;
    }
}

TEST(SU11, CoefficientsNormalized) {
  for (int mz : {-4, -1, 0, 1, 3})
    for (double t : {0.3, 2.0, 5.0}) {
      const double n = matrix_ops::norm(su11_coefficients({t, mz}, series_cutoff(t) + std::abs(mz) + 20));
      EXPECT_NEAR(n, 1.0, 1e-12) << mz << ' ' << t;
    }
}

TEST(SU11, DensityDependsOnXiOnlyProperty) {
  std::mt19937 rng(90);
  std::uniform_real_distribution<double> ph(0.0, 2.0 * pi), rd(0.1, 6.0);
  for (double zeta : {0.5, 1.5}) {
    const ModelParams p(1.0, zeta);
    for (int mz : {-2, 0, 2}) {
      const SU11Spec s{cplx(1.0, 2.0), mz};
      for (int trial = 0; trial < 10; ++trial) {
        const double rho = rd(rng);
        const double r0 = su11_amplitude(p, s, from_elliptic(p, rho, 0.0)).density();
        const double r1 = su11_amplitude(p, s, from_elliptic(p, rho, ph(rng))).density();
        EXPECT_NEAR(r1, r0, 1e-8 * std::max(r0, 1e-300) + 1e-300);
      }
    }
  }
}

TEST(SU11, LargeTauStaysFinite) {
  const auto v = su11_amplitude(ModelParams(1.0, 1.0), {40.0, 2}, {9.0, 0.0});
  EXPECT_TRUE(std::isfinite(v.density()));
  EXPECT_NEAR(su11_log_norm(0.0, 3), 0.0, 1e-15);
  EXPECT_NEAR(su11_log_norm(0.0, -3), 0.0, 1e-15);
}

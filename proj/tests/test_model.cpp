#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "diraccs/model.hpp"

using namespace diraccs;

TEST(ModelParams, Validation) {
  EXPECT_THROW(ModelParams(0.0, 1.0), DomainError);
  EXPECT_THROW(ModelParams(1.0, -0.5), DomainError);
  EXPECT_THROW(ModelParams(1.0, 1.0, NAN), DomainError);
  const ModelParams p(2.0, 0.5, 3.0);
  EXPECT_EQ(p.omega_b(), 2.0);
  EXPECT_EQ(p.zeta(), 0.5);
  EXPECT_EQ(p.energy_scale(), 3.0);
}

TEST(Elliptic, KnownPoint) {
  const ModelParams p(4.0, 4.0);
  // x = 2 rho cos, y = rho sin / 2
  const auto e = to_elliptic(p, {2.0, 0.0});
  EXPECT_NEAR(e.rho, 1.0, 1e-15);
  EXPECT_NEAR(e.theta, 0.0, 1e-15);
  EXPECT_NEAR(e.xi, 1.0, 1e-15);
  EXPECT_NEAR(std::abs(e.z - cplx(1.0, 0.0)), 0.0, 1e-15);
  const auto f = to_elliptic(p, {0.0, -0.5});
  EXPECT_NEAR(f.theta, 1.5 * pi, 1e-15);
}

TEST(Elliptic, RoundTripProperty) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> xd(-20.0, 20.0), zd(0.2, 5.0), wd(0.1, 4.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const ModelParams p(wd(rng), zd(rng));
    const PlanePoint pt{xd(rng), xd(rng)};
    const auto e = to_elliptic(p, pt);
    EXPECT_GE(e.theta, 0.0);
    EXPECT_LT(e.theta, 2.0 * pi);
    EXPECT_NEAR(std::abs(e.z), e.xi, 1e-12 * (1.0 + e.xi));
    const auto back = from_elliptic(p, e.rho, e.theta);
    EXPECT_NEAR(back.x, pt.x, 1e-12 * (1.0 + std::abs(pt.x)));
    EXPECT_NEAR(back.y, pt.y, 1e-12 * (1.0 + std::abs(pt.y)));
    const auto viaz = from_z(p, e.z);
    EXPECT_NEAR(viaz.x, pt.x, 1e-12 * (1.0 + std::abs(pt.x)));
    EXPECT_NEAR(viaz.y, pt.y, 1e-12 * (1.0 + std::abs(pt.y)));
  }
}

TEST(EnergyLevel, SquareRootLaw) {
  const ModelParams p(2.5, 0.7, 1.5);
  for (int n = 0; n < 40; ++n) {
    EXPECT_EQ(energy_level(p, n), std::sqrt(n * 2.5) * 1.5);
    EXPECT_EQ(energy_level(p, n, Band::valence), -std::sqrt(n * 2.5) * 1.5);
  }
  EXPECT_THROW(energy_level(p, -1), DomainError);
}

TEST(ClassicalEllipse, CenterAxesEccentricity) {
  const ModelParams p(1.0, 0.5);
  const auto e = classical_ellipse(p, 2.0, cplx(0.0, 5.0));
  EXPECT_NEAR(e.center.x, 0.0, 1e-14);
  EXPECT_NEAR(e.center.y, 2.0 * 5.0 / std::sqrt(0.5), 1e-13);
  EXPECT_NEAR(e.eccentricity, std::sqrt(1.0 - 0.25), 1e-15);
  EXPECT_NEAR(e.semi_axis_x / e.semi_axis_y, 0.5, 1e-15);
  const auto f = classical_ellipse(ModelParams(1.0, 1.5), 2.0, 5.0);
  EXPECT_NEAR(f.eccentricity, std::sqrt(1.0 - 1.0 / 2.25), 1e-15);
  EXPECT_EQ(classical_ellipse(ModelParams(1.0, 1.0), 2.0, 5.0).eccentricity, 0.0);
}

TEST(ClassicalEllipse, PointsSatisfyResidual) {
  const auto e = classical_ellipse(ModelParams(1.3, 2.0), cplx(1.0, 1.0), cplx(3.0, -2.0));
  for (int k = 0; k < 16; ++k) EXPECT_NEAR(e.residual(e.point_at(0.4 * k)), 0.0, 1e-13);
  EXPECT_LT(e.residual(e.center), 0.0);
}

TEST(ClassicalEllipse, MatchesFocalGeometry) {
  // eccentricity from the axes: sqrt(1 - (minor/major)^2)
  for (double z : {0.3, 0.5, 1.5, 3.0}) {
    const auto e = classical_ellipse(ModelParams(1.0, z), 1.0, 0.0);
    const double mn = std::min(e.semi_axis_x, e.semi_axis_y), mx = std::max(e.semi_axis_x, e.semi_axis_y);
    EXPECT_NEAR(e.eccentricity, std::sqrt(1.0 - mn * mn / (mx * mx)), 1e-14) << z;
  }
}

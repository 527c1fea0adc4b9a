#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <random>

#include "diraccs/fock.hpp"
#include "diraccs/quadrature.hpp"
#include "diraccs/verify.hpp"
#include "fd.hpp"
#include "oracles.hpp"

using namespace diraccs;
using namespace diraccs::fock;

using fd::Field;

TEST(PsiScalar, GroundStateAtOrigin) {
  const ModelParams p(1.0, 1.0);
  EXPECT_NEAR(psi_scalar(p, {0, 0}, PlanePoint{0.0, 0.0}).real(), 1.0 / (2.0 * std::sqrt(pi)), 1e-15);
  EXPECT_EQ(std::abs(psi_scalar(p, {0, 1}, PlanePoint{0.0, 0.0})), 0.0);
}

TEST(PsiScalar, AngularPhase) {
  const ModelParams p(1.0, 1.0);
  const cplx a = psi_scalar(p, {0, 1}, from_elliptic(p, 1.3, pi / 3));
  const cplx b = psi_scalar(p, {0, 1}, from_elliptic(p, 1.3, 0.0));
  EXPECT_NEAR(std::arg(a / b), pi / 3, 1e-13);
}

TEST(PsiScalar, MatchesDirectFormulaProperty) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> id(0, 12);
  std::uniform_real_distribution<double> xd(-6.0, 6.0), zd(0.3, 3.0), wd(0.3, 3.0);
  for (int trial = 0; trial < 600; ++trial) {
    const double w = wd(rng), z = zd(rng), x = xd(rng), y = xd(rng);
    const int m = id(rng), n = id(rng);
    const ModelParams p(w, z);
    const cplx got = psi_scalar(p, {m, n}, PlanePoint{x, y});
    const cplx ref = oracle::psi(w, z, m, n, x, y);
    EXPECT_NEAR(std::abs(got - ref), 0.0, 1e-12) << m << ' ' << n << ' ' << x << ' ' << y;
  }
}

TEST(PsiScalar, TableAndDiagonalAgree) {
  const ModelParams p(1.7, 0.6);
  const auto ep = to_elliptic(p, {1.1, -2.3});
  const auto t = scalar_table(p, ep, 10);
  for (int m = 0; m <= 10; ++m)
    for (int n = 0; n <= 10; ++n) EXPECT_NEAR(std::abs(t(m, n) - psi_scalar(p, {m, n}, ep)), 0.0, 1e-14);
  const auto diag = psi_diagonal(p, -3, 5, ep);
  for (int k = 0; k <= 5; ++k) EXPECT_NEAR(std::abs(diag[k] - psi_scalar(p, {k + 3, k}, ep)), 0.0, 1e-14);
}

TEST(PsiScalar, HighIndicesStayFinite) {
  const ModelParams p(1.0, 1.0);
  const auto ep = to_elliptic(p, {30.0, 5.0});
  const auto d = psi_diagonal(p, 40, 400, ep);
  for (const auto& v : d) EXPECT_TRUE(std::isfinite(v.real()) && std::isfinite(v.imag()));
  EXPECT_THROW(psi_scalar(p, {-1, 0}, ep), IndexError);
}

TEST(PsiScalar, LadderDifferentialFormsProperty) {
  std::mt19937 rng(55);
  std::uniform_int_distribution<int> id(0, 7);
  std::uniform_real_distribution<double> xd(-2.5, 2.5);
  for (double zeta : {0.5, 1.0, 1.5}) {
    const ModelParams p(1.3, zeta);
    for (int trial = 0; trial < 20; ++trial) {
      const int m = id(rng), n = id(rng);
      const double x = xd(rng), y = xd(rng);
      Field f = [&](double u, double v) { return psi_scalar(p, {m, n}, PlanePoint{u, v}); };
      const cplx a = fd::a_minus(p, f, x, y);
      const cplx b = fd::b_minus(p, f, x, y);
      const cplx a_ref = n == 0 ? 0.0 : std::sqrt(double(n)) * psi_scalar(p, {m, n - 1}, PlanePoint{x, y});
      const cplx b_ref = m == 0 ? 0.0 : std::sqrt(double(m)) * psi_scalar(p, {m - 1, n}, PlanePoint{x, y});
      EXPECT_NEAR(std::abs(a - a_ref), 0.0, 1e-10) << m << ' ' << n;
      EXPECT_NEAR(std::abs(b - b_ref), 0.0, 1e-10) << m << ' ' << n;
    }
  }
}

TEST(PsiScalar, LzFromPhaseDerivative) {
  const ModelParams p(1.0, 0.7);
  for (auto [m, n] : {std::pair{0, 3}, std::pair{4, 1}, std::pair{2, 2}}) {
    const double h = 1e-5, rho = 1.4, th = 0.9;
    const cplx f1 = psi_scalar(p, {m, n}, from_elliptic(p, rho, th + h));
    const cplx f0 = psi_scalar(p, {m, n}, from_elliptic(p, rho, th - h));
    EXPECT_NEAR(std::arg(f1 / f0) / (2 * h), n - m, 1e-6);
  }
}

TEST(Ladder, Actions) {
  EXPECT_TRUE(ladder_action(Ladder::a_minus, {3, 0}).annihilated());
  const auto up = ladder_action(Ladder::a_plus, {0, 3});
  EXPECT_EQ(up.coefficient, 2.0);
  EXPECT_EQ(*up.index, (ScalarIndex{0, 4}));
  const auto down = ladder_action(Ladder::b_minus, {5, 2});
  EXPECT_DOUBLE_EQ(down.coefficient, std::sqrt(5.0));
  EXPECT_EQ(*down.index, (ScalarIndex{4, 2}));
  EXPECT_TRUE(ladder_action(Ladder::b_minus, {0, 2}).annihilated());
  EXPECT_THROW(ladder_action(Ladder::a_plus, {-1, 0}), IndexError);
}

TEST(Truncated, NumberOperatorIsProduct) {
  const int c = 8;
  const auto n = build_truncated(ScalarOperator::n, c).entries();
  const auto am = build_truncated(ScalarOperator::a_minus, c).entries();
  const auto ap = build_truncated(ScalarOperator::a_plus, c).entries();
  EXPECT_NEAR(block_deviation("N", n - ap * am, interior_indices(c)).max_deviation, 0.0, 1e-14);
  EXPECT_NEAR(block_deviation("N", n - sparse_product(ap, am), interior_indices(c)).max_deviation, 0.0, 1e-14);
}

TEST(Truncated, IndexingRoundTrip) {
  const auto op = build_truncated(ScalarOperator::lz, 5);
  EXPECT_EQ(op.dimension(), 36);
  for (int i = 0; i < 36; ++i) EXPECT_EQ(op.index_of(op.label_of(i)), i);
  EXPECT_EQ(op.index_of({2, 3}), 2 * 6 + 3);
  EXPECT_THROW(op.index_of({6, 0}), IndexError);
  EXPECT_EQ(interior_indices(5).size(), 25u);
}

TEST(Truncated, CommutatorsOnInteriorBlock) {
  const auto rep = check_scalar_algebra(12);
  for (const auto& r : rep.relations) EXPECT_LT(r.max_deviation, 1e-12) << r.name;
  EXPECT_LT(rep.find("[A-,A+] - 1").max_deviation, 1e-12);
  EXPECT_LT(rep.find("[Lz,A+] - A+").max_deviation, 1e-12);
  EXPECT_LT(rep.find("[Lz,B+] + B+").max_deviation, 1e-12);
  EXPECT_THROW(rep.find("nonexistent"), std::out_of_range);
}

TEST(Truncated, TruncationEdgeIsVisibleOutsideInterior) {
  const int c = 6;
  const auto am = build_truncated(ScalarOperator::a_minus, c).entries();
  const auto ap = build_truncated(ScalarOperator::a_plus, c).entries();
  const Eigen::MatrixXcd diff = commutator(am, ap) - Eigen::MatrixXcd::Identity(am.rows(), am.cols());
  std::vector<int> all(am.rows());
  for (int i = 0; i < am.rows(); ++i) all[i] = i;
  EXPECT_GT(block_deviation("edge", diff, all).max_deviation, 1.0);
}

TEST(Factorization, ExactOnInterior) {
  for (double zeta : {0.5, 1.0, 2.0}) {
    const auto rep = check_factorization(ModelParams(1.7, zeta), 15);
    for (const auto& r : rep.relations) EXPECT_LT(r.max_deviation, 1e-12) << r.name;
  }
}

TEST(Factorization, CutoffThirtyUnderBudget) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto rep = check_scalar_algebra(30);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  EXPECT_LT(rep.max_deviation(), 1e-12);
  EXPECT_LT(secs, 10.0);
}

TEST(Orthonormality, GramIndicesTwelve) {
  const auto g = verify::scalar_gram(ModelParams(1.0, 0.8), 12, 64);
  const double dev = (g - Eigen::MatrixXcd::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
  EXPECT_LT(dev, 1e-8);
}

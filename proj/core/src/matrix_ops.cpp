#include "diraccs/matrix_ops.hpp"

#include <cmath>

#include "diraccs/fock.hpp"

namespace diraccs::matrix_ops {

namespace {

constexpr double inv_sqrt2 = 0.70710678118654752440;

// 1/sqrt(2^{delta_{1n}})
double boundary_factor(int n) { return n == 1 ? inv_sqrt2 : 1.0; }

cplx omega_n(const PhaseParams& ph, int n) {
  return {std::cos(ph.eta), n == 0 ? 0.0 : std::sin(ph.eta)};
}

struct Transition {
  bool alive = false;
  SpinorLabel target;
  cplx coefficient;
};

Transition transition(MatrixOperator op, const PhaseParams& ph, SpinorLabel s) {
  const int m = s.m, n = s.n;
  switch (op) {
    case MatrixOperator::a_minus:
      if (n == 0) return {};
      return {true, {m, n - 1}, std::polar(boundary_factor(n) * std::sqrt(double(n)), ph.delta)};
    case MatrixOperator::a_plus:
      return {true, {m, n + 1}, std::polar(boundary_factor(n + 1) * std::sqrt(n + 1.0), -ph.delta)};
    case MatrixOperator::b_minus:
      if (m == 0) return {};
      return {true, {m - 1, n}, std::sqrt(double(m)) * omega_n(ph, n)};
    case MatrixOperator::b_plus:
      return {true, {m + 1, n}, std::sqrt(m + 1.0) * std::conj(omega_n(ph, n))};
    case MatrixOperator::k_minus:
      if (n == 0 || m == 0) return {};
      return {true, {m - 1, n - 1},
              std::polar(boundary_factor(n) * std::sqrt(double(n) * m), ph.gamma())};
    case MatrixOperator::k_plus:
      return {true, {m + 1, n + 1},
              std::polar(boundary_factor(n + 1) * std::sqrt((n + 1.0) * (m + 1.0)), -ph.gamma())};
    case MatrixOperator::k0: {
      // (1/2) diag(N+M+2, N+M+1) on (psi_{m,n-1}, i psi_{m,n}); both rows give (n+m+1)/2.
      const double lower = 0.5 * (n + m + 1);
      return {true, s, lower};
    }
  }
  return {};
}

void check_labels(const Coefficients& c) {
  for (const auto& [label, value] : c)
    if (label.m < 0 || label.n < 0) throw IndexError("spinor label with negative index");
}

}  // namespace

double PhaseParams::gamma() const {
  double g = std::fmod(delta + eta, 2.0 * pi);
  if (g < 0.0) g += 2.0 * pi;
  return g;
}

void PhaseParams::validate() const {
  if (!std::isfinite(delta) || !std::isfinite(eta)) throw DomainError("phases must be finite");
}

Coefficients apply(MatrixOperator op, const PhaseParams& ph, const Coefficients& coeffs) {
  check_labels(coeffs);
  Coefficients out;
  for (const auto& [label, value] : coeffs) {
    const auto t = transition(op, ph, label);
    if (!t.alive) continue;
    out[t.target] += t.coefficient * value;
  }
  return out;
}

Coefficients apply_A_minus(const PhaseParams& ph, const Coefficients& c) { return apply(MatrixOperator::a_minus, ph, c); }
Coefficients apply_A_plus(const PhaseParams& ph, const Coefficients& c) { return apply(MatrixOperator::a_plus, ph, c); }
Coefficients apply_B_minus(const PhaseParams& ph, const Coefficients& c) { return apply(MatrixOperator::b_minus, ph, c); }
Coefficients apply_B_plus(const PhaseParams& ph, const Coefficients& c) { return apply(MatrixOperator::b_plus, ph, c); }
Coefficients apply_K_minus(const PhaseParams& ph, const Coefficients& c) { return apply(MatrixOperator::k_minus, ph, c); }
Coefficients apply_K_plus(const PhaseParams& ph, const Coefficients& c) { return apply(MatrixOperator::k_plus, ph, c); }
Coefficients apply_K0(const Coefficients& c) { return apply(MatrixOperator::k0, PhaseParams{}, c); }

double norm(const Coefficients& coeffs) {
  double s = 0.0;
  for (const auto& [label, value] : coeffs) s += std::norm(value);
  return std::sqrt(s);
}

double eigen_residual(const Coefficients& applied, cplx lambda, const Coefficients& coeffs) {
  Coefficients diff = applied;
  for (const auto& [label, value] : coeffs) diff[label] -= lambda * value;
  const double n = norm(coeffs);
  if (n == 0.0) throw DomainError("eigen_residual: zero coefficient vector");
  return norm(diff) / n;
}

Eigen::MatrixXcd build_matrix(MatrixOperator op, const PhaseParams& ph, int cutoff) {
  if (cutoff < 1) throw DomainError("build_matrix: cutoff must be at least 1");
  ph.validate();
  const int side = cutoff + 1;
  Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(side * side, side * side);
  for (int m = 0; m <= cutoff; ++m) {
    for (int n = 0; n <= cutoff; ++n) {
      const auto t = transition(op, ph, {m, n});
      if (!t.alive || t.target.m > cutoff || t.target.n > cutoff) continue;
      mat(t.target.m * side + t.target.n, m * side + n) += t.coefficient;
    }
  }
  return mat;
}

AlgebraReport verify_matrix_algebra(int cutoff, const PhaseParams& ph) {
  if (cutoff < 3) throw DomainError("verify_matrix_algebra: cutoff must be at least 3");
  using fock::block_deviation;
  using fock::commutator;
  const auto am = build_matrix(MatrixOperator::a_minus, ph, cutoff);
  const auto ap = build_matrix(MatrixOperator::a_plus, ph, cutoff);
  const auto bm = build_matrix(MatrixOperator::b_minus, ph, cutoff);
  const auto bp = build_matrix(MatrixOperator::b_plus, ph, cutoff);
  const auto km = build_matrix(MatrixOperator::k_minus, ph, cutoff);
  const auto kp = build_matrix(MatrixOperator::k_plus, ph, cutoff);
  const auto k0 = build_matrix(MatrixOperator::k0, ph, cutoff);
  const int side = cutoff + 1;
  const int dim = side * side;
  const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(dim, dim);
  const auto idx = fock::interior_indices(cutoff);

  // 2K0 written out as diag(N+M+2, N+M+1) acting on the two spinor rows.
  Eigen::MatrixXcd two_k0 = Eigen::MatrixXcd::Zero(dim, dim);
  for (int m = 0; m <= cutoff; ++m)
    for (int n = 0; n <= cutoff; ++n)
      two_k0(m * side + n, m * side + n) = (n == 0) ? (n + m + 1.0) : ((n - 1) + m + 2.0);

  AlgebraReport rep;
  rep.cutoff = cutoff;
  rep.phases = ph;
  auto add = [&](const char* name, const Eigen::MatrixXcd& diff) {
    rep.relations.push_back(block_deviation(name, diff, idx));
  };
  add("[A-,A+] - I", commutator(am, ap) - eye);
  add("[B-,B+] - I", commutator(bm, bp) - eye);
  add("[A-,B-]", commutator(am, bm));
  add("[A+,B+]", commutator(ap, bp));
  add("[A-,B+]", commutator(am, bp));
  add("[A+,B-]", commutator(ap, bm));
  add("A+ - (A-)^dagger", ap - am.adjoint());
  add("B+ - (B-)^dagger", bp - bm.adjoint());
  add("K+ - (K-)^dagger", kp - km.adjoint());
  add("K- - A-B-", km - fock::sparse_product(am, bm));
  add("2K0 - diag(N+M+2, N+M+1)", 2.0 * k0 - two_k0);
  add("[K-,K+] - 2K0", commutator(km, kp) - 2.0 * k0);
  add("[K0,K+] - K+", commutator(k0, kp) - kp);
  add("[K0,K-] + K-", commutator(k0, km) + km);
  return rep;
}

}  // namespace diraccs::matrix_ops

#include "diraccs/spinors.hpp"

#include <cmath>

#include "diraccs/fock.hpp"

namespace diraccs::spinors {

SpinorLabel SpinorLabel::from_mz(int mz, int n) {
  if (n < 0 || n < mz) throw IndexError("Phi label needs n >= max(0, m_z)");
  return {n - mz, n};
}

SpinorValue spinor_state(const ModelParams& p, int m, int n, PlanePoint pt) {
  return spinor_state(p, m, n, to_elliptic(p, pt));
}

SpinorValue spinor_state(const ModelParams& p, int m, int n, const EllipticPoint& ep) {
  if (m < 0 || n < 0) throw IndexError("spinor_state: labels must be nonnegative");
  const cplx i(0.0, 1.0);
  const cplx lower = i * fock::psi_scalar(p, {m, n}, ep);
  if (n == 0) return {0.0, lower};
  const double r = 1.0 / std::sqrt(2.0);
  return {r * fock::psi_scalar(p, {m, n - 1}, ep), r * lower};
}

SpinorValue phi_state(const ModelParams& p, int mz, int n, PlanePoint pt) {
  const auto label = SpinorLabel::from_mz(mz, n);
  return spinor_state(p, label.m, label.n, pt);
}

double jz_eigenvalue(int m, int n) {
  if (m < 0 || n < 0) throw IndexError("jz_eigenvalue: labels must be nonnegative");
  return (n - m) - 0.5;
}

std::map<int, std::vector<SpinorLabel>> mz_diagonals(int cutoff) {
  if (cutoff < 0) throw DomainError("mz_diagonals: cutoff must be nonnegative");
  std::map<int, std::vector<SpinorLabel>> out;
  for (int m = 0; m <= cutoff; ++m)
    for (int n = 0; n <= cutoff; ++n) out[n - m].push_back({m, n});
  return out;
}

Eigen::MatrixXd diagonal_projector(int cutoff, int mz) {
  if (cutoff < 0) throw DomainError("diagonal_projector: cutoff must be nonnegative");
  const int side = cutoff + 1;
  Eigen::MatrixXd proj = Eigen::MatrixXd::Zero(side * side, side * side);
  for (int m = 0; m <= cutoff; ++m) {
    const int n = m + mz;
    if (n < 0 || n > cutoff) continue;
    proj(m * side + n, m * side + n) = 1.0;
  }
  return proj;
}

}  // namespace diraccs::spinors

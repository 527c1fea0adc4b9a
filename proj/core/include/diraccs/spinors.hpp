#pragma once

#include <Eigen/Dense>
#include <compare>
#include <map>
#include <vector>

#include "diraccs/common.hpp"
#include "diraccs/model.hpp"

namespace diraccs::spinors {

struct SpinorValue {
  cplx upper;
  cplx lower;

  double density() const noexcept { return std::norm(upper) + std::norm(lower); }
};

// m_z >= 1 is the upper sector; m_z <= 0 (including 0) the lower one.
enum class Sector { upper, lower };

struct SpinorLabel {
  int m = 0;
  int n = 0;

  int mz() const noexcept { return n - m; }
  double j() const noexcept { return mz() - 0.5; }
  Sector sector() const noexcept { return mz() >= 1 ? Sector::upper : Sector::lower; }

  // Phi_{m_z,n} is Psi_{n-m_z,n}.
  static SpinorLabel from_mz(int mz, int n);

  friend auto operator<=>(const SpinorLabel&, const SpinorLabel&) = default;
};

SpinorValue spinor_state(const ModelParams& p, int m, int n, PlanePoint pt);
SpinorValue spinor_state(const ModelParams& p, int m, int n, const EllipticPoint& ep);

SpinorValue phi_state(const ModelParams& p, int mz, int n, PlanePoint pt);

double jz_eigenvalue(int m, int n);

// Labels of the block 0 <= m, n <= cutoff grouped by m_z.
std::map<int, std::vector<SpinorLabel>> mz_diagonals(int cutoff);

// Diagonal 0/1 projector onto the m_z diagonal, basis index m*(cutoff+1)+n.
Eigen::MatrixXd diagonal_projector(int cutoff, int mz);

}  // namespace diraccs::spinors

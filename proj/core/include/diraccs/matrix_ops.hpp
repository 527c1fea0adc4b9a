#pragma once

#include <Eigen/Dense>
#include <map>
#include <vector>

#include "diraccs/common.hpp"
#include "diraccs/spinors.hpp"

namespace diraccs::matrix_ops {

using spinors::SpinorLabel;
using Coefficients = std::map<SpinorLabel, cplx>;

struct PhaseParams {
  double delta = 0.0;
  double eta = 0.0;

  // delta + eta reduced to [0, 2pi)
  double gamma() const;
  void validate() const;
};

enum class MatrixOperator { a_minus, a_plus, b_minus, b_plus, k_minus, k_plus, k0 };

Coefficients apply(MatrixOperator op, const PhaseParams& ph, const Coefficients& coeffs);

Coefficients apply_A_minus(const PhaseParams& ph, const Coefficients& coeffs);
Coefficients apply_A_plus(const PhaseParams& ph, const Coefficients& coeffs);
Coefficients apply_B_minus(const PhaseParams& ph, const Coefficients& coeffs);
Coefficients apply_B_plus(const PhaseParams& ph, const Coefficients& coeffs);
Coefficients apply_K_minus(const PhaseParams& ph, const Coefficients& coeffs);
Coefficients apply_K_plus(const PhaseParams& ph, const Coefficients& coeffs);
Coefficients apply_K0(const Coefficients& coeffs);

// ||applied - lambda * coeffs|| / ||coeffs|| over the union of labels.
double eigen_residual(const Coefficients& applied, cplx lambda, const Coefficients& coeffs);

double norm(const Coefficients& coeffs);

// Matrix of the label action on {(m,n): 0 <= m,n <= cutoff}, index m*(cutoff+1)+n.
// Transitions leaving the block are dropped.
Eigen::MatrixXcd build_matrix(MatrixOperator op, const PhaseParams& ph, int cutoff);

struct AlgebraReport : RelationReport {
  PhaseParams phases;
};

AlgebraReport verify_matrix_algebra(int cutoff, const PhaseParams& ph);

}  // namespace diraccs::matrix_ops

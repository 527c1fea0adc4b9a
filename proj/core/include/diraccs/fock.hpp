#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "diraccs/common.hpp"
#include "diraccs/model.hpp"

namespace diraccs::fock {

struct ScalarIndex {
  int m = 0;
  int n = 0;

  int mz() const noexcept { return n - m; }
  friend bool operator==(const ScalarIndex&, const ScalarIndex&) = default;
};

cplx psi_scalar(const ModelParams& p, ScalarIndex idx, PlanePoint pt);
cplx psi_scalar(const ModelParams& p, ScalarIndex idx, const EllipticPoint& ep);

// psi along the diagonal n - m = d. Entry k is the state whose smaller label is k,
// i.e. (k, k+d) for d >= 0 and (k-d, k) for d < 0.
std::vector<cplx> psi_diagonal(const ModelParams& p, int d, int k_max, const EllipticPoint& ep);

// table(m, n) = psi_{m,n} for 0 <= m, n <= max_index.
Eigen::MatrixXcd scalar_table(const ModelParams& p, const EllipticPoint& ep, int max_index);

enum class Ladder { a_minus, a_plus, b_minus, b_plus };

struct LadderResult {
  double coefficient = 0.0;
  std::optional<ScalarIndex> index;  // empty when annihilated

  bool annihilated() const noexcept { return !index.has_value(); }
};

LadderResult ladder_action(Ladder which, ScalarIndex idx);

enum class ScalarOperator { a_minus, a_plus, b_minus, b_plus, n, m, lz };

// Operator on the basis {(m,n): 0 <= m,n <= cutoff}, index m*(cutoff+1) + n.
class TruncatedOperator {
 public:
  TruncatedOperator(int cutoff, Eigen::MatrixXcd entries);

  int cutoff() const noexcept { return cutoff_; }
  int dimension() const noexcept { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXcd& entries() const noexcept { return entries_; }

  int index_of(ScalarIndex idx) const;
  ScalarIndex label_of(int index) const;

 private:
  int cutoff_;
  Eigen::MatrixXcd entries_;
};

TruncatedOperator build_truncated(ScalarOperator which, int cutoff);

// Basis indices with m, n <= cutoff - 1.
std::vector<int> interior_indices(int cutoff);

// Products of the (very sparse) ladder matrices without paying for dense GEMM.
Eigen::MatrixXcd sparse_product(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);
Eigen::MatrixXcd commutator(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

// Largest |diff(i,j)| over i, j in idx.
RelationCheck block_deviation(std::string name, const Eigen::MatrixXcd& diff,
                              const std::vector<int>& idx);

// Heisenberg-Weyl relations of A, B and their commutators with L_z.
RelationReport check_scalar_algebra(int cutoff);

// H+ = A+A- = B+B- + L_z, H- = H+ + 1, and the squared Dirac operator.
RelationReport check_factorization(const ModelParams& p, int cutoff);

}  // namespace diraccs::fock

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "diraccs/coherent.hpp"
#include "diraccs/model.hpp"
#include "diraccs/spinors.hpp"

namespace diraccs::verify {

using special::SeriesControl;
using spinors::SpinorLabel;

double overlap_2d(cplx alpha1, cplx beta1, cplx alpha2, cplx beta2);

// m_z >= 1 uses the 0F1 ratio; m_z <= 0 the (2 0F1 - 1) form.
double overlap_su11(cplx tau1, cplx tau2, int mz, const SeriesControl& ctl = {});

// |<a|b>| from truncated coefficient vectors.
double overlap_2d_bruteforce(cplx alpha1, cplx beta1, cplx alpha2, cplx beta2, int n_max, int m_max);
double overlap_su11_bruteforce(cplx tau1, cplx tau2, int mz, int n_max, const SeriesControl& ctl = {});

enum class Weight { f, g };

// f needs m_z >= 0, g needs m_z <= 0.
double measure_weight(Weight kind, double t_abs, int mz);
double log_measure_weight(Weight kind, double t_abs, int mz);

struct QuadratureConfig {
  double rel_tol = 1e-12;
  int max_levels = 12;
  int laguerre_nodes = 256;
};

struct MomentReport {
  Weight kind = Weight::f;
  int mz = 0;
  std::vector<int> s;
  std::vector<double> target;
  std::vector<double> value;
  std::vector<double> rel_error;

  double max_rel_error() const;
};

// kind f: int t^{s-m_z} f dt = G(s+1)G(s-m_z+1)/G(m_z+1)
// kind g: int t^s g dt       = G(s+1)G(s-m_z+1)/G(1-m_z)
MomentReport moment_check(Weight kind, int mz, const std::vector<int>& s_list,
                          const QuadratureConfig& quad = {});

enum class CompletenessKind { two_d, su11_positive, su11_negative };

struct IdentityReport {
  CompletenessKind kind = CompletenessKind::two_d;
  std::vector<SpinorLabel> block;
  Eigen::MatrixXcd reconstructed;
  double max_deviation = 0.0;      // max |R - 1|
  double max_off_diagonal = 0.0;
  double quadrature_change = 0.0;  // max |R - R_coarse|, R_coarse at half resolution
};

// Labels (m, n) with 0 <= m, n <= max_index.
std::vector<SpinorLabel> square_block(int max_index);

// Phi_{m_z,n} labels for max(0, m_z) <= n <= n_max.
std::vector<SpinorLabel> mz_block(int mz, int n_max);

IdentityReport resolution_of_identity(CompletenessKind kind, const std::vector<SpinorLabel>& block,
                                      const QuadratureConfig& quad = {});

// <psi_{m,n} | psi_{m',n'}> under dx dy for all m, n <= max_index (row/col m*(max_index+1)+n).
Eigen::MatrixXcd scalar_gram(const ModelParams& p, int max_index, int radial_nodes = 64);

}  // namespace diraccs::verify

#pragma once

#include "diraccs/common.hpp"
#include "diraccs/matrix_ops.hpp"
#include "diraccs/model.hpp"
#include "diraccs/special_fn.hpp"
#include "diraccs/spinors.hpp"

namespace diraccs::coherent {

using matrix_ops::Coefficients;
using special::SeriesControl;
using spinors::SpinorValue;

// Joint eigenstates of A- and B- exist only for eta in {0, pi}; other values
// are rejected.
struct CS2DSpec {
  cplx alpha;
  cplx beta;
  double delta = 0.0;
  double eta = 0.0;

  void validate() const;
  cplx alpha_tilde() const;  // alpha e^{-i delta}
  cplx beta_tilde() const;   // beta e^{-i eta}
};

// m_z >= 1 uses the upper-sector series; m_z <= 0 the lower-sector one with
// the separate Phi_{m_z,0} term.
struct SU11Spec {
  cplx tau;
  int mz = 0;
  double delta = 0.0;

  void validate() const;
  cplx tau_tilde() const;  // tau e^{-i delta}
};

// unit_area: integrates to 1 under dx dy. paper_literal: the printed closed
// forms, normalized under d^2 z.
enum class Normalization { unit_area, paper_literal };

int series_cutoff(double abs_eigenvalue);

SpinorValue cs2d_amplitude(const ModelParams& p, const CS2DSpec& s, PlanePoint pt,
                           const SeriesControl& ctl = {},
                           Normalization norm = Normalization::unit_area);

Coefficients cs2d_coefficients(const CS2DSpec& s, int n_max, int m_max);

// ln |c_{m,n}| for the 2D-CS with |alpha|^2 = a2 and |beta|^2 = b2.
double cs2d_log_abs_coefficient(double a2, double b2, int m, int n);

// Weight of the fixed-n state Psi^n_beta in the 2D-CS.
cplx cs2d_level_weight(const CS2DSpec& s, int n);

SpinorValue fixed_n_cs(const ModelParams& p, cplx beta, int n, PlanePoint pt,
                       Normalization norm = Normalization::unit_area);

SpinorValue su11_amplitude(const ModelParams& p, const SU11Spec& s, PlanePoint pt,
                           const SeriesControl& ctl = {});

// Coefficients over Phi_{m_z,n} for max(0, m_z) <= n <= n_max.
Coefficients su11_coefficients(const SU11Spec& s, int n_max, const SeriesControl& ctl = {});

// ln |c_n| for the su(1,1)-CS with |tau|^2 = t2.
double su11_log_abs_coefficient(double t2, int mz, int n, const SeriesControl& ctl = {});

// ln of the su(1,1) normalization: 0F1(;m_z+1;t2) or 2 0F1(;1-m_z;t2) - 1.
double su11_log_norm(double t2, int mz, const SeriesControl& ctl = {});

// Sum over labels of c * Psi_{m,n}(pt).
SpinorValue expand(const ModelParams& p, const Coefficients& coeffs, PlanePoint pt);

}  // namespace diraccs::coherent

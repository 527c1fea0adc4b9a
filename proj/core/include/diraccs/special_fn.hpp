#pragma once

#include <vector>

#include "diraccs/common.hpp"

namespace diraccs::special {

struct SeriesControl {
  double rel_tol = 1e-14;
  int max_terms = 10'000;

  void validate() const;
};

// L_n^k(x) by the three-term recurrence in n.
double laguerre_assoc(int n, int k, double x);

// L_0^k(x), ..., L_{n_max}^k(x).
std::vector<double> laguerre_sequence(int n_max, int k, double x);

double log_gamma(double x);
double log_factorial(int n);

// ln (a)_k for a > 0.
double pochhammer_log(double a, int k);

// 0F1(;b;x) for x >= 0.
double hyp0f1(double b, double x, const SeriesControl& ctl = {});

// Same series with a complex argument; used by the su(1,1) overlap kernel.
cplx hyp0f1(double b, cplx x, const SeriesControl& ctl = {});

// ln 0F1(;b;x), safe for arguments where the value itself overflows.
double log_hyp0f1(double b, double x, const SeriesControl& ctl = {});

// K_order(x); negative orders fold onto |order|.
double bessel_k(int order, double x);

// e^x K_order(x).
double bessel_k_scaled(int order, double x);

// ln(2 e^s - 1) for s >= 0.
double log_two_exp_minus_one(double s);

}  // namespace diraccs::special

#include "diraccs/special_fn.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace diraccs::special {

namespace {

constexpr double euler_gamma = 0.57721566490153286061;

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw DomainError(std::string(what) + ": argument must be finite");
}

const std::array<double, 257>& log_factorial_table() {
  static const auto table = [] {
    std::array<double, 257> t{};
    for (std::size_t i = 1; i < t.size(); ++i) t[i] = t[i - 1] + std::log(static_cast<double>(i));
    return t;
  }();
  return table;
}

// K_0 and K_1 for 0 < x <= 2 from the ascending series.
void bessel_k01_series(double x, double& k0, double& k1) {
  const double q = 0.25 * x * x;
  const double lx = std::log(0.5 * x);
  double term0 = 1.0;  // q^k/(k!)^2
  double term1 = 1.0;  // q^k/(k!(k+1)!)
  double i0 = 0.0, i1 = 0.0, s0 = 0.0, s1 = 0.0;
  double harmonic = 0.0;
  for (int k = 0; k < 100; ++k) {
    if (k > 0) {
      harmonic += 1.0 / k;
      term0 *= q / (static_cast<double>(k) * k);
      term1 *= q / (static_cast<double>(k) * (k + 1));
    }
    const double psi1 = -euler_gamma + harmonic;
    const double psi2 = psi1 + 1.0 / (k + 1);
    i0 += term0;
    i1 += term1;
    s0 += psi1 * term0;
    s1 += (psi1 + psi2) * term1;
    if (term0 < 1e-18 * i0 && term1 < 1e-18 * i1) break;
  }
  i1 *= 0.5 * x;
  k0 = -lx * i0 + s0;
  k1 = 1.0 / x + lx * i1 - 0.25 * x * s1;
}

// e^x K_0 and e^x K_1 for x > 2 by Steed's continued fraction (Temme's CF2).
void bessel_k01_scaled_cf(double x, double& k0, double& k1) {
  constexpr double eps = 1e-16;
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d, delh = d;
  double q1 = 0.0, q2 = 1.0;
  const double a1 = 0.25;
  double q = a1, c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  for (int i = 2; i <= 100'000; ++i) {
    a -= 2 * (i - 1);
    c = -a * c / i;
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < eps) break;
  }
  h *= a1;
  k0 = std::sqrt(pi / (2.0 * x)) / s;
  k1 = k0 * (x + 0.5 - h) / x;
}

double bessel_k_impl(int order, double x, bool scaled) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("bessel_k: x must be positive and finite");
  order = std::abs(order);
  double k0, k1;
  if (x <= 2.0) {
    bessel_k01_series(x, k0, k1);
    if (scaled) {
      const double e = std::exp(x);
      k0 *= e;
      k1 *= e;
    }
  } else {
    bessel_k01_scaled_cf(x, k0, k1);
    if (!scaled) {
      const double e = std::exp(-x);
      k0 *= e;
      k1 *= e;
    }
  }
  if (order == 0) return k0;
  for (int j = 1; j < order; ++j) {
    const double k2 = k0 + (2.0 * j / x) * k1;
    k0 = k1;
    k1 = k2;
  }
  return k1;
}

}  // namespace

void SeriesControl::validate() const {
  if (!(rel_tol > 0.0)) throw DomainError("SeriesControl: rel_tol must be positive");
  if (max_terms < 1) throw DomainError("SeriesControl: max_terms must be at least 1");
}

double laguerre_assoc(int n, int k, double x) {
  require_finite(x, "laguerre_assoc");
  if (n < 0 || k < 0) throw DomainError("laguerre_assoc: n and k must be nonnegative");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + k - x;
  for (int j = 1; j < n; ++j) {
    const double next = ((2.0 * j + 1.0 + k - x) * cur - (j + k) * prev) / (j + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<double> laguerre_sequence(int n_max, int k, double x) {
  require_finite(x, "laguerre_sequence");
  if (n_max < 0 || k < 0) throw DomainError("laguerre_sequence: n_max and k must be nonnegative");
  std::vector<double> out(static_cast<std::size_t>(n_max) + 1);
  out[0] = 1.0;
  if (n_max >= 1) out[1] = 1.0 + k - x;
  for (int j = 1; j < n_max; ++j)
    out[j + 1] = ((2.0 * j + 1.0 + k - x) * out[j] - (j + k) * out[j - 1]) / (j + 1.0);
  return out;
}

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("log_gamma: x must be positive and finite");
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

double log_factorial(int n) {
  if (n < 0) throw DomainError("log_factorial: n must be nonnegative");
  const auto& t = log_factorial_table();
  if (static_cast<std::size_t>(n) < t.size()) return t[n];
  return log_gamma(n + 1.0);
}

double pochhammer_log(double a, int k) {
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("pochhammer_log: a must be positive");
  if (k < 0) throw DomainError("pochhammer_log: k must be nonnegative");
  if (k <= 64) {
    double s = 0.0;
    for (int j = 0; j < k; ++j) s += std::log(a + j);
    return s;
  }
  return log_gamma(a + k) - log_gamma(a);
}

double hyp0f1(double b, double x, const SeriesControl& ctl) {
  ctl.validate();
  if (!(b > 0.0)) throw DomainError("hyp0f1: b must be positive");
  if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("hyp0f1: x must be nonnegative and finite");
  double term = 1.0;
  double sum = 1.0;
  for (int n = 0; n + 1 < ctl.max_terms; ++n) {
    term *= x / ((b + n) * (n + 1.0));
    if (term < ctl.rel_tol * sum) return sum;
    sum += term;
  }
  term *= x / ((b + ctl.max_terms - 1) * static_cast<double>(ctl.max_terms));
  if (term < ctl.rel_tol * sum) return sum;
  throw ConvergenceError("hyp0f1: series did not converge within max_terms", {cplx(sum)},
                         ctl.max_terms);
}

cplx hyp0f1(double b, cplx x, const SeriesControl& ctl) {
  ctl.validate();
  if (!(b > 0.0)) throw DomainError("hyp0f1: b must be positive");
  if (!std::isfinite(x.real()) || !std::isfinite(x.imag()))
    throw DomainError("hyp0f1: x must be finite");
  cplx term = 1.0;
  cplx sum = 1.0;
  double abs_sum = 1.0;
  for (int n = 0; n < ctl.max_terms; ++n) {
    term *= x / ((b + n) * (n + 1.0));
    const double t = std::abs(term);
    if (t < ctl.rel_tol * abs_sum) return sum;
    if (n + 1 == ctl.max_terms) break;
    sum += term;
    abs_sum += t;
  }
  throw ConvergenceError("hyp0f1: series did not converge within max_terms", {sum}, ctl.max_terms);
}

double log_hyp0f1(double b, double x, const SeriesControl& ctl) {
  ctl.validate();
  if (!(b > 0.0)) throw DomainError("log_hyp0f1: b must be positive");
  if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("log_hyp0f1: x must be nonnegative and finite");
  if (x == 0.0) return 0.0;
  // Terms peak near n ~ sqrt(x); scale everything by the largest log-term.
  const double lx = std::log(x);
  auto log_term = [&](int n) { return n * lx - pochhammer_log(b, n) - log_factorial(n); };
  int n_peak = static_cast<int>(std::max(0.0, std::floor(0.5 * (-b + std::sqrt(b * b + 4.0 * x)))));
  const double ref = log_term(n_peak);
  double sum = 1.0;
  double term = 1.0;
  for (int n = n_peak; n > 0; --n) {
    term *= (b + n - 1.0) * n / x;
    sum += term;
    if (term < ctl.rel_tol * sum) break;
  }
  term = 1.0;
  for (int n = n_peak, used = 0; used < ctl.max_terms; ++n, ++used) {
    term *= x / ((b + n) * (n + 1.0));
    sum += term;
    if (term < ctl.rel_tol * sum) return ref + std::log(sum);
  }
  throw ConvergenceError("log_hyp0f1: series did not converge within max_terms",
                         {cplx(ref + std::log(sum))}, ctl.max_terms);
}

double bessel_k(int order, double x) { return bessel_k_impl(order, x, false); }

double bessel_k_scaled(int order, double x) { return bessel_k_impl(order, x, true); }

double log_two_exp_minus_one(double s) {
  if (!(s >= 0.0)) throw DomainError("log_two_exp_minus_one: s must be nonnegative");
  if (s < 1.0) return std::log1p(2.0 * std::expm1(s));
  return s + std::log(2.0 - std::exp(-s));
}

}  // namespace diraccs::special

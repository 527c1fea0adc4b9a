#include "diraccs/coherent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "diraccs/fock.hpp"

namespace diraccs::coherent {

namespace {

using special::log_factorial;

const cplx I(0.0, 1.0);

double log_or_minus_inf(double v) {
  return v > 0.0 ? std::log(v) : -std::numeric_limits<double>::infinity();
}

// ln|(z-beta)^k| with 0^0 = 1.
double log_power(double abs_w, int k) { return k == 0 ? 0.0 : k * log_or_minus_inf(abs_w); }

// ln of the Gaussian envelope exp([b - z/2] z* - |b|^2/2) and its phase.
void envelope(cplx b, cplx z, double& log_mag, double& phase) {
  const cplx e = (b - 0.5 * z) * std::conj(z) - 0.5 * std::norm(b);
  log_mag = e.real();
  phase = e.imag();
}

double jacobian_log(const ModelParams& p, Normalization norm) {
  return norm == Normalization::unit_area ? std::log(0.5 * std::sqrt(p.omega_b())) : 0.0;
}

// Number of terms k = 0..K needed for |tau|^k / sqrt(k!(k+a)!) to drop below
// rel_tol relative to its largest value.
int su11_terms(double abs_tau, int a, const SeriesControl& ctl) {
  if (abs_tau == 0.0) return 0;
  const double lt = std::log(abs_tau);
  const double log_tol = std::log(ctl.rel_tol);
  double peak = 0.0;
  for (int k = 0; k < ctl.max_terms; ++k) {
    const double lc = k * lt - 0.5 * (log_factorial(k) + log_factorial(k + a));
    peak = std::max(peak, lc);
    const double ratio = abs_tau / std::sqrt((k + 1.0) * (k + 1.0 + a));
    if (ratio <= 0.5 && lc - peak < log_tol) return k;
  }
  return ctl.max_terms;
}

}  // namespace

void CS2DSpec::validate() const {
  if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag()) || !std::isfinite(beta.real()) ||
      !std::isfinite(beta.imag()))
    throw DomainError("CS2DSpec: alpha and beta must be finite");
  if (!std::isfinite(delta) || !std::isfinite(eta)) throw DomainError("CS2DSpec: phases must be finite");
  if (std::abs(std::sin(eta)) > 1e-12)
    throw DomainError("CS2DSpec: A- and B- have no common eigenstates unless eta is 0 or pi");
}

cplx CS2DSpec::alpha_tilde() const { return alpha * std::polar(1.0, -delta); }

cplx CS2DSpec::beta_tilde() const { return std::cos(eta) > 0.0 ? beta : -beta; }

void SU11Spec::validate() const {
  if (!std::isfinite(tau.real()) || !std::isfinite(tau.imag())) throw DomainError("SU11Spec: tau must be finite");
  if (!std::isfinite(delta)) throw DomainError("SU11Spec: delta must be finite");
}

cplx SU11Spec::tau_tilde() const { return tau * std::polar(1.0, -delta); }

int series_cutoff(double abs_eigenvalue) {
  const double a2 = abs_eigenvalue * abs_eigenvalue;
  return static_cast<int>(std::ceil(a2 + 12.0 * std::sqrt(a2 + 1.0) + 20.0));
}

SpinorValue cs2d_amplitude(const ModelParams& p, const CS2DSpec& s, PlanePoint pt,
                           const SeriesControl& ctl, Normalization norm) {
  s.validate();
  ctl.validate();
  const cplx a = s.alpha_tilde();
  const cplx b = s.beta_tilde();
  const cplx z = to_elliptic(p, pt).z;
  const cplx w = z - b;
  const cplx aw = a * w;
  const double r = std::abs(aw);

  cplx lower_term = 1.0;
  cplx lower = 1.0, upper = 0.0;
  double abs_sum = 1.0;
  int n = 0;
  bool converged = false;
  while (n < ctl.max_terms) {
    // Tail after term n: lower terms shrink by r/(k+1), upper terms follow them.
    const double q = r / (n + 2.0);
    if (q < 1.0) {
      const double next_lower = std::abs(lower_term) * r / (n + 1.0);
      const double next_upper = std::abs(a) * std::abs(lower_term) / std::sqrt(n + 1.0);
      const double tail = (next_lower + next_upper) / (1.0 - q);
      if (tail <= ctl.rel_tol * abs_sum) {
        converged = true;
        break;
      }
    }
    ++n;
    const cplx up = a * lower_term / std::sqrt(double(n));
    lower_term *= aw / double(n);
    upper += up;
    lower += lower_term;
    abs_sum += std::abs(up) + std::abs(lower_term);
  }

  double log_mag, phase;
  envelope(b, z, log_mag, phase);
  log_mag += -0.5 * (std::log(pi) + special::log_two_exp_minus_one(std::norm(a))) + jacobian_log(p, norm);
  const cplx pref = std::polar(std::exp(log_mag), phase);
  SpinorValue out{pref * upper, pref * I * lower};
  if (!converged)
    throw ConvergenceError("cs2d_amplitude: series did not converge within max_terms",
                           {out.upper, out.lower}, n);
  return out;
}

double cs2d_log_abs_coefficient(double a2, double b2, int m, int n) {
  if (m < 0 || n < 0) throw IndexError("cs2d_log_abs_coefficient: labels must be nonnegative");
  double lc = -0.5 * b2 + 0.5 * log_power(b2, m) - 0.5 * log_factorial(m) -
              0.5 * special::log_two_exp_minus_one(a2);
  if (n >= 1) lc += 0.5 * std::log(2.0) + 0.5 * log_power(a2, n) - 0.5 * log_factorial(n);
  return lc;
}

Coefficients cs2d_coefficients(const CS2DSpec& s, int n_max, int m_max) {
  s.validate();
  if (n_max < 0 || m_max < 0) throw DomainError("cs2d_coefficients: cutoffs must be nonnegative");
  const cplx a = s.alpha_tilde(), b = s.beta_tilde();
  const double a2 = std::norm(a), b2 = std::norm(b);
  const double arg_a = std::arg(a), arg_b = std::arg(b);
  Coefficients c;
  for (int m = 0; m <= m_max; ++m) {
    if (b2 == 0.0 && m > 0) break;
    for (int n = 0; n <= n_max; ++n) {
      if (a2 == 0.0 && n > 0) break;
      const double lc = cs2d_log_abs_coefficient(a2, b2, m, n);
      c[{m, n}] = std::polar(std::exp(lc), m * arg_b + n * arg_a);
    }
  }
  return c;
}

cplx cs2d_level_weight(const CS2DSpec& s, int n) {
  s.validate();
  if (n < 0) throw IndexError("cs2d_level_weight: n must be nonnegative");
  const cplx a = s.alpha_tilde();
  const double a2 = std::norm(a);
  if (a2 == 0.0 && n > 0) return 0.0;
  double lw = -0.5 * special::log_two_exp_minus_one(a2);
  if (n >= 1) lw += 0.5 * std::log(2.0) + 0.5 * n * std::log(a2) - 0.5 * log_factorial(n);
  return std::polar(std::exp(lw), n * std::arg(a));
}

SpinorValue fixed_n_cs(const ModelParams& p, cplx beta, int n, PlanePoint pt, Normalization norm) {
  if (n < 0) throw IndexError("fixed_n_cs: n must be nonnegative");
  const cplx z = to_elliptic(p, pt).z;
  const cplx w = z - beta;
  const double abs_w = std::abs(w), arg_w = std::arg(w);
  double log_mag, phase;
  envelope(beta, z, log_mag, phase);
  log_mag += -0.5 * ((n > 0 ? std::log(2.0) : 0.0) + std::log(pi) + log_factorial(n)) +
             jacobian_log(p, norm);
  const cplx lower = I * std::polar(std::exp(log_mag + log_power(abs_w, n)), phase + n * arg_w);
  if (n == 0) return {0.0, lower};
  const cplx upper = std::sqrt(double(n)) *
                     std::polar(std::exp(log_mag + log_power(abs_w, n - 1)), phase + (n - 1) * arg_w);
  return {upper, lower};
}

double su11_log_norm(double t2, int mz, const SeriesControl& ctl) {
  if (mz >= 1) return special::log_hyp0f1(mz + 1.0, t2, ctl);
  const double lf = special::log_hyp0f1(1.0 - mz, t2, ctl);
  return lf + std::log(2.0 - std::exp(-lf));
}

double su11_log_abs_coefficient(double t2, int mz, int n, const SeriesControl& ctl) {
  const double ln = su11_log_norm(t2, mz, ctl);
  if (mz >= 1) {
    if (n < mz) throw IndexError("su11 coefficient: n must be at least m_z");
    const int k = n - mz;
    return 0.5 * log_factorial(mz) + 0.5 * log_power(t2, k) - 0.5 * (log_factorial(n) + log_factorial(k)) -
           0.5 * ln;
  }
  if (n < 0) throw IndexError("su11 coefficient: n must be nonnegative");
  if (n == 0) return -0.5 * ln;
  const int mu = -mz;
  return 0.5 * (std::log(2.0) + log_factorial(mu)) + 0.5 * log_power(t2, n) -
         0.5 * (log_factorial(n) + log_factorial(n + mu)) - 0.5 * ln;
}

Coefficients su11_coefficients(const SU11Spec& s, int n_max, const SeriesControl& ctl) {
  s.validate();
  const cplx t = s.tau_tilde();
  const double t2 = std::norm(t), arg_t = std::arg(t);
  const int n_min = std::max(0, s.mz);
  Coefficients c;
  for (int n = n_min; n <= n_max; ++n) {
    const int power = s.mz >= 1 ? n - s.mz : n;
    if (t2 == 0.0 && power > 0) break;
    const double lc = su11_log_abs_coefficient(t2, s.mz, n, ctl);
    c[spinors::SpinorLabel::from_mz(s.mz, n)] = std::polar(std::exp(lc), power * arg_t);
  }
  return c;
}

SpinorValue su11_amplitude(const ModelParams& p, const SU11Spec& s, PlanePoint pt, const SeriesControl& ctl) {
  s.validate();
  ctl.validate();
  const cplx t = s.tau_tilde();
  const double t2 = std::norm(t);
  const int a = std::abs(s.mz);
  const int needed = su11_terms(std::abs(t), a, ctl);
  const int k_max = std::min(needed, ctl.max_terms - 1);
  const auto ep = to_elliptic(p, pt);
  const double r = 1.0 / std::sqrt(2.0);
  const double ln = su11_log_norm(t2, s.mz, ctl);

  const double log_t = std::log(std::abs(t));
  const double arg_t = std::arg(t);
  // tau~^k times a log-space magnitude, without forming tau~^k itself.
  auto coeff = [&](double log_mag, int k) {
    if (k == 0) return cplx(std::exp(log_mag));
    return std::polar(std::exp(log_mag + k * log_t), k * arg_t);
  };

  cplx upper = 0.0, lower = 0.0;
  if (s.mz >= 1) {
    // Phi_{m_z, m_z+k} = (psi_{k, k+m_z-1}, i psi_{k, k+m_z}) / sqrt(2)
    const auto up = fock::psi_diagonal(p, s.mz - 1, k_max, ep);
    const auto lo = fock::psi_diagonal(p, s.mz, k_max, ep);
    const double base = 0.5 * log_factorial(s.mz) - 0.5 * ln;
    for (int k = 0; k <= k_max; ++k) {
      const cplx c = coeff(base - 0.5 * (log_factorial(k + s.mz) + log_factorial(k)), k);
      upper += c * r * up[k];
      lower += c * r * I * lo[k];
    }
  } else {
    // Phi_{m_z, n} = Psi_{n+mu, n}; the n = 0 member has no upper component.
    const int mu = a;
    const auto lo = fock::psi_diagonal(p, -mu, k_max, ep);
    const auto up = fock::psi_diagonal(p, -mu - 1, std::max(k_max - 1, 0), ep);
    const double c0 = std::exp(-0.5 * ln);
    lower += c0 * I * lo[0];
    const double base = 0.5 * (std::log(2.0) + log_factorial(mu)) - 0.5 * ln;
    for (int n = 1; n <= k_max; ++n) {
      const cplx c = coeff(base - 0.5 * (log_factorial(n) + log_factorial(n + mu)), n);
      upper += c * r * up[n - 1];
      lower += c * r * I * lo[n];
    }
  }
  SpinorValue out{upper, lower};
  if (needed >= ctl.max_terms)
    throw ConvergenceError("su11_amplitude: coefficients did not decay within max_terms",
                           {out.upper, out.lower}, ctl.max_terms);
  return out;
}

SpinorValue expand(const ModelParams& p, const Coefficients& coeffs, PlanePoint pt) {
  int max_index = 0;
  for (const auto& [label, value] : coeffs) {
    if (label.m < 0 || label.n < 0) throw IndexError("expand: labels must be nonnegative");
    max_index = std::max({max_index, label.m, label.n});
  }
  const auto table = fock::scalar_table(p, to_elliptic(p, pt), max_index);
  const double r = 1.0 / std::sqrt(2.0);
  SpinorValue out{0.0, 0.0};
  for (const auto& [label, value] : coeffs) {
    if (label.n == 0) {
      out.lower += value * I * table(label.m, 0);
    } else {
      out.upper += value * r * table(label.m, label.n - 1);
      out.lower += value * r * I * table(label.m, label.n);
    }
  }
  return out;
}

}  // namespace diraccs::coherent

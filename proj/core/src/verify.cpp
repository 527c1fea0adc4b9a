#include "diraccs/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "diraccs/fock.hpp"
#include "diraccs/quadrature.hpp"

namespace diraccs::verify {

namespace {

using special::log_factorial;
using special::log_gamma;
using special::log_two_exp_minus_one;

// ln|2 e^w - 1|
double log_abs_two_exp_minus_one(cplx w) { return w.real() + std::log(std::abs(2.0 - std::exp(-w))); }

void check_kind(Weight kind, int mz) {
  if (kind == Weight::f && mz < 0) throw DomainError("measure weight f needs m_z >= 0");
  if (kind == Weight::g && mz > 0) throw DomainError("measure weight g needs m_z <= 0");
}

// Phase index carried by a coefficient: the power of the eigenvalue.
struct Phases {
  int first = 0;   // beta power (2D) or tau power (su11)
  int second = 0;  // alpha power (2D), unused for su11
};

Phases phases_of(CompletenessKind kind, const SpinorLabel& l) {
  switch (kind) {
    case CompletenessKind::two_d: return {l.m, l.n};
    case CompletenessKind::su11_positive: return {l.m, 0};  // n - m_z = m
    case CompletenessKind::su11_negative: return {l.n, 0};
  }
  return {};
}

// Trapezoid sum over [0, 2pi) of e^{i k chi}; 2pi or 0 when no aliasing.
cplx angular_factor(int k, int points) {
  cplx s = 0.0;
  for (int j = 0; j < points; ++j) s += std::polar(1.0, k * 2.0 * pi * j / points);
  return s * (2.0 * pi / points);
}

}  // namespace

double overlap_2d(cplx alpha1, cplx beta1, cplx alpha2, cplx beta2) {
  const double lg = -0.5 * (std::norm(beta1) + std::norm(beta2)) + (std::conj(beta1) * beta2).real() +
                    log_abs_two_exp_minus_one(std::conj(alpha1) * alpha2) -
                    0.5 * (log_two_exp_minus_one(std::norm(alpha1)) + log_two_exp_minus_one(std::norm(alpha2)));
  return std::exp(lg);
}

double overlap_su11(cplx tau1, cplx tau2, int mz, const SeriesControl& ctl) {
  const cplx x = std::conj(tau1) * tau2;
  const double n1 = coherent::su11_log_norm(std::norm(tau1), mz, ctl);
  const double n2 = coherent::su11_log_norm(std::norm(tau2), mz, ctl);
  if (mz >= 1) return std::abs(special::hyp0f1(mz + 1.0, x, ctl)) * std::exp(-0.5 * (n1 + n2));
  return std::abs(2.0 * special::hyp0f1(1.0 - mz, x, ctl) - 1.0) * std::exp(-0.5 * (n1 + n2));
}

double overlap_2d_bruteforce(cplx alpha1, cplx beta1, cplx alpha2, cplx beta2, int n_max, int m_max) {
  const auto c1 = coherent::cs2d_coefficients({alpha1, beta1}, n_max, m_max);
  const auto c2 = coherent::cs2d_coefficients({alpha2, beta2}, n_max, m_max);
  cplx s = 0.0;
  for (const auto& [label, v] : c2) {
    const auto it = c1.find(label);
    if (it != c1.end()) s += std::conj(it->second) * v;
  }
  return std::abs(s);
}

double overlap_su11_bruteforce(cplx tau1, cplx tau2, int mz, int n_max, const SeriesControl& ctl) {
  const auto c1 = coherent::su11_coefficients({tau1, mz}, n_max, ctl);
  const auto c2 = coherent::su11_coefficients({tau2, mz}, n_max, ctl);
  cplx s = 0.0;
  for (const auto& [label, v] : c2) {
    const auto it = c1.find(label);
    if (it != c1.end()) s += std::conj(it->second) * v;
  }
  return std::abs(s);
}

double log_measure_weight(Weight kind, double t_abs, int mz) {
  check_kind(kind, mz);
  if (!(t_abs > 0.0) || !std::isfinite(t_abs)) throw DomainError("measure weight: |tau| must be positive");
  const int a = std::abs(mz);
  const double u = 2.0 * t_abs;
  return std::log(2.0) + a * std::log(t_abs) + std::log(special::bessel_k_scaled(a, u)) - u - log_factorial(a);
}

double measure_weight(Weight kind, double t_abs, int mz) { return std::exp(log_measure_weight(kind, t_abs, mz)); }

double MomentReport::max_rel_error() const {
  double e = 0.0;
  for (double v : rel_error) e = std::max(e, v);
  return e;
}

MomentReport moment_check(Weight kind, int mz, const std::vector<int>& s_list, const QuadratureConfig& quad) {
  check_kind(kind, mz);
  MomentReport rep;
  rep.kind = kind;
  rep.mz = mz;
  const int a = std::abs(mz);
  for (int s : s_list) {
    const int power = kind == Weight::f ? s - mz : s;  // exponent of t
    if (s < 0 || s - mz < 0) throw DomainError("moment_check: s must keep both Gamma arguments positive");
    const double log_target = log_gamma(s + 1.0) + log_gamma(s - mz + 1.0) - log_factorial(a);
    // t = u^2/4: t^power w(u/2) (u/2) du
    const double peak = 2.0 * power + a + 0.5;
    const double u_max = 2.0 * peak + 80.0;
    auto integrand = [&](double u, double) {
      const double lt = 2.0 * std::log(0.5 * u);
      return std::exp(power * lt + log_measure_weight(kind, 0.5 * u, mz) + std::log(0.5 * u) - log_target);
    };
    const auto r = quad::tanh_sinh(integrand, 0.0, u_max, quad.rel_tol, quad.max_levels);
    if (!std::isfinite(r.value)) {
      std::ostringstream msg;
      msg << "moment_check: non-finite quadrature at s = " << s;
      throw ConvergenceError(msg.str(), {cplx(r.value)}, r.levels);
    }
    rep.s.push_back(s);
    rep.target.push_back(std::exp(log_target));
    rep.value.push_back(r.value * std::exp(log_target));
    rep.rel_error.push_back(std::abs(r.value - 1.0));
  }
  return rep;
}

std::vector<SpinorLabel> square_block(int max_index) {
  std::vector<SpinorLabel> out;
  for (int m = 0; m <= max_index; ++m)
    for (int n = 0; n <= max_index; ++n) out.push_back({m, n});
  return out;
}

std::vector<SpinorLabel> mz_block(int mz, int n_max) {
  std::vector<SpinorLabel> out;
  for (int n = std::max(0, mz); n <= n_max; ++n) out.push_back(SpinorLabel::from_mz(mz, n));
  return out;
}

IdentityReport resolution_of_identity(CompletenessKind kind, const std::vector<SpinorLabel>& block,
                                      const QuadratureConfig& quad) {
  if (block.empty()) throw DomainError("resolution_of_identity: empty block");
  const int dim = static_cast<int>(block.size());
  int mz = block.front().mz();
  int max_power = 0;
  for (const auto& l : block) {
    if (l.m < 0 || l.n < 0) throw IndexError("resolution_of_identity: labels must be nonnegative");
    if (kind != CompletenessKind::two_d && l.mz() != mz)
      throw DomainError("resolution_of_identity: su(1,1) blocks must share m_z");
    const auto ph = phases_of(kind, l);
    max_power = std::max({max_power, ph.first, ph.second});
  }
  if (kind == CompletenessKind::su11_positive && mz < 1)
    throw DomainError("resolution_of_identity: su11_positive needs m_z >= 1");
  if (kind == CompletenessKind::su11_negative && mz > 0)
    throw DomainError("resolution_of_identity: su11_negative needs m_z <= 0");

  const int angular_points = 2 * max_power + 3;
  Eigen::MatrixXcd fine = Eigen::MatrixXcd::Zero(dim, dim);
  Eigen::MatrixXcd coarse = Eigen::MatrixXcd::Zero(dim, dim);

  if (kind == CompletenessKind::two_d) {
    const auto rule = quad::gauss_laguerre(quad.laguerre_nodes);
    const auto rule_half = quad::gauss_laguerre(std::max(1, quad.laguerre_nodes / 2));
    // (2e^s - 1)/2 int int e^{-s} |c||c'| ds dt, Gauss-Laguerre in s = |alpha|^2 and t = |beta|^2.
    auto radial = [&](const quad::Rule& r, const SpinorLabel& a, const SpinorLabel& b) {
      double sum = 0.0;
      for (std::size_t i = 0; i < r.nodes.size(); ++i) {
        const double s = r.nodes[i];
        const double ls = log_two_exp_minus_one(s) - std::log(2.0);
        for (std::size_t j = 0; j < r.nodes.size(); ++j) {
          const double t = r.nodes[j];
          const double lc = coherent::cs2d_log_abs_coefficient(s, t, a.m, a.n) +
                            coherent::cs2d_log_abs_coefficient(s, t, b.m, b.n);
          sum += r.weights[i] * r.weights[j] * std::exp(ls + lc + t);
        }
      }
      return sum;
    };
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        const auto pi_ = phases_of(kind, block[i]);
        const auto pj = phases_of(kind, block[j]);
        const cplx ang = angular_factor(pi_.first - pj.first, angular_points) *
                         angular_factor(pi_.second - pj.second, angular_points) / (4.0 * pi * pi);
        if (std::abs(ang) < 1e-12) continue;
        fine(i, j) = ang * radial(rule, block[i], block[j]);
        coarse(i, j) = ang * radial(rule_half, block[i], block[j]);
      }
    }
    for (int i = 0; i < dim; ++i) {
      if (block[i].n == 0) {
        fine(i, i) += 0.5;
        coarse(i, i) += 0.5;
      }
    }
  } else {
    const bool positive = kind == CompletenessKind::su11_positive;
    const Weight w = positive ? Weight::f : Weight::g;
    const double u_max = 2.0 * (2.0 * max_power + std::abs(mz) + 0.5) + 80.0;
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        const int pi_ = phases_of(kind, block[i]).first;
        const int pj = phases_of(kind, block[j]).first;
        const cplx ang = angular_factor(pi_ - pj, angular_points) / (2.0 * pi);
        if (std::abs(ang) < 1e-12) continue;
        // E8: (F/pi) f r dr dtheta;  E16: ((2F-1)/(2pi)) g r dr dtheta.  r = u/2.
        const double log_pre = positive ? std::log(2.0) : 0.0;
        auto integrand = [&](double u, double) {
          const double r = 0.5 * u;
          const double t2 = r * r;
          const double ln = coherent::su11_log_norm(t2, mz);
          const double lc = coherent::su11_log_abs_coefficient(t2, mz, block[i].n) +
                            coherent::su11_log_abs_coefficient(t2, mz, block[j].n);
          return 0.5 * std::exp(log_pre + ln + log_measure_weight(w, r, mz) + std::log(r) + lc);
        };
        const auto res = quad::tanh_sinh(integrand, 0.0, u_max, quad.rel_tol, quad.max_levels);
        fine(i, j) = ang * res.value;
        coarse(i, j) = ang * res.previous;
      }
    }
    for (int i = 0; i < dim; ++i) {
      if (!positive && block[i].n == 0) {
        fine(i, i) += 0.5;
        coarse(i, i) += 0.5;
      }
    }
  }

  IdentityReport rep;
  rep.kind = kind;
  rep.block = block;
  rep.reconstructed = fine;
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      const cplx target = i == j ? 1.0 : 0.0;
      rep.max_deviation = std::max(rep.max_deviation, std::abs(fine(i, j) - target));
      if (i != j) rep.max_off_diagonal = std::max(rep.max_off_diagonal, std::abs(fine(i, j)));
      rep.quadrature_change = std::max(rep.quadrature_change, std::abs(fine(i, j) - coarse(i, j)));
    }
  }
  return rep;
}

Eigen::MatrixXcd scalar_gram(const ModelParams& p, int max_index, int radial_nodes) {
  if (max_index < 0) throw DomainError("scalar_gram: max_index must be nonnegative");
  const int side = max_index + 1;
  const int dim = side * side;
  const int angular_points = 4 * max_index + 3;
  const auto rule = quad::gauss_laguerre_unweighted(radial_nodes);
  Eigen::MatrixXcd gram = Eigen::MatrixXcd::Zero(dim, dim);
  // rho drho dtheta with x = xi^2 = w rho^2 / 4: rho drho = (2/w) dx.
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = rule.nodes[i];
    const double rho = 2.0 * std::sqrt(x / p.omega_b());
    const double w = rule.weights[i] * (2.0 / p.omega_b()) * (2.0 * pi / angular_points);
    for (int k = 0; k < angular_points; ++k) {
      const double theta = 2.0 * pi * k / angular_points;
      const auto ep = to_elliptic(p, from_elliptic(p, rho, theta));
      const auto table = fock::scalar_table(p, ep, max_index);
      Eigen::VectorXcd v(dim);
      for (int m = 0; m <= max_index; ++m)
        for (int n = 0; n <= max_index; ++n) v(m * side + n) = table(m, n);
      gram.noalias() += w * v.conjugate() * v.transpose();
    }
  }
  return gram;
}

}  // namespace diraccs::verify

#include "diraccs/observables.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <sstream>
#include <thread>

#include "diraccs/quadrature.hpp"

namespace diraccs::observables {

namespace {

using special::log_factorial;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// e^{-u} V(u) and e^{-u} V'(u), V(u) = sum_{n>=1} sqrt(n) u^{n-1}/n!.
void scaled_v(double u, double& v, double& dv) {
  auto lpow = [u](int k) {
    if (k == 0) return 0.0;
    return u > 0.0 ? k * std::log(u) : -std::numeric_limits<double>::infinity();
  };
  v = 0.0;
  dv = 0.0;
  for (int n = 1; n < 100'000; ++n) {
    const double base = -u - log_factorial(n);
    const double tv = std::sqrt(double(n)) * std::exp(base + lpow(n - 1));
    const double tdv = n >= 2 ? std::sqrt(double(n)) * (n - 1) * std::exp(base + lpow(n - 2)) : 0.0;
    v += tv;
    dv += tdv;
    if (n > u + 2 && tv < 1e-18 * v && tdv <= 1e-18 * dv) break;
  }
}

// Distance from beta~ to the radial maximum of the 2D-CS density in z units.
double cs2d_peak_distance(double abs_alpha) {
  if (abs_alpha == 0.0) return 0.0;
  const double a = abs_alpha;
  auto slope = [a](double t) {
    double v, dv;
    scaled_v(a * t, v, dv);
    return -2.0 * t + 2.0 * a * (a * a * v * dv + 1.0) / (a * a * v * v + 1.0);
  };
  double lo = 0.0, hi = a + 10.0;
  for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    (slope(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

template <class F>
double golden_max(F f, double lo, double hi, int iters = 200) {
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = hi - g * (hi - lo), d = lo + g * (hi - lo);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iters && hi - lo > 1e-14 * std::max(1.0, std::abs(hi)); ++i) {
    if (fc >= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - g * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + g * (hi - lo);
      fd = f(d);
    }
  }
  return 0.5 * (lo + hi);
}

bool series_tail_done(double term, double sum, double ratio, double rel_tol) {
  return ratio <= 0.5 && term < rel_tol * sum;
}

}  // namespace

void GridSpec::validate() const {
  if (!(x_max > x_min) || !(y_max > y_min)) throw DomainError("GridSpec: need x_max > x_min and y_max > y_min");
  if (nx < 2 || ny < 2) throw DomainError("GridSpec: need at least 2 nodes per axis");
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !std::isfinite(y_min) || !std::isfinite(y_max))
    throw DomainError("GridSpec: bounds must be finite");
}

SpinorValue amplitude(const ModelParams& p, const StateSpec& state, PlanePoint pt, const SeriesControl& ctl,
                      Normalization norm) {
  return std::visit(overloaded{
                        [&](const CS2DSpec& s) { return coherent::cs2d_amplitude(p, s, pt, ctl, norm); },
                        [&](const SU11Spec& s) { return coherent::su11_amplitude(p, s, pt, ctl); },
                    },
                    state);
}

double su11_density_series(const ModelParams& p, const SU11Spec& s, PlanePoint pt, const SeriesControl& ctl) {
  s.validate();
  ctl.validate();
  const auto ep = to_elliptic(p, pt);
  const double x = ep.xi * ep.xi;
  const cplx t = -s.tau_tilde();
  const double abs_t = std::abs(t);
  const double log_t = abs_t > 0.0 ? std::log(abs_t) : 0.0;
  const double arg_t = std::arg(t);
  const double ln = coherent::su11_log_norm(abs_t * abs_t, s.mz, ctl);
  auto power = [&](int k, double log_mag) {
    if (k == 0) return cplx(std::exp(log_mag));
    if (abs_t == 0.0) return cplx(0.0);
    return std::polar(std::exp(log_mag + k * log_t), k * arg_t);
  };

  // Sum sum_k c_k L_k^a(x) until two consecutive terms are negligible.
  auto laguerre_series = [&](int a, int k0, auto weight) {
    cplx sum = 0.0;
    double abs_sum = 0.0;
    int small = 0;
    int k_cap = ctl.max_terms;
    std::vector<double> lag = special::laguerre_sequence(std::min(k_cap, 64), a, x);
    for (int k = k0; k < k_cap; ++k) {
      if (k >= static_cast<int>(lag.size())) lag = special::laguerre_sequence(2 * k, a, x);
      const cplx term = weight(k) * lag[k];
      sum += term;
      abs_sum += std::abs(term);
      small = (k > 2.0 * abs_t + 2 && std::abs(term) <= ctl.rel_tol * abs_sum) ? small + 1 : 0;
      if (small >= 2) return sum;
    }
    throw ConvergenceError("su11_density_series: Laguerre series did not converge", {sum}, k_cap);
  };

  const double e = std::exp(-x);
  if (s.mz >= 1) {
    const int mz = s.mz;
    // (-tau~)^k L_k^{m_z-1} / sqrt((k+m_z)!(k+m_z-1)!) and (-tau~)^k L_k^{m_z} / (k+m_z)!
    const cplx su = laguerre_series(mz - 1, 0, [&](int k) {
      return power(k, -0.5 * (log_factorial(k + mz) + log_factorial(k + mz - 1)));
    });
    const cplx sl = laguerre_series(mz, 0, [&](int k) { return power(k, -log_factorial(k + mz)); });
    const double pre = p.omega_b() / (8.0 * pi) * std::exp(log_factorial(mz) - ln);
    const double xu = mz == 1 ? 1.0 : std::pow(x, mz - 1);
    return pre * e * (xu * std::norm(su) + xu * x * std::norm(sl));
  }
  const int mu = -s.mz;
  // sum_{n>=0} (-tau~)^n L_n^mu / (n+mu)!  and  sum_{n>=1} (-1)^{n-1} tau~^n L_{n-1}^{mu+1} / ((n+mu)! sqrt(n))
  const cplx sl = laguerre_series(mu, 0, [&](int n) { return power(n, -log_factorial(n + mu)); });
  const cplx su = laguerre_series(mu + 1, 0, [&](int k) {
    const int n = k + 1;
    return -power(n, -log_factorial(n + mu) - 0.5 * std::log(double(n)));
  });
  const double pre = p.omega_b() / (4.0 * pi) * std::exp(log_factorial(mu) - ln);
  const double xm = mu == 0 ? 1.0 : std::pow(x, mu);
  return pre * xm * e * (std::norm(sl) + x * std::norm(su));
}

FieldGrid density_grid(const ModelParams& p, const StateSpec& state, const GridSpec& g, const SeriesControl& ctl,
                       const DensityOptions& opt) {
  g.validate();
  ctl.validate();
  std::visit([](const auto& s) { s.validate(); }, state);
  FieldGrid fg{g, p, state, opt.normalization, {}, {}, 0, 0.0};
  const std::size_t total = static_cast<std::size_t>(g.nx) * g.ny;
  fg.density.resize(total);
  fg.spinor.resize(total);

  unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(g.ny));
  std::vector<std::exception_ptr> errors(threads);
  auto work = [&](unsigned id) {
    try {
      for (int iy = static_cast<int>(id); iy < g.ny; iy += static_cast<int>(threads)) {
        for (int ix = 0; ix < g.nx; ++ix) {
          const std::size_t k = static_cast<std::size_t>(iy) * g.nx + ix;
          fg.spinor[k] = amplitude(p, state, fg.node(ix, iy), ctl, opt.normalization);
          fg.density[k] = fg.spinor[k].density();
        }
      }
    } catch (...) {
      errors[id] = std::current_exception();
    }
  };
  if (threads <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(work, id);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  const auto* su11 = std::get_if<SU11Spec>(&state);
  if (su11 && opt.cross_check) {
    const double rho_max = *std::max_element(fg.density.begin(), fg.density.end());
    const double scale = std::max(rho_max, std::numeric_limits<double>::min());
    std::size_t worst = 0;
    for (std::size_t k = 0; k < total; k += static_cast<std::size_t>(std::max(1, opt.cross_check_stride))) {
      const int ix = static_cast<int>(k % g.nx), iy = static_cast<int>(k / g.nx);
      const double series = su11_density_series(p, *su11, fg.node(ix, iy), ctl);
      const double dev = std::abs(series - fg.density[k]) / scale;
      ++fg.cross_checked;
      if (dev > fg.cross_check_max || fg.cross_checked == 1) {
        fg.cross_check_max = dev;
        worst = k;
      }
    }
    if (fg.cross_check_max > opt.cross_check_tol) {
      const int ix = static_cast<int>(worst % g.nx), iy = static_cast<int>(worst / g.nx);
      const auto pt = fg.node(ix, iy);
      std::ostringstream msg;
      msg << "su(1,1) density cross-check failed at (x, y) = (" << pt.x << ", " << pt.y
          << "): relative deviation " << fg.cross_check_max << " exceeds " << opt.cross_check_tol;
      throw CrossCheckError(msg.str(), pt.x, pt.y, fg.cross_check_max);
    }
  }
  return fg;
}

double mean_energy_2d(const ModelParams& p, cplx alpha, const SeriesControl& ctl) {
  ctl.validate();
  const double s = std::norm(alpha);
  if (!std::isfinite(s)) throw DomainError("mean_energy_2d: alpha must be finite");
  if (s == 0.0) return 0.0;
  const double ls = std::log(s);
  const double base = std::log(2.0) - special::log_two_exp_minus_one(s);
  double sum = 0.0;
  for (int n = 1; n < ctl.max_terms; ++n) {
    const double term = std::sqrt(double(n)) * std::exp(base + n * ls - log_factorial(n));
    sum += term;
    if (n > s && series_tail_done(term, sum, s / (n + 1.0), ctl.rel_tol))
      return std::sqrt(p.omega_b()) * sum * p.energy_scale();
  }
  throw ConvergenceError("mean_energy_2d: series did not converge within max_terms",
                         {cplx(std::sqrt(p.omega_b()) * sum * p.energy_scale())}, ctl.max_terms);
}

double mean_energy_su11(const ModelParams& p, cplx tau, int mz, const SeriesControl& ctl) {
  ctl.validate();
  const double t = std::norm(tau);
  if (!std::isfinite(t)) throw DomainError("mean_energy_su11: tau must be finite");
  const double lt = t > 0.0 ? std::log(t) : 0.0;
  const double ln = coherent::su11_log_norm(t, mz, ctl);
  const int a = std::abs(mz);
  // Both sectors: sum_k w_k sqrt(n_k) with w_k = t^k / (k!(k+a)!) up to constants.
  const double base = mz >= 1 ? log_factorial(mz) - ln : std::log(2.0) + log_factorial(a) - ln;
  const double scale = std::sqrt(p.omega_b()) * p.energy_scale();
  double sum = 0.0;
  for (int k = 0; k < ctl.max_terms; ++k) {
    const int n = mz >= 1 ? k + mz : k;
    if (k > 0 && t == 0.0) return scale * sum;
    const double lw = base + (k > 0 ? k * lt : 0.0) - log_factorial(k) - log_factorial(k + a);
    const double term = std::sqrt(double(n)) * std::exp(lw);
    sum += term;
    const double ratio = t / ((k + 1.0) * (k + 1.0 + a));
    if (k > 0 && series_tail_done(term, sum, ratio, ctl.rel_tol)) return scale * sum;
  }
  throw ConvergenceError("mean_energy_su11: series did not converge within max_terms", {cplx(scale * sum)},
                         ctl.max_terms);
}

Peak locate_peak(const FieldGrid& fg) {
  if (fg.density.empty()) throw DomainError("locate_peak: empty grid");
  Peak best;
  best.value = -1.0;
  for (int ix = 0; ix < fg.spec.nx; ++ix) {
    for (int iy = 0; iy < fg.spec.ny; ++iy) {
      const double v = fg.at(ix, iy);
      if (v > best.value) best = {fg.node(ix, iy), v, ix, iy};
    }
  }
  return best;
}

CS2DPeak cs2d_peak(const ModelParams& p, const CS2DSpec& s, const SeriesControl& ctl) {
  s.validate();
  const cplx a = s.alpha_tilde();
  const cplx b = s.beta_tilde();
  const double t = cs2d_peak_distance(std::abs(a));
  const cplx dir = std::abs(a) > 0.0 ? std::conj(a) / std::abs(a) : cplx(1.0);
  CS2DPeak out;
  out.z_distance = t;
  out.location = from_z(p, b + t * dir);
  out.value = coherent::cs2d_amplitude(p, s, out.location, ctl).density();
  return out;
}

PeakLocus cs2d_peak_locus(const ModelParams& p, double abs_alpha, cplx beta, int samples,
                          const SeriesControl& ctl) {
  if (samples < 4) throw DomainError("cs2d_peak_locus: need at least 4 samples");
  PeakLocus locus;
  locus.center = from_z(p, beta);
  for (int k = 0; k < samples; ++k) {
    const CS2DSpec s{std::polar(abs_alpha, 2.0 * pi * k / samples), beta};
    const auto pk = cs2d_peak(p, s, ctl);
    locus.semi_axis_x = std::max(locus.semi_axis_x, std::abs(pk.location.x - locus.center.x));
    locus.semi_axis_y = std::max(locus.semi_axis_y, std::abs(pk.location.y - locus.center.y));
  }
  const double major = std::max(locus.semi_axis_x, locus.semi_axis_y);
  const double minor = std::min(locus.semi_axis_x, locus.semi_axis_y);
  locus.eccentricity = major > 0.0 ? std::sqrt(std::max(0.0, 1.0 - (minor / major) * (minor / major))) : 0.0;
  return locus;
}

RingPeak su11_ring_peak(const ModelParams& p, const SU11Spec& s, const SeriesControl& ctl) {
  s.validate();
  const double xi_hi = 2.0 * std::sqrt(std::abs(s.tau) + std::abs(s.mz) + 1.0) + 4.0;
  const double to_rho = 2.0 / std::sqrt(p.omega_b());
  auto rho_at = [&](double xi) {
    return coherent::su11_amplitude(p, s, from_elliptic(p, to_rho * xi, 0.0), ctl).density();
  };
  constexpr int coarse = 400;
  int best = 0;
  double best_v = -1.0;
  for (int i = 0; i <= coarse; ++i) {
    const double v = rho_at(xi_hi * i / coarse);
    if (v > best_v) {
      best_v = v;
      best = i;
    }
  }
  const double lo = xi_hi * std::max(0, best - 1) / coarse;
  const double hi = xi_hi * std::min(coarse, best + 1) / coarse;
  RingPeak out;
  out.xi = golden_max(rho_at, lo, hi);
  out.rho = to_rho * out.xi;
  out.value = rho_at(out.xi);
  return out;
}

Box default_box(const ModelParams& p, const StateSpec& state, const SeriesControl& ctl) {
  constexpr double widths = 8.0;
  cplx center = 0.0;
  double reach = 0.0;
  std::visit(overloaded{
                 [&](const CS2DSpec& s) {
                   center = s.beta_tilde();
                   reach = std::abs(s.alpha) + widths;
                 },
                 [&](const SU11Spec& s) { reach = su11_ring_peak(p, s, ctl).xi + widths; },
             },
             state);
  const auto c = from_z(p, center);
  const double sz = std::sqrt(p.zeta());
  const double scale = 2.0 / std::sqrt(p.omega_b());
  const double hx = scale * sz * reach, hy = scale * reach / sz;
  return {c.x - hx, c.x + hx, c.y - hy, c.y + hy};
}

double normalization_integral(const ModelParams& p, const StateSpec& state, const Box& box, int nodes,
                              const SeriesControl& ctl, Normalization norm) {
  if (!(box.x_max > box.x_min) || !(box.y_max > box.y_min)) throw DomainError("normalization_integral: empty box");
  const auto rx = quad::gauss_legendre(nodes, box.x_min, box.x_max);
  const auto ry = quad::gauss_legendre(nodes, box.y_min, box.y_max);
  double total = 0.0;
  for (int j = 0; j < nodes; ++j) {
    double row = 0.0;
    for (int i = 0; i < nodes; ++i)
      row += rx.weights[i] * amplitude(p, state, {rx.nodes[i], ry.nodes[j]}, ctl, norm).density();
    total += ry.weights[j] * row;
  }
  return total;
}

}  // namespace diraccs::observables

#include "cli/commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

#include "cli/cli.hpp"
#include "cli/parse.hpp"
#include "diraccs/fock.hpp"
#include "diraccs/matrix_ops.hpp"
#include "diraccs/model.hpp"
#include "diraccs/observables.hpp"
#include "diraccs/verify.hpp"

namespace diraccs::cli {

using json = nlohmann::ordered_json;
namespace obs = observables;

namespace {

constexpr int schema_version = 1;

json complex_json(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

ModelParams make_params(const ModelOptions& m) {
  try {
    return ModelParams(m.omega_b, m.zeta, m.energy_scale);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

json model_json(const ModelOptions& m) {
  json j{{"omega_b", m.omega_b}, {"zeta", m.zeta}, {"energy_scale", m.energy_scale}};
  j["b0"] = m.b0 ? json(*m.b0) : json(nullptr);
  return j;
}

special::SeriesControl make_control(const SeriesOptions& s) {
  special::SeriesControl ctl{s.rel_tol, s.max_terms};
  try {
    ctl.validate();
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  return ctl;
}

json series_json(const SeriesOptions& s) { return {{"rel_tol", s.rel_tol}, {"max_terms", s.max_terms}}; }

obs::StateSpec make_state(const StateOptions& s) {
  if (s.kind == "2d") {
    coherent::CS2DSpec spec{parse_complex(s.alpha), parse_complex(s.beta), s.delta, s.eta};
    spec.validate();
    return spec;
  }
  coherent::SU11Spec spec{parse_complex(s.tau), s.mz, s.delta};
  spec.validate();
  return spec;
}

json state_json(const obs::StateSpec& st) {
  if (const auto* c = std::get_if<coherent::CS2DSpec>(&st))
    return {{"kind", "2d"}, {"alpha", complex_json(c->alpha)}, {"beta", complex_json(c->beta)},
            {"delta", c->delta}, {"eta", c->eta}};
  const auto& s = std::get<coherent::SU11Spec>(st);
  return {{"kind", "su11"}, {"tau", complex_json(s.tau)}, {"mz", s.mz}, {"delta", s.delta}};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << content;
  f.close();
  if (!f) throw std::runtime_error("write failed for " + path);
}

std::string file_name(const std::string& path) { return std::filesystem::path(path).filename().string(); }

struct Item {
  std::string name;
  double deviation;
  double tol;

  bool pass() const { return std::isfinite(deviation) && deviation < tol; }
};

void add_relations(std::vector<Item>& items, const std::string& prefix, const RelationReport& rep, double tol) {
  for (const auto& r : rep.relations) items.push_back({prefix + r.name, r.max_deviation, tol});
}

std::vector<int> mz_list_or(const std::optional<std::string>& text, std::vector<int> fallback) {
  return text ? parse_int_list(*text) : fallback;
}

}  // namespace

int cmd_density(const DensityArgs& a, std::ostream& out) {
  const ModelParams p = make_params(a.model);
  const auto ctl = make_control(a.series);
  const auto grid = parse_grid(a.grid);
  const auto state = make_state(a.state);
  if (a.norm_nodes < 2) throw UsageError("--norm-nodes must be at least 2");
  if (!(a.cross_check_tol > 0.0)) throw UsageError("--cross-check-tol must be positive");

  obs::DensityOptions opt;
  opt.normalization = a.paper_literal ? coherent::Normalization::paper_literal : coherent::Normalization::unit_area;
  opt.cross_check_tol = a.cross_check_tol;
  opt.threads = a.threads;
  const auto fg = obs::density_grid(p, state, grid, ctl, opt);

  std::string csv = "x,y,rho,re_up,im_up,re_lo,im_lo\n";
  csv.reserve(csv.size() + fg.density.size() * 120);
  double grid_sum = 0.0;
  for (int iy = 0; iy < grid.ny; ++iy) {
    for (int ix = 0; ix < grid.nx; ++ix) {
      const std::size_t k = static_cast<std::size_t>(iy) * grid.nx + ix;
      const auto& s = fg.spinor[k];
      grid_sum += fg.density[k];
      csv += format_double(grid.x_at(ix)) + ',' + format_double(grid.y_at(iy)) + ',' +
             format_double(fg.density[k]) + ',' + format_double(s.upper.real()) + ',' +
             format_double(s.upper.imag()) + ',' + format_double(s.lower.real()) + ',' +
             format_double(s.lower.imag()) + '\n';
    }
  }
  grid_sum *= grid.dx() * grid.dy();

  const auto box = obs::default_box(p, state, ctl);
  const double integral = obs::normalization_integral(p, state, box, a.norm_nodes, ctl, opt.normalization);
  const auto peak = obs::locate_peak(fg);

  const std::string csv_path = a.out + ".csv";
  const std::string meta_path = a.out + ".meta.json";

  json meta;
  meta["schema_version"] = schema_version;
  meta["command"] = "density";
  meta["config"] = {
      {"model", model_json(a.model)},
      {"state", state_json(state)},
      {"grid", {{"x_min", grid.x_min}, {"x_max", grid.x_max}, {"nx", grid.nx},
                {"y_min", grid.y_min}, {"y_max", grid.y_max}, {"ny", grid.ny}, {"nodes", "cell_centers"}}},
      {"normalization", a.paper_literal ? "paper_literal" : "unit_area"},
      {"series", series_json(a.series)},
      {"threads", a.threads},
      {"cross_check_tol", a.cross_check_tol},
      {"norm_nodes", a.norm_nodes},
      {"out", a.out}};
  meta["csv"] = {{"file", file_name(csv_path)},
                 {"columns", {"x", "y", "rho", "re_up", "im_up", "re_lo", "im_lo"}},
                 {"rows", fg.density.size()},
                 {"order", "y_outer"}};
  if (const auto* c = std::get_if<coherent::CS2DSpec>(&state)) {
    const auto el = classical_ellipse(p, c->alpha, c->beta);
    meta["classical_ellipse"] = {{"center", {{"x", el.center.x}, {"y", el.center.y}}},
                                 {"semi_axis_x", el.semi_axis_x},
                                 {"semi_axis_y", el.semi_axis_y},
                                 {"eccentricity", el.eccentricity}};
  } else {
    meta["classical_ellipse"] = nullptr;
  }
  meta["peak"] = {{"x", peak.location.x}, {"y", peak.location.y}, {"ix", peak.ix}, {"iy", peak.iy}, {"rho", peak.value}};
  meta["normalization"] = {
      {"integral", integral},
      {"quadrature", "gauss_legendre_product"},
      {"nodes", a.norm_nodes},
      {"box", {{"x_min", box.x_min}, {"x_max", box.x_max}, {"y_min", box.y_min}, {"y_max", box.y_max}}},
      {"grid_sum", grid_sum}};
  if (std::holds_alternative<coherent::SU11Spec>(state))
    meta["cross_check"] = {{"points", fg.cross_checked}, {"max_rel_deviation", fg.cross_check_max}, {"tol", a.cross_check_tol}};
  else
    meta["cross_check"] = nullptr;

  write_file(csv_path, csv);
  write_file(meta_path, meta.dump(2) + '\n');
  out << "wrote " << csv_path << " and " << meta_path << '\n';
  return ok;
}

int cmd_energy_scan(const EnergyScanArgs& a, std::ostream& out) {
  const ModelParams p = make_params(a.model);
  const auto ctl = make_control(a.series);
  const auto [lo, hi] = parse_range(a.range);
  if (lo < 0.0) throw UsageError("--range must be nonnegative");
  if (a.steps < 1) throw UsageError("--steps must be at least 1");
  const std::vector<int> mzs = a.kind == "su11" ? parse_int_list(a.mz) : std::vector<int>{};

  std::string csv = "param";
  if (a.kind == "2d") {
    csv += ",value";
  } else {
    for (int mz : mzs) csv += ",mz=" + std::to_string(mz);
  }
  csv += '\n';
  for (int k = 0; k <= a.steps; ++k) {
    const double t = k == a.steps ? hi : lo + (hi - lo) * k / a.steps;
    csv += format_double(t);
    if (a.kind == "2d") {
      csv += ',' + format_double(obs::mean_energy_2d(p, t, ctl));
    } else {
      for (int mz : mzs) csv += ',' + format_double(obs::mean_energy_su11(p, t, mz, ctl));
    }
    csv += '\n';
  }

  json meta;
  meta["schema_version"] = schema_version;
  meta["command"] = "energy-scan";
  meta["config"] = {{"model", model_json(a.model)},
                    {"kind", a.kind},
                    {"range", {lo, hi}},
                    {"steps", a.steps},
                    {"mz", mzs},
                    {"series", series_json(a.series)},
                    {"out", a.out}};
  json columns = json::array({"param"});
  if (a.kind == "2d") {
    columns.push_back("value");
  } else {
    for (int mz : mzs) columns.push_back("mz=" + std::to_string(mz));
  }
  meta["csv"] = {{"file", file_name(a.out + ".csv")},
                 {"columns", columns},
                 {"rows", a.steps + 1},
                 {"param", a.kind == "2d" ? "abs_alpha" : "abs_tau"},
                 {"unit", "hbar v_F"}};

  write_file(a.out + ".csv", csv);
  write_file(a.out + ".meta.json", meta.dump(2) + '\n');
  out << "wrote " << a.out << ".csv and " << a.out << ".meta.json\n";
  return ok;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const ModelParams p = make_params(a.model);
  const auto ctl = make_control(a.series);
  std::vector<Item> items;
  json config{{"model", model_json(a.model)}, {"series", series_json(a.series)}};

  if (a.suite == "algebra") {
    const double tol = a.tol.value_or(1e-10);
    matrix_ops::PhaseParams ph{a.delta, a.eta};
    add_relations(items, "scalar ", fock::check_scalar_algebra(a.cutoff), tol);
    add_relations(items, "matrix ", matrix_ops::verify_matrix_algebra(a.cutoff, ph), tol);
    config["cutoff"] = a.cutoff;
    config["delta"] = a.delta;
    config["eta"] = a.eta;
  } else if (a.suite == "factorization") {
    const double tol = a.tol.value_or(1e-10);
    add_relations(items, "", fock::check_factorization(p, a.cutoff), tol);
    config["cutoff"] = a.cutoff;
  } else if (a.suite == "moments") {
    const double tol = a.tol.value_or(1e-6);
    const auto mzs = mz_list_or(a.mz, {0, 1, 2, -1, -3});
    for (int mz : mzs) {
      const auto kind = mz >= 0 ? verify::Weight::f : verify::Weight::g;
      std::vector<int> s_list;
      for (int s = std::max(0, mz); s <= a.smax; ++s) s_list.push_back(s);
      if (s_list.empty()) continue;
      const auto rep = verify::moment_check(kind, mz, s_list);
      for (std::size_t i = 0; i < rep.s.size(); ++i) {
        std::ostringstream name;
        name << (kind == verify::Weight::f ? "f" : "g") << " mz=" << mz << " s=" << rep.s[i];
        items.push_back({name.str(), rep.rel_error[i], tol});
      }
    }
    config["mz"] = mzs;
    config["smax"] = a.smax;
  } else if (a.suite == "completeness") {
    const double tol = a.tol.value_or(1e-4);
    const auto r2 = verify::resolution_of_identity(verify::CompletenessKind::two_d, verify::square_block(a.block_max));
    items.push_back({"2d block " + std::to_string(r2.block.size()), r2.max_deviation, tol});
    const auto mzs = mz_list_or(a.mz, {1, -2});
    for (int mz : mzs) {
      const auto kind = mz >= 1 ? verify::CompletenessKind::su11_positive : verify::CompletenessKind::su11_negative;
      const auto r = verify::resolution_of_identity(kind, verify::mz_block(mz, std::max(a.block_max, mz)));
      items.push_back({"su11 mz=" + std::to_string(mz) + " block " + std::to_string(r.block.size()),
                       r.max_deviation, tol});
    }
    config["block_max"] = a.block_max;
    config["mz"] = mzs;
  } else if (a.suite == "normalization") {
    const double tol = a.tol.value_or(1e-6);
    std::vector<obs::StateSpec> states;
    coherent::CS2DSpec c{parse_complex(a.alpha), parse_complex(a.beta), a.delta, a.eta};
    c.validate();
    states.emplace_back(c);
    const cplx tau = parse_complex(a.tau.value_or("3"));
    const auto mzs = mz_list_or(a.mz, {1, -2});
    for (int mz : mzs) states.emplace_back(coherent::SU11Spec{tau, mz, a.delta});
    for (const auto& st : states) {
      const auto box = obs::default_box(p, st, ctl);
      const double integral = obs::normalization_integral(p, st, box, 128, ctl);
      std::string name = "integral " + state_json(st).dump();
      items.push_back({name, std::abs(integral - 1.0), tol});
    }
    const auto gram = verify::scalar_gram(p, 8);
    const double gram_dev = (gram - Eigen::MatrixXcd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
    items.push_back({"scalar gram indices <= 8", gram_dev, tol});
    config["alpha"] = complex_json(c.alpha);
    config["beta"] = complex_json(c.beta);
    config["tau"] = complex_json(tau);
    config["mz"] = mzs;
  } else if (a.suite == "eigen") {
    const double tol = a.tol.value_or(1e-8);
    coherent::CS2DSpec c{parse_complex(a.alpha), parse_complex(a.beta), a.delta, a.eta};
    c.validate();
    matrix_ops::PhaseParams ph{a.delta, a.eta};
    const int cut = std::max(coherent::series_cutoff(std::abs(c.alpha)), coherent::series_cutoff(std::abs(c.beta)));
    const auto coeffs = coherent::cs2d_coefficients(c, cut, cut);
    items.push_back({"A- c - alpha c", matrix_ops::eigen_residual(matrix_ops::apply_A_minus(ph, coeffs), c.alpha, coeffs), tol});
    items.push_back({"B- c - beta c", matrix_ops::eigen_residual(matrix_ops::apply_B_minus(ph, coeffs), c.beta, coeffs), tol});
    config["alpha"] = complex_json(c.alpha);
    config["beta"] = complex_json(c.beta);
    if (a.tau) {
      const cplx tau = parse_complex(*a.tau);
      const auto mzs = mz_list_or(a.mz, {-3, -2, -1, 0, 1, 2, 3});
      matrix_ops::PhaseParams kph{a.delta, 0.0};
      for (int mz : mzs) {
        coherent::SU11Spec s{tau, mz, a.delta};
        const auto sc = coherent::su11_coefficients(s, coherent::series_cutoff(std::abs(tau)) + std::abs(mz), ctl);
        items.push_back({"K- c - tau c, mz=" + std::to_string(mz),
                         matrix_ops::eigen_residual(matrix_ops::apply_K_minus(kph, sc), tau, sc), tol});
      }
      config["tau"] = complex_json(tau);
      config["mz"] = mzs;
    }
    config["delta"] = a.delta;
    config["eta"] = a.eta;
  }

  bool all = true;
  json rows = json::array();
  for (const auto& it : items) {
    all = all && it.pass();
    out << (it.pass() ? "PASS " : "FAIL ") << it.name << "  deviation=" << format_double(it.deviation)
        << "  tol=" << format_double(it.tol) << '\n';
    rows.push_back({{"name", it.name}, {"deviation", it.deviation}, {"tol", it.tol}, {"pass", it.pass()}});
  }
  out << "suite " << a.suite << ": " << (all ? "PASS" : "FAIL") << " (" << items.size() << " checks)\n";

  if (!a.json.empty()) {
    json report{{"schema_version", schema_version}, {"command", "verify"}, {"suite", a.suite},
                {"config", config}, {"checks", rows}, {"pass", all}};
    write_file(a.json, report.dump(2) + '\n');
  }
  return all ? ok : numeric_failure;
}

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  const ModelParams p = make_params(a.model);
  const auto ctl = make_control(a.series);
  const auto state = make_state(a.state);
  const auto norm = a.paper_literal ? coherent::Normalization::paper_literal : coherent::Normalization::unit_area;
  const PlanePoint pt{a.x, a.y};
  const auto v = obs::amplitude(p, state, pt, ctl, norm);
  const auto ep = to_elliptic(p, pt);
  json j{{"schema_version", schema_version},
         {"command", "eval"},
         {"config", {{"model", model_json(a.model)}, {"state", state_json(state)}, {"series", series_json(a.series)},
                     {"normalization", a.paper_literal ? "paper_literal" : "unit_area"}}},
         {"point", {{"x", a.x}, {"y", a.y}, {"rho", ep.rho}, {"theta", ep.theta}, {"xi", ep.xi}}},
         {"upper", complex_json(v.upper)},
         {"lower", complex_json(v.lower)},
         {"density", v.density()}};
  if (const auto* c = std::get_if<coherent::CS2DSpec>(&state))
    j["mean_energy"] = obs::mean_energy_2d(p, c->alpha, ctl);
  else {
    const auto& s = std::get<coherent::SU11Spec>(state);
    j["mean_energy"] = obs::mean_energy_su11(p, s.tau, s.mz, ctl);
  }
  out << j.dump(2) << '\n';
  return ok;
}

}  // namespace diraccs::cli

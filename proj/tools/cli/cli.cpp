#include "cli/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <ostream>

#include "cli/commands.hpp"
#include "cli/parse.hpp"
#include "diraccs/common.hpp"

namespace diraccs::cli {

namespace {

void add_model(CLI::App* sub, ModelOptions& m) {
  sub->add_option("--omega-b", m.omega_b, "cyclotron frequency")->capture_default_str();
  sub->add_option("--zeta", m.zeta, "anisotropy ratio v_x/v_y")->capture_default_str();
  sub->add_option("--energy-scale", m.energy_scale, "energy unit multiplier")->capture_default_str();
  sub->add_option("--b0", m.b0, "field strength (metadata only)");
}

void add_state(CLI::App* sub, StateOptions& s) {
  sub->add_option("--kind", s.kind, "2d or su11")->check(CLI::IsMember({"2d", "su11"}))->capture_default_str();
  sub->add_option("--alpha", s.alpha, "2D-CS alpha, a+bi")->capture_default_str();
  sub->add_option("--beta", s.beta, "2D-CS beta, a+bi")->capture_default_str();
  sub->add_option("--tau", s.tau, "su(1,1) tau, a+bi")->capture_default_str();
  sub->add_option("--delta", s.delta, "phase delta [rad]")->capture_default_str();
  sub->add_option("--eta", s.eta, "phase eta [rad]")->capture_default_str();
  sub->add_option("--mz", s.mz, "su(1,1) m_z")->capture_default_str();
}

void add_series(CLI::App* sub, SeriesOptions& s) {
  sub->add_option("--rel-tol", s.rel_tol, "series relative tolerance")->capture_default_str();
  sub->add_option("--max-terms", s.max_terms, "series term cap")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coherent states of anisotropic 2D Dirac materials", "diraccs"};
  app.require_subcommand(1);

  DensityArgs density;
  auto* d = app.add_subcommand("density", "density grid to <out>.csv and <out>.meta.json");
  add_model(d, density.model);
  add_state(d, density.state);
  add_series(d, density.series);
  d->add_option("--grid", density.grid, "x0,x1,nx,y0,y1,ny")->required();
  d->add_option("--out", density.out, "output stem")->required();
  d->add_flag("--paper-literal", density.paper_literal, "printed prefactors without the dx dy factor");
  d->add_option("--threads", density.threads, "worker threads, 0 for all")->capture_default_str();
  d->add_option("--cross-check-tol", density.cross_check_tol)->capture_default_str();
  d->add_option("--norm-nodes", density.norm_nodes, "Gauss-Legendre nodes per axis")->capture_default_str();

  EnergyScanArgs scan;
  auto* e = app.add_subcommand("energy-scan", "mean energy versus |alpha| or |tau|");
  add_model(e, scan.model);
  add_series(e, scan.series);
  e->add_option("--kind", scan.kind, "2d or su11")->check(CLI::IsMember({"2d", "su11"}))->capture_default_str();
  e->add_option("--range", scan.range, "a,b")->capture_default_str();
  e->add_option("--steps", scan.steps, "intervals; rows = steps + 1")->check(CLI::PositiveNumber)->capture_default_str();
  e->add_option("--mz", scan.mz, "comma separated m_z list")->capture_default_str();
  e->add_option("--out", scan.out, "output stem")->required();

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "run a verification suite");
  add_model(v, verify.model);
  add_series(v, verify.series);
  v->add_option("--suite", verify.suite)
      ->required()
      ->check(CLI::IsMember({"algebra", "factorization", "moments", "completeness", "normalization", "eigen"}));
  v->add_option("--tol", verify.tol, "pass threshold");
  v->add_option("--cutoff", verify.cutoff)->check(CLI::Range(3, 200))->capture_default_str();
  v->add_option("--delta", verify.delta)->capture_default_str();
  v->add_option("--eta", verify.eta)->capture_default_str();
  v->add_option("--mz", verify.mz, "comma separated m_z list");
  v->add_option("--smax", verify.smax)->check(CLI::NonNegativeNumber)->capture_default_str();
  v->add_option("--block-max", verify.block_max)->check(CLI::Range(0, 12))->capture_default_str();
  v->add_option("--alpha", verify.alpha)->capture_default_str();
  v->add_option("--beta", verify.beta)->capture_default_str();
  v->add_option("--tau", verify.tau);
  v->add_option("--json", verify.json, "write the JSON report here");

  EvalArgs eval;
  auto* ev = app.add_subcommand("eval", "amplitude at one point, as JSON");
  add_model(ev, eval.model);
  add_state(ev, eval.state);
  add_series(ev, eval.series);
  ev->add_option("--x", eval.x)->required();
  ev->add_option("--y", eval.y)->required();
  ev->add_flag("--paper-literal", eval.paper_literal);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? ok : usage_error;
  }

  try {
    if (d->parsed()) return cmd_density(density, out);
    if (e->parsed()) return cmd_energy_scan(scan, out);
    if (v->parsed()) return cmd_verify(verify, out);
    if (ev->parsed()) return cmd_eval(eval, out);
  } catch (const UsageError& ex) {
    err << "usage error: " << ex.what() << '\n';
    return usage_error;
  } catch (const DomainError& ex) {
    err << "invalid argument: " << ex.what() << '\n';
    return usage_error;
  } catch (const IndexError& ex) {
    err << "invalid argument: " << ex.what() << '\n';
    return usage_error;
  } catch (const CrossCheckError& ex) {
    err << "cross-check failed: " << ex.what() << '\n';
    return numeric_failure;
  } catch (const ConvergenceError& ex) {
    err << "no convergence after " << ex.terms() << " terms: " << ex.what() << '\n';
    return numeric_failure;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return numeric_failure;
  }
  return usage_error;
}

}  // namespace diraccs::cli

#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace diraccs::cli {

struct ModelOptions {
  double omega_b = 1.0;
  double zeta = 1.0;
  double energy_scale = 1.0;
  std::optional<double> b0;  // recorded only; omega_b carries the field
};

struct StateOptions {
  std::string kind = "2d";
  std::string alpha = "0";
  std::string beta = "0";
  std::string tau = "0";
  double delta = 0.0;
  double eta = 0.0;
  int mz = 1;
};

struct SeriesOptions {
  double rel_tol = 1e-14;
  int max_terms = 10000;
};

struct DensityArgs {
  ModelOptions model;
  StateOptions state;
  SeriesOptions series;
  std::string grid;
  std::string out;
  bool paper_literal = false;
  unsigned threads = 0;
  double cross_check_tol = 1e-8;
  int norm_nodes = 128;
};

struct EnergyScanArgs {
  ModelOptions model;
  SeriesOptions series;
  std::string kind = "2d";
  std::string range = "0,5";
  int steps = 100;
  std::string mz = "1";
  std::string out;
};

struct VerifyArgs {
  ModelOptions model;
  SeriesOptions series;
  std::string suite;
  std::optional<double> tol;
  int cutoff = 30;
  double delta = 0.0;
  double eta = 0.0;
  std::optional<std::string> mz;
  int smax = 8;
  int block_max = 6;
  std::string alpha = "1+1i";
  std::string beta = "2";
  std::optional<std::string> tau;
  std::string json;
};

struct EvalArgs {
  ModelOptions model;
  StateOptions state;
  SeriesOptions series;
  double x = 0.0;
  double y = 0.0;
  bool paper_literal = false;
};

int cmd_density(const DensityArgs& a, std::ostream& out);
int cmd_energy_scan(const EnergyScanArgs& a, std::ostream& out);
int cmd_verify(const VerifyArgs& a, std::ostream& out);
int cmd_eval(const EvalArgs& a, std::ostream& out);

}  // namespace diraccs::cli

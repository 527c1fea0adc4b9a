#pragma once

#include <variant>
#include <vector>

#include "diraccs/coherent.hpp"
#include "diraccs/model.hpp"

namespace diraccs::observables {

using coherent::CS2DSpec;
using coherent::Normalization;
using coherent::SU11Spec;
using special::SeriesControl;
using spinors::SpinorValue;

using StateSpec = std::variant<CS2DSpec, SU11Spec>;

// Nodes sit at cell centers: x_i = x_min + (i + 1/2) dx.
struct GridSpec {
  double x_min = 0.0, x_max = 1.0;
  int nx = 2;
  double y_min = 0.0, y_max = 1.0;
  int ny = 2;

  void validate() const;
  double dx() const { return (x_max - x_min) / nx; }
  double dy() const { return (y_max - y_min) / ny; }
  double x_at(int ix) const { return x_min + (ix + 0.5) * dx(); }
  double y_at(int iy) const { return y_min + (iy + 0.5) * dy(); }
};

struct DensityOptions {
  Normalization normalization = Normalization::unit_area;
  bool cross_check = true;
  int cross_check_stride = 20;  // every 20th node, i.e. a 5% subsample
  double cross_check_tol = 1e-8;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct FieldGrid {
  GridSpec spec;
  ModelParams params;
  StateSpec state;
  Normalization normalization = Normalization::unit_area;
  std::vector<double> density;       // index iy * nx + ix
  std::vector<SpinorValue> spinor;   // same layout
  int cross_checked = 0;
  double cross_check_max = 0.0;      // largest relative deviation seen

  double at(int ix, int iy) const { return density[static_cast<std::size_t>(iy) * spec.nx + ix]; }
  PlanePoint node(int ix, int iy) const { return {spec.x_at(ix), spec.y_at(iy)}; }
};

SpinorValue amplitude(const ModelParams& p, const StateSpec& state, PlanePoint pt,
                      const SeriesControl& ctl = {},
                      Normalization norm = Normalization::unit_area);

FieldGrid density_grid(const ModelParams& p, const StateSpec& state, const GridSpec& g,
                       const SeriesControl& ctl = {}, const DensityOptions& opt = {});

// su(1,1) density from the Laguerre-series form, independent of the amplitude path.
double su11_density_series(const ModelParams& p, const SU11Spec& s, PlanePoint pt,
                           const SeriesControl& ctl = {});

double mean_energy_2d(const ModelParams& p, cplx alpha, const SeriesControl& ctl = {});
double mean_energy_su11(const ModelParams& p, cplx tau, int mz, const SeriesControl& ctl = {});

struct Peak {
  PlanePoint location;
  double value = 0.0;
  int ix = 0;
  int iy = 0;
};

Peak locate_peak(const FieldGrid& fg);

struct Box {
  double x_min, x_max, y_min, y_max;
};

// Bounding box reaching 8 widths past the density peak.
Box default_box(const ModelParams& p, const StateSpec& state, const SeriesControl& ctl = {});

// Gauss-Legendre product rule with nodes x nodes points.
double normalization_integral(const ModelParams& p, const StateSpec& state, const Box& box,
                              int nodes = 128, const SeriesControl& ctl = {},
                              Normalization norm = Normalization::unit_area);

// Location of the 2D-CS density maximum, found along the ray
// w = t conj(alpha~)/|alpha~| from beta where the radial profile peaks.
struct CS2DPeak {
  PlanePoint location;
  double z_distance = 0.0;  // |z_peak - beta~|
  double value = 0.0;
};

CS2DPeak cs2d_peak(const ModelParams& p, const CS2DSpec& s, const SeriesControl& ctl = {});

// Curve traced by the 2D-CS peak as arg(alpha) runs over [0, 2pi).
struct PeakLocus {
  PlanePoint center;
  double semi_axis_x = 0.0;
  double semi_axis_y = 0.0;
  double eccentricity = 0.0;
};

PeakLocus cs2d_peak_locus(const ModelParams& p, double abs_alpha, cplx beta, int samples = 64,
                          const SeriesControl& ctl = {});

// Radius of the su(1,1) ring maximum, in xi and along theta = 0 in rho.
struct RingPeak {
  double xi = 0.0;
  double rho = 0.0;
  double value = 0.0;
};

RingPeak su11_ring_peak(const ModelParams& p, const SU11Spec& s, const SeriesControl& ctl = {});

}  // namespace diraccs::observables

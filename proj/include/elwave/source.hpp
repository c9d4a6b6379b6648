#pragma once

#include <cstddef>
#include <vector>

#include "elwave/grid.hpp"
#include "elwave/state.hpp"

namespace elwave {

// Ricker wavelet centered at t0. Hard-gated to exactly zero outside
// |t - t0| < 2/f0, where its magnitude has already decayed below 1e-15 of
// the peak; the gate keeps quiescent-tail checks exact.
double ricker(double t, double f0, double t0, double amplitude = 1.0);

// Isotropic stress source: the wavelet times a spatial density, injected
// into both normal stresses. sigma = 0 collapses the density to a discrete
// delta at the nearest normal-stress point (weight 1/cell-measure);
// sigma > 0 spreads a Gaussian over the normal-stress points within 6 sigma,
// normalized so the discrete moment is 1 in either case.
struct SourceSpec {
  double x = 0.0, y = 0.0;
  double f0 = 0.0, t0 = 0.0;
  double amplitude = 1.0;
  double spatial_sigma = 0.0;
};

struct SourceEntry {
  int region = 0;
  size_t idx = 0;     // flat index into the region's sxx/syy arrays
  double weight = 0;  // spatial density value
};

struct DiscreteSource {
  SourceSpec spec;
  std::vector<SourceEntry> entries;

  double time_value(double t) const;
  // out.sxx += w * f(t), out.syy += w * f(t) at each entry.
  void add_to(double t, State& out) const;
};

DiscreteSource discretize_source(const SourceSpec& spec,
                                 const std::vector<RegionSpec>& regions);

}  // namespace elwave

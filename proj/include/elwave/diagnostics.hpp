#pragma once

#include <array>
#include <string>
#include <vector>

#include "elwave/semidiscrete.hpp"
#include "elwave/state.hpp"

namespace elwave {

// Discrete energy split by kind and by region. The quadrature pairs each
// staggered point with its cell measure (dx times the bounded-axis weight);
// the stress part uses the compliance form, positive definite for any
// admissible material.
struct EnergyBreakdown {
  double kinetic = 0.0;
  double potential = 0.0;
  std::vector<double> region_kinetic, region_potential;

  double total() const { return kinetic + potential; }
};

EnergyBreakdown discrete_energy(const SemiDiscrete& semi, const State& s);

// Staggered-in-time variant: the kinetic term uses the product of the two
// velocity snapshots bracketing the stress time. This is the quantity the
// half-step-offset update conserves exactly.
EnergyBreakdown discrete_energy_staggered(const SemiDiscrete& semi,
                                          const State& v_prev, const State& s);

// d/dt of the discrete energy given the state and its time derivative.
double energy_rate(const SemiDiscrete& semi, const State& s, const State& deriv);

// The boundary flux the raw interior discretization leaks through the top
// and bottom rows of each region (the penalty terms exist to cancel or pair
// these): sum over regions of T(top) - T(bottom), with
//   T(side) = dx * sum_i [vx_edge * (p . sxy column) + syy_edge * (p . vy column)].
double pre_sat_boundary_rate(const SemiDiscrete& semi, const State& s);

// Point probe of one velocity component, bilinearly interpolated on that
// component's staggered subgrid (periodic in x, clamped at the y edges). A
// receiver on a seam ordinate reads from the region above it.
struct ReceiverSpec {
  double x = 0.0;
  double y = 0.0;
  std::string component;  // "vx" or "vy"
};

struct ReceiverBinding {
  int region = 0;
  bool is_vx = true;
  int i0 = 0, i1 = 0, j0 = 0, j1 = 0;
  double w00 = 0, w10 = 0, w01 = 0, w11 = 0;

  double sample(const State& s) const;
};

ReceiverBinding bind_receiver(const ReceiverSpec& spec,
                              const std::vector<RegionSpec>& regions);

// CSV writers: header row, one %.17g-formatted record per line, LF endings.
void write_energy_csv(const std::string& path,
                      const std::vector<std::array<double, 4>>& rows);
void write_seismogram_csv(const std::string& path,
                          const std::vector<std::string>& names,
                          const std::vector<double>& times,
                          const std::vector<std::vector<double>>& samples);

}  // namespace elwave

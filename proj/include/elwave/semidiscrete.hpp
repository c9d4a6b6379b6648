#pragma once

#include <vector>

#include "elwave/grid.hpp"
#include "elwave/media.hpp"
#include "elwave/operators1d.hpp"
#include "elwave/state.hpp"

namespace elwave {

// Which penalty families to apply. Disabling them exposes the raw interior
// discretization (used by the energy diagnostics to isolate boundary terms).
struct SatToggles {
  bool free_surface = true;
  bool interface = true;
};

// Spatial discretization of the velocity-stress system on the region stack:
// fourth-order staggered differences (periodic in x, boundary-closed in y),
// traction-free top and bottom surfaces, and penalty coupling across the
// internal seams. The two half-updates are split so a staggered-in-time
// integrator can use them directly:
//   rhs_velocity writes vx,vy time derivatives (reads stresses only)
//   rhs_stress   writes sxx,sxy,syy derivatives (reads velocities only)
// Both overwrite their components of `out`; `out` must have the same shape
// as `s` (make_state). Source terms are injected separately by the stepper.
class SemiDiscrete {
 public:
  SemiDiscrete(std::vector<RegionSpec> specs, std::vector<RegionMedia> media,
               std::vector<InterfaceSpec> faces, SatToggles toggles = {});

  void rhs_velocity(const State& s, State& out) const;
  void rhs_stress(const State& s, State& out) const;
  void rhs(const State& s, State& out) const;

  const std::vector<RegionSpec>& specs() const { return specs_; }
  const std::vector<RegionMedia>& media() const { return media_; }
  const std::vector<InterfaceSpec>& interfaces() const { return faces_; }
  const SatToggles& toggles() const { return toggles_; }
  const PeriodicOps& periodic_ops(int r) const { return px_[r]; }
  const BoundedOps& bounded_ops(int r) const { return by_[r]; }

 private:
  void apply_free_surface_sats(const State& s, State& out) const;
  void apply_interface_velocity_sats(const State& s, State& out) const;
  void apply_interface_stress_sats(const State& s, State& out) const;

  std::vector<RegionSpec> specs_;
  std::vector<RegionMedia> media_;
  std::vector<InterfaceSpec> faces_;
  SatToggles toggles_;
  std::vector<PeriodicOps> px_;
  std::vector<BoundedOps> by_;
};

}  // namespace elwave

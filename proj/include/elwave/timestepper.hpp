#pragma once

#include <functional>
#include <string>
#include <vector>

#include "elwave/media.hpp"
#include "elwave/semidiscrete.hpp"
#include "elwave/source.hpp"
#include "elwave/state.hpp"

namespace elwave {

struct TimeGrid {
  double dt = 0.0;
  double t_end = 0.0;
  int n_steps = 0;
};

// t_end must be an integral number of steps (to 1e-9 relative).
TimeGrid make_time_grid(double dt, double t_end);

// Stability bound for the staggered leapfrog update: the fastest wave must
// not outrun the tightest grid, with an empirical safety factor.
struct CflReport {
  double dt = 0.0;
  double dt_max = 0.0;
  bool ok = false;
  std::string detail;
};

CflReport cfl_check(const std::vector<RegionSpec>& specs,
                    const std::vector<RegionMedia>& media, double dt,
                    double safety = 0.6);

// Called once per step and once more after the loop. For the leapfrog the
// state at hook time n holds stresses at t = n*dt and velocities at
// t + dt/2, while v_prev holds velocities at t - dt/2 (the staggered pair
// the conserved energy is built from); the final call has n = n_steps and
// velocity fields advanced into a scratch state. For the one-stage-per-step
// classical scheme both velocity arguments alias the synchronized state.
using StepHook =
    std::function<void(int n, double t, const State& s, const State& v_prev)>;

// Staggered central-difference update: velocities advance on half steps,
// stresses on whole steps, with the source injected at the stress stage
// midpoint. `src` may be null.
void run_leapfrog(const SemiDiscrete& semi, const DiscreteSource* src,
                  const TimeGrid& tg, State& state, const StepHook& hook);

// Classical fourth-order one-step scheme on the synchronized system; used
// as a cross-check of the spatial discretization, not for production runs.
void run_rk4(const SemiDiscrete& semi, const DiscreteSource* src,
             const TimeGrid& tg, State& state, const StepHook& hook);

}  // namespace elwave

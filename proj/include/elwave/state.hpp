#pragma once

#include <cstdint>
#include <vector>

#include "elwave/field.hpp"
#include "elwave/grid.hpp"

namespace elwave {

// Unknowns of one region on their staggered subgrids:
//   vx  (x midpoints, y nodes)      nx x nyN
//   vy  (x nodes,     y midpoints)  nx x nyM
//   sxx (x nodes,     y nodes)      nx x nyN
//   sxy (x midpoints, y midpoints)  nx x nyM
//   syy (x nodes,     y nodes)      nx x nyN
struct RegionState {
  Field2D vx, vy, sxx, sxy, syy;
};

struct State {
  std::vector<RegionState> regions;
};

State make_state(const std::vector<RegionSpec>& specs);

void zero(State& s);
void copy_into(const State& src, State& dst);
void axpy(double a, const State& x, State& y);  // y += a * x
bool all_finite(const State& s);

// Uniform values in [-1, 1) drawn from the raw bit stream of a fixed PRNG,
// so the same seed gives the same state on any platform.
State random_state(const std::vector<RegionSpec>& specs, uint64_t seed);

}  // namespace elwave

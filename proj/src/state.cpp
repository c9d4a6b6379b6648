#include "elwave/state.hpp"

#include <cmath>
#include <random>

namespace elwave {

namespace {

template <typename F>
void for_each_field(State& s, F&& f) {
  for (auto& r : s.regions) {
    f(r.vx);
    f(r.vy);
    f(r.sxx);
    f(r.sxy);
    f(r.syy);
  }
}

}  // namespace

State make_state(const std::vector<RegionSpec>& specs) {
  State s;
  s.regions.reserve(specs.size());
  for (const auto& sp : specs) {
    RegionState r;
    r.vx = Field2D(sp.nx, sp.nyN);
    r.vy = Field2D(sp.nx, sp.nyM);
    r.sxx = Field2D(sp.nx, sp.nyN);
    r.sxy = Field2D(sp.nx, sp.nyM);
    r.syy = Field2D(sp.nx, sp.nyN);
    s.regions.push_back(std::move(r));
  }
  return s;
}

void zero(State& s) {
  for_each_field(s, [](Field2D& f) { f.fill(0.0); });
}

void copy_into(const State& src, State& dst) {
  dst = src;
}

void axpy(double a, const State& x, State& y) {
  for (size_t r = 0; r < y.regions.size(); ++r) {
    auto ax = [a](const Field2D& from, Field2D& to) {
      for (size_t k = 0; k < to.v.size(); ++k) to.v[k] += a * from.v[k];
    };
    ax(x.regions[r].vx, y.regions[r].vx);
    ax(x.regions[r].vy, y.regions[r].vy);
    ax(x.regions[r].sxx, y.regions[r].sxx);
    ax(x.regions[r].sxy, y.regions[r].sxy);
    ax(x.regions[r].syy, y.regions[r].syy);
  }
}

bool all_finite(const State& s) {
  for (const auto& r : s.regions) {
    for (const Field2D* f : {&r.vx, &r.vy, &r.sxx, &r.sxy, &r.syy})
      for (double v : f->v)
        if (!std::isfinite(v)) return false;
  }
  return true;
}

State random_state(const std::vector<RegionSpec>& specs, uint64_t seed) {
  State s = make_state(specs);
  std::mt19937_64 rng(seed);
  // 53 explicit mantissa bits, mapped to [-1, 1); avoids distribution
  // classes whose output is implementation-defined.
  auto uniform = [&rng]() {
    return 2.0 * (double(rng() >> 11) * 0x1.0p-53) - 1.0;
  };
  for_each_field(s, [&](Field2D& f) {
    for (double& v : f.v) v = uniform();
  });
  return s;
}

}  // namespace elwave

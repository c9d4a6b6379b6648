#include "elwave/timestepper.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "elwave/errors.hpp"

namespace elwave {

TimeGrid make_time_grid(double dt, double t_end) {
  if (!(dt > 0.0)) throw ConfigError("dt must be positive");
  if (!(t_end > 0.0)) throw ConfigError("t_end must be positive");
  double steps = t_end / dt;
  double rounded = std::round(steps);
  if (rounded < 1.0 || std::fabs(steps - rounded) > 1e-9 * steps) {
    std::ostringstream os;
    os << "t_end = " << t_end << " is not an integral number of steps of dt = " << dt;
    throw ConfigError(os.str());
  }
  return {dt, t_end, int(rounded)};
}

CflReport cfl_check(const std::vector<RegionSpec>& specs,
                    const std::vector<RegionMedia>& media, double dt,
                    double safety) {
  CflReport rep;
  rep.dt = dt;
  double dt_max = std::numeric_limits<double>::infinity();
  int worst = 0;
  for (size_t r = 0; r < specs.size(); ++r) {
    double cand = safety * specs[r].h / media[r].cp_max;
    if (cand < dt_max) {
      dt_max = cand;
      worst = int(r);
    }
  }
  rep.dt_max = dt_max;
  rep.ok = dt <= dt_max * (1.0 + 1e-12);
  std::ostringstream os;
  os << "dt = " << dt << ", stable limit " << dt_max << " (region " << worst
     << ": h = " << specs[worst].h << ", max cp = " << media[worst].cp_max
     << ", safety " << safety << ")";
  rep.detail = os.str();
  return rep;
}

namespace {

// y.v* += a * x.v* (velocity components only)
void axpy_velocity(double a, const State& x, State& y) {
  for (size_t r = 0; r < y.regions.size(); ++r) {
    auto ax = [a](const Field2D& from, Field2D& to) {
      for (size_t k = 0; k < to.v.size(); ++k) to.v[k] += a * from.v[k];
    };
    ax(x.regions[r].vx, y.regions[r].vx);
    ax(x.regions[r].vy, y.regions[r].vy);
  }
}

void axpy_stress(double a, const State& x, State& y) {
  for (size_t r = 0; r < y.regions.size(); ++r) {
    auto ax = [a](const Field2D& from, Field2D& to) {
      for (size_t k = 0; k < to.v.size(); ++k) to.v[k] += a * from.v[k];
    };
    ax(x.regions[r].sxx, y.regions[r].sxx);
    ax(x.regions[r].sxy, y.regions[r].sxy);
    ax(x.regions[r].syy, y.regions[r].syy);
  }
}

void copy_velocity(const State& from, State& to) {
  for (size_t r = 0; r < to.regions.size(); ++r) {
    to.regions[r].vx.v = from.regions[r].vx.v;
    to.regions[r].vy.v = from.regions[r].vy.v;
  }
}

}  // namespace

void run_leapfrog(const SemiDiscrete& semi, const DiscreteSource* src,
                  const TimeGrid& tg, State& state, const StepHook& hook) {
  State deriv = make_state(semi.specs());
  State v_prev = make_state(semi.specs());

  for (int n = 0; n < tg.n_steps; ++n) {
    const double t = n * tg.dt;
    copy_velocity(state, v_prev);
    semi.rhs_velocity(state, deriv);
    axpy_velocity(tg.dt, deriv, state);
    if (hook) hook(n, t, state, v_prev);
    semi.rhs_stress(state, deriv);
    if (src) src->add_to(t + 0.5 * tg.dt, deriv);
    axpy_stress(tg.dt, deriv, state);
  }

  if (hook) {
    // One extra velocity half-pair so the final energy sample uses the same
    // staggered product as every other row.
    copy_velocity(state, v_prev);
    State ahead = state;
    semi.rhs_velocity(state, deriv);
    axpy_velocity(tg.dt, deriv, ahead);
    hook(tg.n_steps, tg.t_end, ahead, v_prev);
  }
}

void run_rk4(const SemiDiscrete& semi, const DiscreteSource* src,
             const TimeGrid& tg, State& state, const StepHook& hook) {
  State k1 = make_state(semi.specs());
  State k2 = k1, k3 = k1, k4 = k1, work = k1;

  auto full_rhs = [&](const State& s, double t, State& out) {
    semi.rhs(s, out);
    if (src) src->add_to(t, out);
  };

  for (int n = 0; n < tg.n_steps; ++n) {
    const double t = n * tg.dt;
    if (hook) hook(n, t, state, state);

    full_rhs(state, t, k1);
    work = state;
    axpy(0.5 * tg.dt, k1, work);
    full_rhs(work, t + 0.5 * tg.dt, k2);
    work = state;
    axpy(0.5 * tg.dt, k2, work);
    full_rhs(work, t + 0.5 * tg.dt, k3);
    work = state;
    axpy(tg.dt, k3, work);
    full_rhs(work, t + tg.dt, k4);

    axpy(tg.dt / 6.0, k1, state);
    axpy(tg.dt / 3.0, k2, state);
    axpy(tg.dt / 3.0, k3, state);
    axpy(tg.dt / 6.0, k4, state);
  }
  if (hook) hook(tg.n_steps, tg.t_end, state, state);
}

}  // namespace elwave

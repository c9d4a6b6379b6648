#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "elwave/config.hpp"
#include "elwave/diagnostics.hpp"
#include "elwave/timestepper.hpp"

namespace elwave {

// Everything needed to run one configured simulation, built and validated
// up front so setup errors surface before any stepping.
struct Problem {
  SimulationConfig cfg;
  std::vector<RegionSpec> specs;
  std::vector<InterfaceSpec> faces;
  std::unique_ptr<SemiDiscrete> semi;
  std::optional<DiscreteSource> source;
  std::vector<ReceiverBinding> receivers;
  std::vector<std::string> receiver_names;
  TimeGrid grid;
  CflReport cfl;
};

Problem build_problem(const SimulationConfig& cfg);

struct RunSummary {
  int steps = 0;
  double wall_seconds = 0.0;
  double final_energy = 0.0;
  std::string energy_path;
  std::string seismogram_path;  // empty when no receivers are configured
};

// Steps the configured integrator to t_end, recording the energy trace
// (every output.decimation-th step plus the final time) and the receiver
// waveforms, then writes the CSVs into the output directory (or
// outdir_override when non-empty). A non-finite energy sample aborts with
// NumericalError carrying the step index.
RunSummary run_simulation(Problem& p, const std::string& outdir_override = "");

}  // namespace elwave

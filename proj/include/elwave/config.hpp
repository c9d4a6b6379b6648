#pragma once

#include <optional>
#include <string>
#include <vector>

#include "elwave/diagnostics.hpp"
#include "elwave/media.hpp"
#include "elwave/semidiscrete.hpp"
#include "elwave/source.hpp"

namespace elwave {

struct OutputOptions {
  std::string directory = "out";
  int decimation = 1;  // record every n-th step in the energy trace
};

// Parsed run description. Geometry, media and numerics are validated when
// the problem is built, not here; parsing only checks shape and types.
struct SimulationConfig {
  std::vector<RegionExtent> regions;
  MediaSource media;
  double dt = 0.0;
  double t_end = 0.0;
  std::optional<SourceSpec> source;
  std::vector<ReceiverSpec> receivers;
  OutputOptions output;
  std::string integrator = "leapfrog";
  SatToggles sat;
  double cfl_safety = 0.6;
};

// base_dir resolves relative raster paths; parse_config_file uses the
// config file's own directory. Malformed JSON, missing keys, wrong types
// and unknown keys all raise ConfigError naming the offending spot.
SimulationConfig parse_config_string(const std::string& text,
                                     const std::string& base_dir = ".");
SimulationConfig parse_config_file(const std::string& path);

}  // namespace elwave

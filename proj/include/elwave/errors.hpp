#pragma once

#include <stdexcept>
#include <string>

namespace elwave {

// Bad or inconsistent user input (config files, rasters, geometry).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid sampled material values (reported with coordinates).
struct MediaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Non-finite state detected while stepping.
struct NumericalError : std::runtime_error {
  explicit NumericalError(const std::string& msg, int step_ = -1)
      : std::runtime_error(msg), step(step_) {}
  int step;
};

}  // namespace elwave

#pragma once

#include <vector>

#include "elwave/transfer.hpp"

namespace elwave {

// User-facing description of one region: physical extents and the square
// cell size h (dx = dy = h). Regions are listed top-down.
struct RegionExtent {
  double Lx = 0.0;
  double Ly = 0.0;
  double h = 0.0;
};

// Resolved region geometry. The top boundary of region 0 pins y = 0 and y
// grows upward, so every stacked region lives at non-positive ordinates.
// x is periodic with nx points for both the node family (i*h) and the
// midpoint family ((i+1/2)*h). The bounded y axis has nyN node rows
// (y_bottom + j*h, including both region boundaries) and nyM = nyN - 1
// midpoint rows.
struct RegionSpec {
  int index = 0;
  double Lx = 0.0, Ly = 0.0, h = 0.0;
  double y_top = 0.0, y_bottom = 0.0;
  int nx = 0;
  int nyN = 0;
  int nyM = 0;
};

// Validates and lays out the stack: positive extents, cell counts integral,
// all regions the same width, at least 5 x points and 9 y node rows, and
// adjacent spacings within a factor of two of each other.
std::vector<RegionSpec> build_region_specs(const std::vector<RegionExtent>& extents);

// One horizontal seam between vertically adjacent regions, with the grid
// transfers needed to move interface traces between the two x-grids.
// `fine` names the region with the smaller spacing (-1 when both match).
struct InterfaceSpec {
  int upper = -1;  // region above the seam (smaller index)
  int lower = -1;  // region below
  int ratio = 1;   // coarse spacing / fine spacing
  int fine = -1;
  double y = 0.0;  // seam ordinate (= upper's y_bottom = lower's y_top)
  TransferPair tN, tM;

  // Re-grid a trace from one side's x-line onto the other side's; the
  // nodes/mid variants follow the staggered family the trace lives on.
  void to_upper_nodes(const double* lower_trace, double* out) const;
  void to_lower_nodes(const double* upper_trace, double* out) const;
  void to_upper_mid(const double* lower_trace, double* out) const;
  void to_lower_mid(const double* upper_trace, double* out) const;
};

std::vector<InterfaceSpec> build_interfaces(const std::vector<RegionSpec>& specs);

}  // namespace elwave

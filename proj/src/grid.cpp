#include "elwave/grid.hpp"

#include <cmath>
#include <cstring>
#include <sstream>

#include "elwave/errors.hpp"

namespace elwave {

namespace {

// Lx/h must be an integer to machine-level tolerance; returns it.
int integral_cells(double length, double h, const char* what, int region) {
  double cells = length / h;
  double rounded = std::round(cells);
  if (rounded < 1.0 || std::fabs(cells - rounded) > 1e-9 * std::max(1.0, cells)) {
    std::ostringstream os;
    os << "region " << region << ": " << what << " = " << length
       << " is not an integral multiple of h = " << h;
    throw ConfigError(os.str());
  }
  return int(rounded);
}

}  // namespace

std::vector<RegionSpec> build_region_specs(const std::vector<RegionExtent>& extents) {
  if (extents.empty()) throw ConfigError("at least one region is required");

  std::vector<RegionSpec> specs;
  specs.reserve(extents.size());
  double y_top = 0.0;
  for (size_t r = 0; r < extents.size(); ++r) {
    const auto& e = extents[r];
    if (!(e.Lx > 0.0) || !(e.Ly > 0.0) || !(e.h > 0.0)) {
      std::ostringstream os;
      os << "region " << r << ": extents and spacing must be positive (Lx=" << e.Lx
         << ", Ly=" << e.Ly << ", h=" << e.h << ")";
      throw ConfigError(os.str());
    }
    RegionSpec s;
    s.index = int(r);
    s.Lx = e.Lx;
    s.Ly = e.Ly;
    s.h = e.h;
    s.nx = integral_cells(e.Lx, e.h, "Lx", int(r));
    int ny_cells = integral_cells(e.Ly, e.h, "Ly", int(r));
    s.nyN = ny_cells + 1;
    s.nyM = ny_cells;
    if (s.nx < 5) {
      std::ostringstream os;
      os << "region " << r << ": needs at least 5 x points, got " << s.nx;
      throw ConfigError(os.str());
    }
    if (s.nyN < 9) {
      std::ostringstream os;
      os << "region " << r << ": needs at least 8 y cells, got " << s.nyM;
      throw ConfigError(os.str());
    }
    s.y_top = y_top;
    s.y_bottom = y_top - e.Ly;
    y_top = s.y_bottom;
    specs.push_back(s);
  }

  for (size_t r = 1; r < specs.size(); ++r) {
    if (std::fabs(specs[r].Lx - specs[0].Lx) > 1e-9 * specs[0].Lx) {
      std::ostringstream os;
      os << "region " << r << ": width " << specs[r].Lx
         << " differs from region 0 width " << specs[0].Lx;
      throw ConfigError(os.str());
    }
    double ratio = specs[r - 1].h / specs[r].h;
    bool ok = std::fabs(ratio - 1.0) < 1e-9 || std::fabs(ratio - 2.0) < 1e-9 ||
              std::fabs(ratio - 0.5) < 1e-9;
    if (!ok) {
      std::ostringstream os;
      os << "regions " << r - 1 << "/" << r << ": spacing ratio " << ratio
         << " is not 1, 2, or 1/2";
      throw ConfigError(os.str());
    }
  }
  return specs;
}

std::vector<InterfaceSpec> build_interfaces(const std::vector<RegionSpec>& specs) {
  std::vector<InterfaceSpec> faces;
  for (size_t r = 0; r + 1 < specs.size(); ++r) {
    const RegionSpec& up = specs[r];
    const RegionSpec& lo = specs[r + 1];
    InterfaceSpec f;
    f.upper = int(r);
    f.lower = int(r + 1);
    f.y = up.y_bottom;
    double ratio = up.h / lo.h;
    if (std::fabs(ratio - 1.0) < 1e-9) {
      f.ratio = 1;
      f.fine = -1;
      f.tN = build_transfer_pair(up.nx, up.h, 1);
      f.tM = f.tN;
    } else if (ratio > 1.0) {
      // upper coarse, lower fine
      f.ratio = 2;
      f.fine = f.lower;
      f.tN = build_transfer_pair(up.nx, up.h, 2);
      f.tM = f.tN;
      if (lo.nx != 2 * up.nx)
        throw ConfigError("interface point counts do not match the 1:2 spacing ratio");
    } else {
      f.ratio = 2;
      f.fine = f.upper;
      f.tN = build_transfer_pair(lo.nx, lo.h, 2);
      f.tM = f.tN;
      if (up.nx != 2 * lo.nx)
        throw ConfigError("interface point counts do not match the 1:2 spacing ratio");
    }
    faces.push_back(f);
  }
  return faces;
}

void InterfaceSpec::to_upper_nodes(const double* lower_trace, double* out) const {
  if (fine == upper)
    tN.c2f_nodes(lower_trace, out);
  else
    tN.f2c_nodes(lower_trace, out);
}

void InterfaceSpec::to_lower_nodes(const double* upper_trace, double* out) const {
  if (fine == lower)
    tN.c2f_nodes(upper_trace, out);
  else
    tN.f2c_nodes(upper_trace, out);
}

void InterfaceSpec::to_upper_mid(const double* lower_trace, double* out) const {
  if (fine == upper)
    tM.c2f_mid(lower_trace, out);
  else
    tM.f2c_mid(lower_trace, out);
}

void InterfaceSpec::to_lower_mid(const double* upper_trace, double* out) const {
  if (fine == lower)
    tM.c2f_mid(upper_trace, out);
  else
    tM.f2c_mid(upper_trace, out);
}

}  // namespace elwave

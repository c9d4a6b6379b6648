#pragma once

#include <optional>
#include <string>
#include <vector>

#include "elwave/field.hpp"
#include "elwave/grid.hpp"

namespace elwave {

// Material description at one point: density plus body-wave speeds.
struct MediaPoint {
  double rho = 0.0;
  double cp = 0.0;
  double cs = 0.0;
};

struct Lame {
  double lambda = 0.0;
  double mu = 0.0;
  double rho = 0.0;
};

Lame lame_from_speeds(const MediaPoint& m);

// Coefficients of the stress energy density
//   cA*(sxx^2 + syy^2) - 2*cB*sxx*syy + 2*cS*sxy^2
// (the inverse of the plane-strain stiffness). Positive definite exactly
// when mu > 0 and lambda + mu > 0, i.e. cs > 0 and cp > cs.
struct Compliance {
  double cA = 0.0;
  double cB = 0.0;
  double cS = 0.0;
};

Compliance compliance_from_lame(const Lame& l);

// Regular raster of material samples, bilinearly interpolated and clamped
// at the edges. Grid point (i, j) sits at (x0 + i*dx, y0 + j*dy); arrays are
// row-major with x fastest.
struct MediaRaster {
  int nx = 0, ny = 0;
  double dx = 0.0, dy = 0.0;
  double x0 = 0.0, y0 = 0.0;
  std::vector<double> rho, cp, cs;

  MediaPoint sample(double x, double y) const;
};

// File format: one ASCII header line
//   ELMEDIA1 nx ny dx dy x0 y0\n
// followed by three raw blocks of nx*ny little-endian float64 values in
// row-major order (x fastest): rho, then cp, then cs.
MediaRaster load_media_raster(const std::string& path);
void save_media_raster(const MediaRaster& r, const std::string& path);

// Either a single uniform material or a raster to interpolate.
struct MediaSource {
  std::optional<MediaPoint> homogeneous;
  std::optional<MediaRaster> raster;

  MediaPoint at(double x, double y) const;
};

// Material arrays evaluated on the staggered subgrids of one region:
//   vx lives on (x midpoints, y nodes)      -> nx x nyN
//   vy lives on (x nodes,     y midpoints)  -> nx x nyM
//   sxx/syy on  (x nodes,     y nodes)      -> nx x nyN
//   sxy on      (x midpoints, y midpoints)  -> nx x nyM
struct RegionMedia {
  Field2D rho_vx;     // density at vx points
  Field2D rho_vy;     // density at vy points
  Field2D lam_nn;     // lambda at normal-stress points
  Field2D lam2mu_nn;  // lambda + 2 mu at normal-stress points
  Field2D mu_mm;      // mu at shear points
  Field2D cA_nn, cB_nn;  // compliance at normal-stress points
  Field2D cS_mm;         // compliance at shear points
  double cp_max = 0.0;
};

// Samples the source at every staggered point of the region, validating
// rho > 0, cs > 0 and cp > cs at each; violations raise MediaError with the
// offending coordinates.
RegionMedia sample_media(const RegionSpec& spec, const MediaSource& src);
std::vector<RegionMedia> sample_media(const std::vector<RegionSpec>& specs,
                                      const MediaSource& src);

}  // namespace elwave

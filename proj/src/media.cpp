#include "elwave/media.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>
#include <sstream>

#include "elwave/errors.hpp"

namespace elwave {

Lame lame_from_speeds(const MediaPoint& m) {
  Lame l;
  l.rho = m.rho;
  l.mu = m.rho * m.cs * m.cs;
  l.lambda = m.rho * (m.cp * m.cp - 2.0 * m.cs * m.cs);
  return l;
}

Compliance compliance_from_lame(const Lame& l) {
  Compliance c;
  double den = 4.0 * l.mu * (l.lambda + l.mu);
  c.cA = (l.lambda + 2.0 * l.mu) / den;
  c.cB = l.lambda / den;
  c.cS = 0.5 / l.mu;
  return c;
}

MediaPoint MediaRaster::sample(double x, double y) const {
  auto axis = [](double coord, double origin, double step, int n, int& i0, double& t) {
    double g = n > 1 ? (coord - origin) / step : 0.0;
    g = std::clamp(g, 0.0, double(n - 1));
    i0 = std::min(int(g), n - 2);
    if (i0 < 0) i0 = 0;  // n == 1
    t = n > 1 ? g - i0 : 0.0;
  };
  int i0, j0;
  double tx, ty;
  axis(x, x0, dx, nx, i0, tx);
  axis(y, y0, dy, ny, j0, ty);
  int i1 = nx > 1 ? i0 + 1 : i0;
  int j1 = ny > 1 ? j0 + 1 : j0;

  auto lerp2 = [&](const std::vector<double>& f) {
    double f00 = f[size_t(j0) * nx + i0], f10 = f[size_t(j0) * nx + i1];
    double f01 = f[size_t(j1) * nx + i0], f11 = f[size_t(j1) * nx + i1];
    return (1.0 - ty) * ((1.0 - tx) * f00 + tx * f10) +
           ty * ((1.0 - tx) * f01 + tx * f11);
  };
  return {lerp2(rho), lerp2(cp), lerp2(cs)};
}

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

void check_raster_dims(const MediaRaster& r, const std::string& context) {
  if (r.nx < 1 || r.ny < 1)
    throw ConfigError(context + ": raster dimensions must be at least 1x1");
  if (!(r.dx > 0.0) || !(r.dy > 0.0))
    throw ConfigError(context + ": raster spacings must be positive");
  size_t n = size_t(r.nx) * r.ny;
  if (r.rho.size() != n || r.cp.size() != n || r.cs.size() != n)
    throw ConfigError(context + ": raster array sizes do not match nx*ny");
}

}  // namespace

MediaRaster load_media_raster(const std::string& path) {
  FilePtr f(std::fopen(path.c_str(), "rb"));
  if (!f) throw ConfigError("cannot open media raster: " + path);

  char line[256];
  if (!std::fgets(line, sizeof line, f.get()))
    throw ConfigError(path + ": missing raster header");
  MediaRaster r;
  char magic[16] = {0};
  if (std::sscanf(line, "%15s %d %d %lf %lf %lf %lf", magic, &r.nx, &r.ny, &r.dx,
                  &r.dy, &r.x0, &r.y0) != 7 ||
      std::string(magic) != "ELMEDIA1")
    throw ConfigError(path + ": bad raster header (expected 'ELMEDIA1 nx ny dx dy x0 y0')");
  if (r.nx < 1 || r.ny < 1 || !(r.dx > 0.0) || !(r.dy > 0.0))
    throw ConfigError(path + ": invalid raster dimensions in header");

  size_t n = size_t(r.nx) * r.ny;
  auto read_block = [&](std::vector<double>& dst, const char* name) {
    dst.resize(n);
    if (std::fread(dst.data(), sizeof(double), n, f.get()) != n)
      throw ConfigError(path + ": truncated " + name + " block");
  };
  read_block(r.rho, "rho");
  read_block(r.cp, "cp");
  read_block(r.cs, "cs");
  return r;
}

void save_media_raster(const MediaRaster& r, const std::string& path) {
  check_raster_dims(r, path);
  FilePtr f(std::fopen(path.c_str(), "wb"));
  if (!f) throw ConfigError("cannot write media raster: " + path);
  std::fprintf(f.get(), "ELMEDIA1 %d %d %.17g %.17g %.17g %.17g\n", r.nx, r.ny,
               r.dx, r.dy, r.x0, r.y0);
  size_t n = size_t(r.nx) * r.ny;
  std::fwrite(r.rho.data(), sizeof(double), n, f.get());
  std::fwrite(r.cp.data(), sizeof(double), n, f.get());
  std::fwrite(r.cs.data(), sizeof(double), n, f.get());
}

MediaPoint MediaSource::at(double x, double y) const {
  if (homogeneous) return *homogeneous;
  if (raster) return raster->sample(x, y);
  throw ConfigError("media source has neither a uniform material nor a raster");
}

namespace {

MediaPoint checked_sample(const MediaSource& src, double x, double y) {
  MediaPoint m = src.at(x, y);
  if (!(m.rho > 0.0) || !(m.cs > 0.0) || !(m.cp > m.cs) || !std::isfinite(m.rho) ||
      !std::isfinite(m.cp) || !std::isfinite(m.cs)) {
    std::ostringstream os;
    os << "invalid material at (x=" << x << ", y=" << y << "): rho=" << m.rho
       << ", cp=" << m.cp << ", cs=" << m.cs
       << " (requires rho > 0, cs > 0, cp > cs)";
    throw MediaError(os.str());
  }
  return m;
}

}  // namespace

RegionMedia sample_media(const RegionSpec& spec, const MediaSource& src) {
  RegionMedia rm;
  rm.rho_vx = Field2D(spec.nx, spec.nyN);
  rm.rho_vy = Field2D(spec.nx, spec.nyM);
  rm.lam_nn = Field2D(spec.nx, spec.nyN);
  rm.lam2mu_nn = Field2D(spec.nx, spec.nyN);
  rm.mu_mm = Field2D(spec.nx, spec.nyM);
  rm.cA_nn = Field2D(spec.nx, spec.nyN);
  rm.cB_nn = Field2D(spec.nx, spec.nyN);
  rm.cS_mm = Field2D(spec.nx, spec.nyM);

  const double h = spec.h, yb = spec.y_bottom;
  double cp_max = 0.0;

  for (int j = 0; j < spec.nyN; ++j) {
    double y = yb + j * h;
    for (int i = 0; i < spec.nx; ++i) {
      // vx points: x midpoints on node rows
      MediaPoint m = checked_sample(src, (i + 0.5) * h, y);
      rm.rho_vx(i, j) = m.rho;
      cp_max = std::max(cp_max, m.cp);
      // normal-stress points: x nodes on node rows
      m = checked_sample(src, i * h, y);
      Lame l = lame_from_speeds(m);
      Compliance c = compliance_from_lame(l);
      rm.lam_nn(i, j) = l.lambda;
      rm.lam2mu_nn(i, j) = l.lambda + 2.0 * l.mu;
      rm.cA_nn(i, j) = c.cA;
      rm.cB_nn(i, j) = c.cB;
      cp_max = std::max(cp_max, m.cp);
    }
  }
  for (int j = 0; j < spec.nyM; ++j) {
    double y = yb + (j + 0.5) * h;
    for (int i = 0; i < spec.nx; ++i) {
      // vy points: x nodes on midpoint rows
      MediaPoint m = checked_sample(src, i * h, y);
      rm.rho_vy(i, j) = m.rho;
      cp_max = std::max(cp_max, m.cp);
      // shear points: x midpoints on midpoint rows
      m = checked_sample(src, (i + 0.5) * h, y);
      Lame l = lame_from_speeds(m);
      rm.mu_mm(i, j) = l.mu;
      rm.cS_mm(i, j) = 0.5 / l.mu;
      cp_max = std::max(cp_max, m.cp);
    }
  }
  rm.cp_max = cp_max;
  return rm;
}

std::vector<RegionMedia> sample_media(const std::vector<RegionSpec>& specs,
                                      const MediaSource& src) {
  std::vector<RegionMedia> out;
  out.reserve(specs.size());
  for (const auto& s : specs) out.push_back(sample_media(s, src));
  return out;
}

}  // namespace elwave

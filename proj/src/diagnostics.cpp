#include "elwave/diagnostics.hpp"

#include <cmath>
#include <cstdio>
#include <memory>
#include <sstream>

#include "elwave/errors.hpp"

namespace elwave {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

// Per-row pairwise sums collected into a list that is itself pairwise
// summed: deterministic regardless of threading and stable for long runs.
struct RowAccumulator {
  std::vector<double> rows;
  std::vector<double> scratch;

  void add_row(size_t n) { rows.push_back(pairwise_sum(scratch.data(), n)); }
  double total() const { return pairwise_sum(rows.data(), rows.size()); }
};

}  // namespace

EnergyBreakdown discrete_energy_staggered(const SemiDiscrete& semi,
                                          const State& v_prev, const State& s) {
  const auto& specs = semi.specs();
  const auto& media = semi.media();
  EnergyBreakdown e;
  e.region_kinetic.resize(specs.size());
  e.region_potential.resize(specs.size());

  for (size_t r = 0; r < specs.size(); ++r) {
    const RegionSpec& sp = specs[r];
    const RegionMedia& md = media[r];
    const BoundedOps& by = semi.bounded_ops(int(r));
    const RegionState& st = s.regions[r];
    const RegionState& pv = v_prev.regions[r];
    const double dx = sp.h;
    const int nx = sp.nx;

    RowAccumulator kin, pot;
    kin.scratch.resize(nx);
    pot.scratch.resize(nx);

    for (int j = 0; j < sp.nyN; ++j) {
      const double a = 0.5 * dx * by.aN[j];
      const double* v0 = pv.vx.row(j);
      const double* v1 = st.vx.row(j);
      const double* rho = md.rho_vx.row(j);
      for (int i = 0; i < nx; ++i) kin.scratch[i] = a * rho[i] * v0[i] * v1[i];
      kin.add_row(nx);

      const double* sxx = st.sxx.row(j);
      const double* syy = st.syy.row(j);
      const double* cA = md.cA_nn.row(j);
      const double* cB = md.cB_nn.row(j);
      for (int i = 0; i < nx; ++i)
        pot.scratch[i] = a * (cA[i] * (sxx[i] * sxx[i] + syy[i] * syy[i]) -
                              2.0 * cB[i] * sxx[i] * syy[i]);
      pot.add_row(nx);
    }
    for (int j = 0; j < sp.nyM; ++j) {
      const double a = 0.5 * dx * by.aM[j];
      const double* v0 = pv.vy.row(j);
      const double* v1 = st.vy.row(j);
      const double* rho = md.rho_vy.row(j);
      for (int i = 0; i < nx; ++i) kin.scratch[i] = a * rho[i] * v0[i] * v1[i];
      kin.add_row(nx);

      const double* sxy = st.sxy.row(j);
      const double* cS = md.cS_mm.row(j);
      for (int i = 0; i < nx; ++i)
        pot.scratch[i] = a * 2.0 * cS[i] * sxy[i] * sxy[i];
      pot.add_row(nx);
    }
    e.region_kinetic[r] = kin.total();
    e.region_potential[r] = pot.total();
    e.kinetic += e.region_kinetic[r];
    e.potential += e.region_potential[r];
  }
  return e;
}

EnergyBreakdown discrete_energy(const SemiDiscrete& semi, const State& s) {
  return discrete_energy_staggered(semi, s, s);
}

double energy_rate(const SemiDiscrete& semi, const State& s, const State& deriv) {
  const auto& specs = semi.specs();
  const auto& media = semi.media();
  double rate = 0.0;

  for (size_t r = 0; r < specs.size(); ++r) {
    const RegionSpec& sp = specs[r];
    const RegionMedia& md = media[r];
    const BoundedOps& by = semi.bounded_ops(int(r));
    const RegionState& st = s.regions[r];
    const RegionState& dt = deriv.regions[r];
    const double dx = sp.h;
    const int nx = sp.nx;

    RowAccumulator acc;
    acc.scratch.resize(nx);

    for (int j = 0; j < sp.nyN; ++j) {
      const double a = dx * by.aN[j];
      const double* v = st.vx.row(j);
      const double* vd = dt.vx.row(j);
      const double* rho = md.rho_vx.row(j);
      for (int i = 0; i < nx; ++i) acc.scratch[i] = a * rho[i] * v[i] * vd[i];
      acc.add_row(nx);

      const double* sxx = st.sxx.row(j);
      const double* syy = st.syy.row(j);
      const double* sxxd = dt.sxx.row(j);
      const double* syyd = dt.syy.row(j);
      const double* cA = md.cA_nn.row(j);
      const double* cB = md.cB_nn.row(j);
      for (int i = 0; i < nx; ++i)
        acc.scratch[i] = a * (sxx[i] * (cA[i] * sxxd[i] - cB[i] * syyd[i]) +
                              syy[i] * (cA[i] * syyd[i] - cB[i] * sxxd[i]));
      acc.add_row(nx);
    }
    for (int j = 0; j < sp.nyM; ++j) {
      const double a = dx * by.aM[j];
      const double* v = st.vy.row(j);
      const double* vd = dt.vy.row(j);
      const double* rho = md.rho_vy.row(j);
      for (int i = 0; i < nx; ++i) acc.scratch[i] = a * rho[i] * v[i] * vd[i];
      acc.add_row(nx);

      const double* sxy = st.sxy.row(j);
      const double* sxyd = dt.sxy.row(j);
      const double* cS = md.cS_mm.row(j);
      for (int i = 0; i < nx; ++i)
        acc.scratch[i] = a * 2.0 * cS[i] * sxy[i] * sxyd[i];
      acc.add_row(nx);
    }
    rate += acc.total();
  }
  return rate;
}

double pre_sat_boundary_rate(const SemiDiscrete& semi, const State& s) {
  const auto& specs = semi.specs();
  double rate = 0.0;

  for (size_t r = 0; r < specs.size(); ++r) {
    const RegionSpec& sp = specs[r];
    const BoundedOps& by = semi.bounded_ops(int(r));
    const RegionState& st = s.regions[r];
    const int nx = sp.nx;
    const int w = by.proj_width;

    auto side_flux = [&](bool top) {
      const int jN = top ? sp.nyN - 1 : 0;
      const int m0 = top ? sp.nyM - w : 0;
      const std::vector<double>& p = top ? by.pR : by.pL;

      std::vector<double> sxy_t(nx, 0.0), vy_t(nx, 0.0), terms(nx);
      for (int k = 0; k < w; ++k) {
        const double* srow = st.sxy.row(m0 + k);
        const double* vrow = st.vy.row(m0 + k);
        for (int i = 0; i < nx; ++i) {
          sxy_t[i] += p[k] * srow[i];
          vy_t[i] += p[k] * vrow[i];
        }
      }
      const double* vx = st.vx.row(jN);
      const double* syy = st.syy.row(jN);
      for (int i = 0; i < nx; ++i)
        terms[i] = vx[i] * sxy_t[i] + syy[i] * vy_t[i];
      return sp.h * pairwise_sum(terms.data(), nx);
    };

    rate += side_flux(true) - side_flux(false);
  }
  return rate;
}

double ReceiverBinding::sample(const State& s) const {
  const Field2D& f = is_vx ? s.regions[region].vx : s.regions[region].vy;
  return w00 * f(i0, j0) + w10 * f(i1, j0) + w01 * f(i0, j1) + w11 * f(i1, j1);
}

ReceiverBinding bind_receiver(const ReceiverSpec& spec,
                              const std::vector<RegionSpec>& regions) {
  if (spec.component != "vx" && spec.component != "vy")
    throw ConfigError("receiver component must be 'vx' or 'vy', got '" +
                      spec.component + "'");
  const double y_bot = regions.back().y_bottom;
  const double tol = 1e-9 * std::max(1.0, -y_bot);
  if (spec.y > tol || spec.y < y_bot - tol) {
    std::ostringstream os;
    os << "receiver y = " << spec.y << " lies outside the stack [" << y_bot << ", 0]";
    throw ConfigError(os.str());
  }

  int r = 0;
  while (r + 1 < int(regions.size()) && spec.y < regions[r].y_bottom) ++r;
  const RegionSpec& sp = regions[r];

  ReceiverBinding b;
  b.region = r;
  b.is_vx = spec.component == "vx";

  const int ny_rows = b.is_vx ? sp.nyN : sp.nyM;
  double gx = spec.x / sp.h - (b.is_vx ? 0.5 : 0.0);
  gx = std::fmod(gx, double(sp.nx));
  if (gx < 0.0) gx += sp.nx;
  b.i0 = int(gx) % sp.nx;
  const double tx = gx - std::floor(gx);
  b.i1 = (b.i0 + 1) % sp.nx;

  double gy = (spec.y - sp.y_bottom) / sp.h - (b.is_vx ? 0.0 : 0.5);
  gy = std::min(std::max(gy, 0.0), double(ny_rows - 1));
  b.j0 = std::min(int(gy), ny_rows - 2);
  const double ty = gy - b.j0;
  b.j1 = b.j0 + 1;

  b.w00 = (1.0 - tx) * (1.0 - ty);
  b.w10 = tx * (1.0 - ty);
  b.w01 = (1.0 - tx) * ty;
  b.w11 = tx * ty;
  return b;
}

namespace {

FilePtr open_csv(const std::string& path) {
  FilePtr f(std::fopen(path.c_str(), "wb"));
  if (!f) throw ConfigError("cannot write output file: " + path);
  return f;
}

}  // namespace

void write_energy_csv(const std::string& path,
                      const std::vector<std::array<double, 4>>& rows) {
  FilePtr f = open_csv(path);
  std::fprintf(f.get(), "t,e_total,e_kin,e_pot\n");
  for (const auto& row : rows)
    std::fprintf(f.get(), "%.17g,%.17g,%.17g,%.17g\n", row[0], row[1], row[2],
                 row[3]);
}

void write_seismogram_csv(const std::string& path,
                          const std::vector<std::string>& names,
                          const std::vector<double>& times,
                          const std::vector<std::vector<double>>& samples) {
  FilePtr f = open_csv(path);
  std::fprintf(f.get(), "t");
  for (const auto& n : names) std::fprintf(f.get(), ",%s", n.c_str());
  std::fprintf(f.get(), "\n");
  for (size_t row = 0; row < times.size(); ++row) {
    std::fprintf(f.get(), "%.17g", times[row]);
    for (double v : samples[row]) std::fprintf(f.get(), ",%.17g", v);
    std::fprintf(f.get(), "\n");
  }
}

}  // namespace elwave

#include "elwave/semidiscrete.hpp"

#include <algorithm>
#include <stdexcept>

namespace elwave {

SemiDiscrete::SemiDiscrete(std::vector<RegionSpec> specs,
                           std::vector<RegionMedia> media,
                           std::vector<InterfaceSpec> faces, SatToggles toggles)
    : specs_(std::move(specs)),
      media_(std::move(media)),
      faces_(std::move(faces)),
      toggles_(toggles) {
  if (specs_.empty()) throw std::invalid_argument("no regions");
  if (media_.size() != specs_.size())
    throw std::invalid_argument("one media block per region required");
  if (faces_.size() + 1 != specs_.size())
    throw std::invalid_argument("one interface per adjacent region pair required");
  px_.reserve(specs_.size());
  by_.reserve(specs_.size());
  for (const auto& sp : specs_) {
    px_.push_back(build_periodic_ops(sp.nx, sp.h));
    by_.push_back(derive_bounded_ops(sp.nyN, sp.h));
  }
}

void SemiDiscrete::rhs_velocity(const State& s, State& out) const {
  for (size_t r = 0; r < specs_.size(); ++r) {
    const RegionSpec& sp = specs_[r];
    const RegionMedia& md = media_[r];
    const PeriodicOps& px = px_[r];
    const BoundedOps& by = by_[r];
    const RegionState& in = s.regions[r];
    RegionState& o = out.regions[r];
    const int nx = sp.nx;

#pragma omp parallel
    {
      std::vector<double> xd(nx), acc(nx);

      // vx on node rows: dsxx/dx (x midpoints) + dsxy/dy (midpoint rows
      // gathered onto node rows).
#pragma omp for schedule(static) nowait
      for (int j = 0; j < sp.nyN; ++j) {
        px.apply_n2m(in.sxx.row(j), xd.data());
        const BoundedRow& br = by.dM_rows[j];
        std::fill(acc.begin(), acc.end(), 0.0);
        for (size_t k = 0; k < br.w.size(); ++k) {
          const double w = br.w[k];
          const double* src = in.sxy.row(br.col0 + int(k));
          for (int i = 0; i < nx; ++i) acc[i] += w * src[i];
        }
        double* vxo = o.vx.row(j);
        const double* rho = md.rho_vx.row(j);
        for (int i = 0; i < nx; ++i) vxo[i] = (xd[i] + acc[i]) / rho[i];
      }

      // vy on midpoint rows: dsxy/dx (x nodes) + dsyy/dy (node rows gathered
      // onto midpoint rows).
#pragma omp for schedule(static)
      for (int j = 0; j < sp.nyM; ++j) {
        px.apply_m2n(in.sxy.row(j), xd.data());
        const BoundedRow& br = by.dN_rows[j];
        std::fill(acc.begin(), acc.end(), 0.0);
        for (size_t k = 0; k < br.w.size(); ++k) {
          const double w = br.w[k];
          const double* src = in.syy.row(br.col0 + int(k));
          for (int i = 0; i < nx; ++i) acc[i] += w * src[i];
        }
        double* vyo = o.vy.row(j);
        const double* rho = md.rho_vy.row(j);
        for (int i = 0; i < nx; ++i) vyo[i] = (xd[i] + acc[i]) / rho[i];
      }
    }
  }

  if (toggles_.free_surface) apply_free_surface_sats(s, out);
  if (toggles_.interface) apply_interface_velocity_sats(s, out);
}

void SemiDiscrete::rhs_stress(const State& s, State& out) const {
  for (size_t r = 0; r < specs_.size(); ++r) {
    const RegionSpec& sp = specs_[r];
    const RegionMedia& md = media_[r];
    const PeriodicOps& px = px_[r];
    const BoundedOps& by = by_[r];
    const RegionState& in = s.regions[r];
    RegionState& o = out.regions[r];
    const int nx = sp.nx;

#pragma omp parallel
    {
      std::vector<double> xd(nx), acc(nx);

      // normal stresses on node rows: dvx/dx (onto x nodes) and dvy/dy
      // (midpoint rows onto node rows) mixed through the stiffness.
#pragma omp for schedule(static) nowait
      for (int j = 0; j < sp.nyN; ++j) {
        px.apply_m2n(in.vx.row(j), xd.data());
        const BoundedRow& br = by.dM_rows[j];
        std::fill(acc.begin(), acc.end(), 0.0);
        for (size_t k = 0; k < br.w.size(); ++k) {
          const double w = br.w[k];
          const double* src = in.vy.row(br.col0 + int(k));
          for (int i = 0; i < nx; ++i) acc[i] += w * src[i];
        }
        double* sxxo = o.sxx.row(j);
        double* syyo = o.syy.row(j);
        const double* lam = md.lam_nn.row(j);
        const double* l2m = md.lam2mu_nn.row(j);
        for (int i = 0; i < nx; ++i) {
          sxxo[i] = l2m[i] * xd[i] + lam[i] * acc[i];
          syyo[i] = lam[i] * xd[i] + l2m[i] * acc[i];
        }
      }

      // shear stress on midpoint rows: dvy/dx (onto x midpoints) + dvx/dy
      // (node rows onto midpoint rows).
#pragma omp for schedule(static)
      for (int j = 0; j < sp.nyM; ++j) {
        px.apply_n2m(in.vy.row(j), xd.data());
        const BoundedRow& br = by.dN_rows[j];
        std::fill(acc.begin(), acc.end(), 0.0);
        for (size_t k = 0; k < br.w.size(); ++k) {
          const double w = br.w[k];
          const double* src = in.vx.row(br.col0 + int(k));
          for (int i = 0; i < nx; ++i) acc[i] += w * src[i];
        }
        double* sxyo = o.sxy.row(j);
        const double* mu = md.mu_mm.row(j);
        for (int i = 0; i < nx; ++i) sxyo[i] = mu[i] * (xd[i] + acc[i]);
      }
    }
  }

  if (toggles_.interface) apply_interface_stress_sats(s, out);
}

void SemiDiscrete::rhs(const State& s, State& out) const {
  rhs_velocity(s, out);
  rhs_stress(s, out);
}

// Traction-free surfaces at the top of the stack (sign -1) and the bottom
// (sign +1): penalties drive the boundary traces of sxy and syy to zero
// through the momentum equations. Row placement mirrors the energy pairing:
// the sxy penalty acts on the single boundary node row of vx scaled by the
// boundary quadrature weight, the syy penalty is spread over the midpoint
// rows of vy in the support of the boundary projection.
void SemiDiscrete::apply_free_surface_sats(const State& s, State& out) const {
  auto surface = [&](int r, bool top) {
    const RegionSpec& sp = specs_[r];
    const BoundedOps& by = by_[r];
    const RegionMedia& md = media_[r];
    const RegionState& in = s.regions[r];
    RegionState& o = out.regions[r];
    const int nx = sp.nx;
    const int w = by.proj_width;
    const double eta = top ? -1.0 : 1.0;
    const int jN = top ? sp.nyN - 1 : 0;
    const std::vector<double>& p = top ? by.pR : by.pL;
    auto mrow = [&](int k) { return top ? sp.nyM - w + k : k; };

    std::vector<double> trace(nx, 0.0);
    for (int k = 0; k < w; ++k) {
      const double* srow = in.sxy.row(mrow(k));
      for (int i = 0; i < nx; ++i) trace[i] += p[k] * srow[i];
    }
    double* vxo = o.vx.row(jN);
    const double* rho_x = md.rho_vx.row(jN);
    const double aN_edge = by.aN[jN];
    for (int i = 0; i < nx; ++i) vxo[i] += eta * trace[i] / (aN_edge * rho_x[i]);

    const double* syyb = in.syy.row(jN);
    for (int k = 0; k < w; ++k) {
      const int jm = mrow(k);
      const double c = eta * p[k] / by.aM[jm];
      double* vyo = o.vy.row(jm);
      const double* rho_y = md.rho_vy.row(jm);
      for (int i = 0; i < nx; ++i) vyo[i] += c * syyb[i] / rho_y[i];
    }
  };
  surface(0, true);
  surface(int(specs_.size()) - 1, false);
}

namespace {

// Boundary traces of one region at a seam. The upper region meets the seam
// at its low-index rows (projection pL), the lower region at its high-index
// rows (pR).
struct SeamSide {
  const RegionSpec* sp;
  const BoundedOps* by;
  const RegionMedia* md;
  const RegionState* in;
  RegionState* o;
  double eta;   // +1/2 for the upper side, -1/2 for the lower
  int jN;       // edge node row
  int m0;       // first midpoint row of the projection support
  const std::vector<double>* p;
};

SeamSide seam_side(const std::vector<RegionSpec>& specs,
                   const std::vector<BoundedOps>& by,
                   const std::vector<RegionMedia>& md, const State& s,
                   State& out, int r, bool is_upper) {
  SeamSide side;
  side.sp = &specs[r];
  side.by = &by[r];
  side.md = &md[r];
  side.in = &s.regions[r];
  side.o = &out.regions[r];
  side.eta = is_upper ? 0.5 : -0.5;
  const int w = by[r].proj_width;
  side.jN = is_upper ? 0 : specs[r].nyN - 1;
  side.m0 = is_upper ? 0 : specs[r].nyM - w;
  side.p = is_upper ? &by[r].pL : &by[r].pR;
  return side;
}

// p-projected trace of a midpoint-row field (sxy or vy).
std::vector<double> projected_trace(const SeamSide& side, const Field2D& f) {
  const int nx = side.sp->nx, w = side.by->proj_width;
  std::vector<double> t(nx, 0.0);
  for (int k = 0; k < w; ++k) {
    const double* row = f.row(side.m0 + k);
    const double pk = (*side.p)[k];
    for (int i = 0; i < nx; ++i) t[i] += pk * row[i];
  }
  return t;
}

// Edge-row trace of a node-row field (vx, sxx, syy).
std::vector<double> edge_trace(const SeamSide& side, const Field2D& f) {
  const double* row = f.row(side.jN);
  return std::vector<double>(row, row + side.sp->nx);
}

}  // namespace

// Seam penalties on the momentum equations: continuity of the shear
// traction (sxy, paired with vx) and the normal traction (syy, paired with
// vy). Each side penalizes its own trace minus the other side's re-gridded
// trace; the half-strength signs make the pair's boundary terms cancel in
// the energy balance, transfers included.
void SemiDiscrete::apply_interface_velocity_sats(const State& s, State& out) const {
  for (const InterfaceSpec& f : faces_) {
    SeamSide u = seam_side(specs_, by_, media_, s, out, f.upper, true);
    SeamSide l = seam_side(specs_, by_, media_, s, out, f.lower, false);

    // sxy traces live on x midpoints, syy traces on x nodes.
    std::vector<double> sxy_u = projected_trace(u, u.in->sxy);
    std::vector<double> sxy_l = projected_trace(l, l.in->sxy);
    std::vector<double> syy_u = edge_trace(u, u.in->syy);
    std::vector<double> syy_l = edge_trace(l, l.in->syy);

    std::vector<double> other_u(u.sp->nx), other_l(l.sp->nx);

    auto apply_side = [](const SeamSide& side, const std::vector<double>& own_sxy,
                         const std::vector<double>& other_sxy,
                         const std::vector<double>& own_syy,
                         const std::vector<double>& other_syy) {
      const int nx = side.sp->nx, w = side.by->proj_width;
      double* vxo = side.o->vx.row(side.jN);
      const double* rho_x = side.md->rho_vx.row(side.jN);
      const double aN_edge = side.by->aN[side.jN];
      for (int i = 0; i < nx; ++i)
        vxo[i] += side.eta * (own_sxy[i] - other_sxy[i]) / (aN_edge * rho_x[i]);
      for (int k = 0; k < w; ++k) {
        const int jm = side.m0 + k;
        const double c = side.eta * (*side.p)[k] / side.by->aM[jm];
        double* vyo = side.o->vy.row(jm);
        const double* rho_y = side.md->rho_vy.row(jm);
        for (int i = 0; i < nx; ++i)
          vyo[i] += c * (own_syy[i] - other_syy[i]) / rho_y[i];
      }
    };

    f.to_upper_mid(sxy_l.data(), other_u.data());
    std::vector<double> syy_from_l(u.sp->nx);
    f.to_upper_nodes(syy_l.data(), syy_from_l.data());
    apply_side(u, sxy_u, other_u, syy_u, syy_from_l);

    f.to_lower_mid(sxy_u.data(), other_l.data());
    std::vector<double> syy_from_u(l.sp->nx);
    f.to_lower_nodes(syy_u.data(), syy_from_u.data());
    apply_side(l, sxy_l, other_l, syy_l, syy_from_u);
  }
}

// Seam penalties on the stress equations: continuity of vx (paired with
// sxy) and vy (paired with sxx/syy). The normal-velocity penalty enters
// both normal stresses through the lambda / lambda+2mu column of the
// stiffness, which the compliance collapses back onto syy in the energy.
void SemiDiscrete::apply_interface_stress_sats(const State& s, State& out) const {
  for (const InterfaceSpec& f : faces_) {
    SeamSide u = seam_side(specs_, by_, media_, s, out, f.upper, true);
    SeamSide l = seam_side(specs_, by_, media_, s, out, f.lower, false);

    // vx traces live on x midpoints, vy traces on x nodes.
    std::vector<double> vx_u = edge_trace(u, u.in->vx);
    std::vector<double> vx_l = edge_trace(l, l.in->vx);
    std::vector<double> vy_u = projected_trace(u, u.in->vy);
    std::vector<double> vy_l = projected_trace(l, l.in->vy);

    auto apply_side = [](const SeamSide& side, const std::vector<double>& r_vx,
                         const std::vector<double>& r_vy) {
      const int nx = side.sp->nx, w = side.by->proj_width;
      for (int k = 0; k < w; ++k) {
        const int jm = side.m0 + k;
        const double c = side.eta * (*side.p)[k] / side.by->aM[jm];
        double* sxyo = side.o->sxy.row(jm);
        const double* mu = side.md->mu_mm.row(jm);
        for (int i = 0; i < nx; ++i) sxyo[i] += mu[i] * c * r_vx[i];
      }
      double* sxxo = side.o->sxx.row(side.jN);
      double* syyo = side.o->syy.row(side.jN);
      const double* lam = side.md->lam_nn.row(side.jN);
      const double* l2m = side.md->lam2mu_nn.row(side.jN);
      const double aN_edge = side.by->aN[side.jN];
      for (int i = 0; i < nx; ++i) {
        const double m = side.eta * r_vy[i] / aN_edge;
        sxxo[i] += lam[i] * m;
        syyo[i] += l2m[i] * m;
      }
    };

    std::vector<double> t_u(u.sp->nx), t_l(l.sp->nx), r_vx(u.sp->nx), r_vy(u.sp->nx);

    f.to_upper_mid(vx_l.data(), t_u.data());
    for (int i = 0; i < u.sp->nx; ++i) r_vx[i] = vx_u[i] - t_u[i];
    f.to_upper_nodes(vy_l.data(), t_u.data());
    for (int i = 0; i < u.sp->nx; ++i) r_vy[i] = vy_u[i] - t_u[i];
    apply_side(u, r_vx, r_vy);

    r_vx.resize(l.sp->nx);
    r_vy.resize(l.sp->nx);
    f.to_lower_mid(vx_u.data(), t_l.data());
    for (int i = 0; i < l.sp->nx; ++i) r_vx[i] = vx_l[i] - t_l[i];
    f.to_lower_nodes(vy_u.data(), t_l.data());
    for (int i = 0; i < l.sp->nx; ++i) r_vy[i] = vy_l[i] - t_l[i];
    apply_side(l, r_vx, r_vy);
  }
}

}  // namespace elwave

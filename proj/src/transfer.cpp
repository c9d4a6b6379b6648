#include "elwave/transfer.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>
#include <vector>

namespace elwave {

namespace {

inline int wrap(int i, int n) {
  i %= n;
  return i < 0 ? i + n : i;
}

}  // namespace

void TransferPair::c2f_nodes(const double* in, double* out) const {
  if (identity) {
    std::memcpy(out, in, size_t(nc) * sizeof(double));
    return;
  }
  // Even fine nodes coincide with coarse nodes; odd ones get the standard
  // cubic midpoint interpolation.
  for (int k = 0; k < nc; ++k) {
    out[2 * k] = in[k];
    double a = in[wrap(k - 1, nc)];
    double b = in[k];
    double c = in[wrap(k + 1, nc)];
    double d = in[wrap(k + 2, nc)];
    out[2 * k + 1] = (9.0 / 16.0) * (b + c) - (1.0 / 16.0) * (a + d);
  }
}

void TransferPair::f2c_nodes(const double* in, double* out) const {
  if (identity) {
    std::memcpy(out, in, size_t(nc) * sizeof(double));
    return;
  }
  for (int k = 0; k < nc; ++k) {
    int r = 2 * k;
    double s = in[r] +
               (9.0 / 16.0) * (in[wrap(r + 1, nf)] + in[wrap(r - 1, nf)]) -
               (1.0 / 16.0) * (in[wrap(r + 3, nf)] + in[wrap(r - 3, nf)]);
    out[k] = 0.5 * s;
  }
}

void TransferPair::c2f_mid(const double* in, double* out) const {
  if (identity) {
    std::memcpy(out, in, size_t(nc) * sizeof(double));
    return;
  }
  // Fine cell centers sit a quarter spacing either side of the coarse
  // center; quadratic interpolation through the three nearest coarse
  // centers gives the 5/32, 15/16, -3/32 weights.
  for (int k = 0; k < nc; ++k) {
    double a = in[wrap(k - 1, nc)];
    double b = in[k];
    double c = in[wrap(k + 1, nc)];
    out[2 * k] = (5.0 / 32.0) * a + (15.0 / 16.0) * b - (3.0 / 32.0) * c;
    out[2 * k + 1] = -(3.0 / 32.0) * a + (15.0 / 16.0) * b + (5.0 / 32.0) * c;
  }
}

void TransferPair::f2c_mid(const double* in, double* out) const {
  if (identity) {
    std::memcpy(out, in, size_t(nc) * sizeof(double));
    return;
  }
  for (int k = 0; k < nc; ++k) {
    int r = 2 * k;
    double s = (15.0 / 16.0) * (in[r] + in[wrap(r + 1, nf)]) +
               (5.0 / 32.0) * (in[wrap(r + 2, nf)] + in[wrap(r - 1, nf)]) -
               (3.0 / 32.0) * (in[wrap(r + 3, nf)] + in[wrap(r - 2, nf)]);
    out[k] = 0.5 * s;
  }
}

TransferPair build_transfer_pair(int nc, double dxc, int ratio) {
  if (ratio != 1 && ratio != 2)
    throw std::invalid_argument("transfer ratio must be 1 or 2");
  if (nc < 4)
    throw std::invalid_argument("transfer needs at least 4 coarse points");
  if (!(dxc > 0.0)) throw std::invalid_argument("transfer spacing must be positive");
  TransferPair t;
  t.nc = nc;
  t.nf = nc * ratio;
  t.dxc = dxc;
  t.dxf = dxc / ratio;
  t.identity = (ratio == 1);
  return t;
}

namespace {

using Apply = void (TransferPair::*)(const double*, double*) const;

// Assemble the dense matrix of a line operator by applying it to unit vectors.
std::vector<double> dense(const TransferPair& t, Apply op, int n_in, int n_out) {
  std::vector<double> in(n_in, 0.0), out(n_out), mat(size_t(n_out) * n_in);
  for (int c = 0; c < n_in; ++c) {
    in[c] = 1.0;
    (t.*op)(in.data(), out.data());
    in[c] = 0.0;
    for (int r = 0; r < n_out; ++r) mat[size_t(r) * n_in + c] = out[r];
  }
  return mat;
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

}  // namespace

OperatorReport verify_transfer(const TransferPair& t) {
  OperatorReport rep;
  struct Variant {
    const char* name;
    Apply up;
    Apply down;
  };
  const Variant variants[] = {
      {"nodes", &TransferPair::c2f_nodes, &TransferPair::f2c_nodes},
      {"mid", &TransferPair::c2f_mid, &TransferPair::f2c_mid},
  };
  int ratio = t.nf / t.nc;

  for (const auto& var : variants) {
    std::string pre = std::string("transfer.") + var.name + ".";
    auto up = dense(t, var.up, t.nc, t.nf);
    auto down = dense(t, var.down, t.nf, t.nc);

    // f2c must be the (dxf/dxc)-scaled transpose of c2f, exactly.
    std::vector<double> diff(up.size());
    double scale = t.dxf / t.dxc;
    for (int r = 0; r < t.nf; ++r)
      for (int c = 0; c < t.nc; ++c)
        diff[size_t(r) * t.nc + c] =
            down[size_t(c) * t.nf + r] - scale * up[size_t(r) * t.nc + c];
    rep.add(pre + "adjoint", max_abs(diff), 0.0);

    // Both directions reproduce constants.
    {
      std::vector<double> ones_c(t.nc, 1.0), ones_f(t.nf, 1.0);
      std::vector<double> outf(t.nf), outc(t.nc);
      (t.*var.up)(ones_c.data(), outf.data());
      (t.*var.down)(ones_f.data(), outc.data());
      double e = 0.0;
      for (double x : outf) e = std::max(e, std::fabs(x - 1.0));
      for (double x : outc) e = std::max(e, std::fabs(x - 1.0));
      rep.add(pre + "constants", e, 1e-15);
    }

    if (ratio == 2) {
      // Polynomial exactness away from the periodic wrap. Node
      // prolongation is cubic interpolation; mid prolongation quadratic;
      // both restrictions are cubic-exact by symmetry of their weights.
      bool nodes = std::string(var.name) == "nodes";
      double half = nodes ? 0.0 : 0.5;
      auto poly = [](double x, int deg) {
        double s = 0.0, p = 1.0;
        for (int d = 0; d <= deg; ++d, p *= x) s += (d + 1) * p;
        return s;
      };
      int deg_up = nodes ? 3 : 2;
      {
        std::vector<double> in(t.nc), out(t.nf);
        for (int k = 0; k < t.nc; ++k) in[k] = poly((k + half) * t.dxc, deg_up);
        (t.*var.up)(in.data(), out.data());
        double e = 0.0;
        // skip fine points whose stencil wraps
        for (int r = 4; r < t.nf - 4; ++r)
          e = std::max(e, std::fabs(out[r] - poly((r + half) * t.dxf, deg_up)));
        rep.add(pre + "c2f_poly", e, 1e-12 * std::max(1.0, std::pow(t.nc * t.dxc, double(deg_up))));
      }
      {
        std::vector<double> in(t.nf), out(t.nc);
        for (int r = 0; r < t.nf; ++r) in[r] = poly((r + half) * t.dxf, 3);
        (t.*var.down)(in.data(), out.data());
        double e = 0.0;
        for (int k = 2; k < t.nc - 2; ++k)
          e = std::max(e, std::fabs(out[k] - poly((k + half) * t.dxc, 3)));
        rep.add(pre + "f2c_poly", e, 1e-12 * std::max(1.0, std::pow(t.nc * t.dxc, 3.0)));
      }
    }
  }
  return rep;
}

}  // namespace elwave

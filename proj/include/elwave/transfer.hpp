#pragma once

#include "elwave/operators1d.hpp"

namespace elwave {

// Grid transfer along a periodic x-line between a coarse grid (nc points,
// spacing dxc) and a fine grid (nf points, spacing dxf), nf/nc in {1, 2}.
//
// Two variants, matching the two staggered x-families:
//   nodes: points at i*dx        (fine even points coincide with coarse)
//   mid:   points at (i + 1/2)*dx (no coincident points at ratio 2)
//
// Prolongation preserves constants (row sums 1); restriction is the scaled
// transpose f2c = (dxf/dxc) * c2f^T, so the weighted-inner-product adjoint
// relation holds exactly. All weights are dyadic rationals, which makes the
// transpose relation exact in floating point as well, not just in theory.
struct TransferPair {
  int nc = 0;
  int nf = 0;
  double dxc = 0.0;
  double dxf = 0.0;
  bool identity = true;  // ratio 1: every operator is a copy

  void c2f_nodes(const double* in, double* out) const;
  void f2c_nodes(const double* in, double* out) const;
  void c2f_mid(const double* in, double* out) const;
  void f2c_mid(const double* in, double* out) const;
};

// ratio must be 1 or 2; nc >= 4 so the widest stencil fits without
// self-overlap under periodic wrap.
TransferPair build_transfer_pair(int nc, double dxc, int ratio);

// Dense re-assembly checks: transpose pairing, constant preservation, and
// interpolation accuracy on polynomial data.
OperatorReport verify_transfer(const TransferPair& t);

}  // namespace elwave

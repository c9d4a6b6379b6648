#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "elwave/rational.hpp"

namespace elwave {

// Fourth-order staggered difference pair on a periodic axis. Both grids have
// n points: node grid at i*dx, midpoint grid at (i+1/2)*dx. m2n rows take the
// four midpoint values straddling a node (offsets -2..+1), n2m rows take the
// four node values straddling a midpoint (offsets -1..+2). Coefficients are
// stored undivided; applications scale by 1/dx.
struct PeriodicOps {
  int n = 0;
  double dx = 1.0;
  std::array<double, 4> m2n{};
  std::array<double, 4> n2m{};

  // Single-line applications (in and out both length n).
  void apply_m2n(const double* in, double* out) const;
  void apply_n2m(const double* in, double* out) const;
};

PeriodicOps build_periodic_ops(int n, double dx);

// Rational boundary closure for the bounded axis, derived once per accuracy
// target and cached. Tables are for unit spacing and the left (low-index)
// boundary; the right closure is the mirror image with negated derivative
// entries. block_rows rows of each derivative matrix are replaced next to the
// boundary; boundary rows of dM span M columns [0, cols_m), rows of dN span N
// columns [0, cols_n).
struct BoundedTables {
  int qb_requested = 0, qp_requested = 0;
  int qb = 0, qp = 0;  // achieved accuracy (boundary rows / projection)
  bool fallback = false;
  int block_rows = 4;
  int cols_m = 6;
  int cols_n = 6;
  int proj_width = 4;
  RatMat dM_left;   // block_rows x cols_m
  RatMat dN_left;   // block_rows x cols_n
  RatVec aN_left;   // block_rows
  RatVec aM_left;   // block_rows
  RatVec pL;        // proj_width
};

// Derives (and caches) the closure achieving the best ladder entry at or
// below the requested pair. Ladder: (2,2) -> (2,1) -> (1,1). Throws
// std::runtime_error if nothing on the ladder is feasible.
std::shared_ptr<const BoundedTables> bounded_closure_tables(int qb = 2, int qp = 2);

// One row of a bounded difference matrix: taps at columns
// [col0, col0 + w.size()).
struct BoundedRow {
  int col0 = 0;
  std::vector<double> w;
};

// Assembled bounded-axis operator set for nN node points (nM = nN - 1
// midpoints) with spacing dy. aN/aM are the quadrature weights (spacing
// included); derivative rows are scaled by 1/dy. pL projects the first
// proj_width midpoint values to the low boundary; pR the last proj_width to
// the high boundary (pR[k] pairs with row nM - proj_width + k).
struct BoundedOps {
  int nN = 0, nM = 0;
  double dy = 1.0;
  int qb = 0, qp = 0;
  bool fallback = false;
  int proj_width = 0;
  std::vector<double> aN, aM;
  std::vector<BoundedRow> dM_rows;  // nN rows, inputs on the midpoint grid
  std::vector<BoundedRow> dN_rows;  // nM rows, inputs on the node grid
  std::vector<double> pL, pR;
  std::shared_ptr<const BoundedTables> tables;

  void apply_m2n(const double* in, double* out) const;  // in: nM, out: nN
  void apply_n2m(const double* in, double* out) const;  // in: nN, out: nM
};

// Requires nN >= 9 so the two boundary blocks occupy distinct rows.
BoundedOps derive_bounded_ops(int nN, double dy, int qb = 2, int qp = 2);

// Exact unit-spacing assembly used by verification and tests.
struct BoundedRational {
  RatMat dM;  // nN x nM
  RatMat dN;  // nM x nN
  RatVec aN, aM;
  RatVec pL, pR;  // length nM, zero outside the projection support
};
BoundedRational assemble_bounded_rational(const BoundedTables& tab, int nN);

struct CheckEntry {
  std::string name;
  double residual = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

struct OperatorReport {
  std::vector<CheckEntry> entries;
  bool all_pass = true;

  void add(const std::string& name, double residual, double threshold);
  std::string summary() const;
};

OperatorReport verify_ops(const PeriodicOps& ops);
OperatorReport verify_ops(const BoundedOps& ops);

// Plain-text rational dump of the assembled unit-spacing operator set
// (regression golden / documentation). One line per matrix row, p/q tokens.
std::string dump_bounded_tables(const BoundedTables& tab, int nN);

}  // namespace elwave

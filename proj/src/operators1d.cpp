#include "elwave/operators1d.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "elwave/ratsolve.hpp"

namespace elwave {

namespace {

// Interior staggered stencil, exact for cubics (midpoint symmetry also kills
// the quartic term). Taps are consecutive source points around the target.
constexpr std::array<double, 4> kStencil{1.0 / 24.0, -9.0 / 8.0, 9.0 / 8.0, -1.0 / 24.0};

const std::array<Rational, 4>& stencil_rat() {
  static const std::array<Rational, 4> s{Rational(1, 24), Rational(-9, 8), Rational(9, 8),
                                         Rational(-1, 24)};
  return s;
}

Rational rat_pow(const Rational& base, int e) {
  Rational r(1);
  for (int k = 0; k < e; ++k) r *= base;
  return r;
}

// d/dy of y^d evaluated at y (exact).
Rational monomial_derivative(int d, const Rational& y) {
  if (d == 0) return Rational(0);
  return Rational(d) * rat_pow(y, d - 1);
}

}  // namespace

// ---------------------------------------------------------------------------
// Periodic operators

PeriodicOps build_periodic_ops(int n, double dx) {
  if (n < 5) throw std::invalid_argument("periodic axis needs at least 5 points");
  if (!(dx > 0.0)) throw std::invalid_argument("dx must be positive");
  PeriodicOps ops;
  ops.n = n;
  ops.dx = dx;
  ops.m2n = kStencil;
  ops.n2m = kStencil;
  return ops;
}

void PeriodicOps::apply_m2n(const double* in, double* out) const {
  const double w0 = m2n[0] / dx, w1 = m2n[1] / dx, w2 = m2n[2] / dx, w3 = m2n[3] / dx;
  // Node i reads midpoints i-2..i+1.
  for (int i = 0; i < 2; ++i)
    out[i] = w0 * in[(i - 2 + n) % n] + w1 * in[(i - 1 + n) % n] + w2 * in[i] + w3 * in[(i + 1) % n];
  for (int i = 2; i < n - 1; ++i)
    out[i] = w0 * in[i - 2] + w1 * in[i - 1] + w2 * in[i] + w3 * in[i + 1];
  if (n >= 3) {
    const int i = n - 1;
    out[i] = w0 * in[i - 2] + w1 * in[i - 1] + w2 * in[i] + w3 * in[0];
  }
}

void PeriodicOps::apply_n2m(const double* in, double* out) const {
  const double w0 = n2m[0] / dx, w1 = n2m[1] / dx, w2 = n2m[2] / dx, w3 = n2m[3] / dx;
  // Midpoint j reads nodes j-1..j+2.
  out[0] = w0 * in[n - 1] + w1 * in[0] + w2 * in[1] + w3 * in[2];
  for (int j = 1; j < n - 2; ++j)
    out[j] = w0 * in[j - 1] + w1 * in[j] + w2 * in[j + 1] + w3 * in[j + 2];
  for (int j = std::max(1, n - 2); j < n; ++j)
    out[j] = w0 * in[j - 1] + w1 * in[j] + w2 * in[(j + 1) % n] + w3 * in[(j + 2) % n];
}

// ---------------------------------------------------------------------------
// Bounded closure derivation

namespace {

constexpr int kB = 4;   // boundary rows replaced per side
constexpr int kCM = 6;  // column support of dM boundary rows
constexpr int kCN = 6;  // column support of dN boundary rows
constexpr int kW = 4;   // projection support

// Fixed interior entries of the weighted matrices (unit weights away from the
// boundary). Valid for dM rows i >= kB and dN rows j >= kB.
Rational qm_fixed(int i, int j) {
  const int k = j - i + 2;
  return (k >= 0 && k < 4) ? stencil_rat()[k] : Rational(0);
}
Rational qn_fixed(int j, int i) {
  const int k = i - j + 1;
  return (k >= 0 && k < 4) ? stencil_rat()[k] : Rational(0);
}

struct Unknowns {
  static constexpr int qm0 = 0;
  static constexpr int qn0 = kB * kCM;
  static constexpr int aN0 = qn0 + kB * kCN;
  static constexpr int aM0 = aN0 + kB;
  static constexpr int pL0 = aM0 + kB;
  static constexpr int total = pL0 + kW;

  static int qm(int i, int j) { return qm0 + i * kCM + j; }
  static int qn(int j, int i) { return qn0 + j * kCN + i; }
  static int aN(int i) { return aN0 + i; }
  static int aM(int j) { return aM0 + j; }
  static int pL(int j) { return pL0 + j; }
};

// Assembles and solves the left-boundary closure for one accuracy pair.
// Returns nullopt when the constraint system is inconsistent or the resulting
// norm weights are not positive.
std::optional<BoundedTables> try_derive(int qb, int qp) {
  using U = Unknowns;
  RatMat A;
  RatVec b;
  auto add_row = [&](RatVec&& row, Rational rhs) {
    A.push_back(std::move(row));
    b.push_back(std::move(rhs));
  };
  auto zero_row = [] { return RatVec(U::total, Rational(0)); };

  // Summation-by-parts identity around the left boundary:
  // Q^M(i,j) + Q^N(j,i) = -delta_{i,0} pL_j, with Q = A*D.
  for (int i = 0; i < kB; ++i) {
    for (int j = 0; j < kCM; ++j) {
      auto row = zero_row();
      row[U::qm(i, j)] = 1;
      Rational rhs(0);
      if (j < kB)
        row[U::qn(j, i)] = 1;
      else
        rhs -= qn_fixed(j, i);
      if (i == 0 && j < kW) row[U::pL(j)] = 1;
      add_row(std::move(row), rhs);
    }
  }
  // Tail of the boundary dN rows against interior dM rows.
  for (int j = 0; j < kB; ++j) {
    for (int i = kB; i < kCN; ++i) {
      auto row = zero_row();
      row[U::qn(j, i)] = 1;
      add_row(std::move(row), -qm_fixed(i, j));
    }
  }

  // Boundary-row accuracy, dM: rows differentiate midpoint data exactly for
  // y^d, d <= qb. Q-form keeps the norm weights linear unknowns.
  for (int i = 0; i < kB; ++i) {
    for (int d = 0; d <= qb; ++d) {
      auto row = zero_row();
      for (int j = 0; j < kCM; ++j) row[U::qm(i, j)] = rat_pow(Rational(2 * j + 1, 2), d);
      row[U::aN(i)] = -monomial_derivative(d, Rational(i));
      add_row(std::move(row), Rational(0));
    }
  }
  // Boundary-row accuracy, dN (node data, midpoint targets).
  for (int j = 0; j < kB; ++j) {
    for (int d = 0; d <= qb; ++d) {
      auto row = zero_row();
      for (int i = 0; i < kCN; ++i) row[U::qn(j, i)] = rat_pow(Rational(i), d);
      row[U::aM(j)] = -monomial_derivative(d, Rational(2 * j + 1, 2));
      add_row(std::move(row), Rational(0));
    }
  }

  // Projection accuracy: extrapolation of midpoint data to y = 0.
  for (int d = 0; d <= qp; ++d) {
    auto row = zero_row();
    for (int j = 0; j < kW; ++j) row[U::pL(j)] = rat_pow(Rational(2 * j + 1, 2), d);
    add_row(std::move(row), d == 0 ? Rational(1) : Rational(0));
  }

  // Quadrature totals: boundary weights absorb what the unit interior misses.
  {
    auto row = zero_row();
    for (int i = 0; i < kB; ++i) row[U::aN(i)] = 1;
    add_row(std::move(row), Rational(7, 2));
  }
  {
    auto row = zero_row();
    for (int j = 0; j < kB; ++j) row[U::aM(j)] = 1;
    add_row(std::move(row), Rational(4));
  }

  auto space = solve_affine(A, b);
  if (!space) return std::nullopt;

  // Tiebreak 1: smallest boundary-block entries (weighted form).
  QuadraticObjective block_obj;
  for (int k = U::qm0; k < U::aN0; ++k) {
    RatVec row(U::total, Rational(0));
    row[k] = 1;
    block_obj.C.push_back(std::move(row));
    block_obj.d.push_back(Rational(0));
  }
  // Tiebreak 2: stay near the nominal closure (unit weights, two-point
  // extrapolation); strictly convex, so the result is unique.
  QuadraticObjective nominal_obj;
  RatVec nominal(U::total, Rational(0));
  for (int i = 0; i < kB; ++i) nominal[U::aN(i)] = 1;
  for (int j = 0; j < kB; ++j) nominal[U::aM(j)] = 1;
  nominal[U::pL(0)] = Rational(3, 2);
  nominal[U::pL(1)] = Rational(-1, 2);
  for (int k = 0; k < U::total; ++k) {
    RatVec row(U::total, Rational(0));
    row[k] = 1;
    nominal_obj.C.push_back(std::move(row));
    nominal_obj.d.push_back(nominal[k]);
  }

  *space = minimize_on(*space, block_obj);
  if (space->dim() > 0) *space = minimize_on(*space, nominal_obj);
  if (space->dim() != 0) return std::nullopt;
  const RatVec& x = space->origin;

  for (int i = 0; i < kB; ++i)
    if (!(x[U::aN(i)] > 0) || !(x[U::aM(i)] > 0)) return std::nullopt;

  BoundedTables tab;
  tab.qb = qb;
  tab.qp = qp;
  tab.block_rows = kB;
  tab.cols_m = kCM;
  tab.cols_n = kCN;
  tab.proj_width = kW;
  tab.aN_left.resize(kB);
  tab.aM_left.resize(kB);
  tab.pL.resize(kW);
  tab.dM_left = rat_zeros(kB, kCM);
  tab.dN_left = rat_zeros(kB, kCN);
  for (int i = 0; i < kB; ++i) tab.aN_left[i] = x[U::aN(i)];
  for (int j = 0; j < kB; ++j) tab.aM_left[j] = x[U::aM(j)];
  for (int j = 0; j < kW; ++j) tab.pL[j] = x[U::pL(j)];
  for (int i = 0; i < kB; ++i)
    for (int j = 0; j < kCM; ++j) tab.dM_left[i][j] = x[U::qm(i, j)] / tab.aN_left[i];
  for (int j = 0; j < kB; ++j)
    for (int i = 0; i < kCN; ++i) tab.dN_left[j][i] = x[U::qn(j, i)] / tab.aM_left[j];
  return tab;
}

// Exact verification of an assembled operator set: SBP identity, row
// accuracy, projection accuracy, quadrature totals, positivity.
bool verify_tables_exact(const BoundedTables& tab, int nN) {
  const auto ops = assemble_bounded_rational(tab, nN);
  const int nM = nN - 1;

  for (int i = 0; i < nN; ++i) {
    for (int j = 0; j < nM; ++j) {
      Rational lhs = ops.aN[i] * ops.dM[i][j] + ops.aM[j] * ops.dN[j][i];
      Rational rhs(0);
      if (i == nN - 1) rhs += ops.pR[j];
      if (i == 0) rhs -= ops.pL[j];
      if (lhs != rhs) return false;
    }
  }

  auto mid = [](int j) { return Rational(2 * j + 1, 2); };
  for (int i = 0; i < nN; ++i) {
    const bool boundary = i < tab.block_rows || i >= nN - tab.block_rows;
    const int dmax = boundary ? tab.qb : 3;
    for (int d = 0; d <= dmax; ++d) {
      Rational acc(0);
      for (int j = 0; j < nM; ++j) acc += ops.dM[i][j] * rat_pow(mid(j), d);
      if (acc != monomial_derivative(d, Rational(i))) return false;
    }
  }
  for (int j = 0; j < nM; ++j) {
    const bool boundary = j < tab.block_rows || j >= nM - tab.block_rows;
    const int dmax = boundary ? tab.qb : 3;
    for (int d = 0; d <= dmax; ++d) {
      Rational acc(0);
      for (int i = 0; i < nN; ++i) acc += ops.dN[j][i] * rat_pow(Rational(i), d);
      if (acc != monomial_derivative(d, mid(j))) return false;
    }
  }

  for (int d = 0; d <= tab.qp; ++d) {
    Rational accL(0), accR(0);
    for (int j = 0; j < nM; ++j) {
      accL += ops.pL[j] * rat_pow(mid(j), d);
      accR += ops.pR[j] * rat_pow(mid(j), d);
    }
    if (accL != (d == 0 ? Rational(1) : Rational(0))) return false;
    if (accR != rat_pow(Rational(nN - 1), d)) return false;
  }

  Rational sN(0), sM(0);
  for (int i = 0; i < nN; ++i) {
    if (!(ops.aN[i] > 0)) return false;
    sN += ops.aN[i];
  }
  for (int j = 0; j < nM; ++j) {
    if (!(ops.aM[j] > 0)) return false;
    sM += ops.aM[j];
  }
  return sN == Rational(nN - 1) && sM == Rational(nN - 1);
}

}  // namespace

std::shared_ptr<const BoundedTables> bounded_closure_tables(int qb, int qp) {
  if (qb < 1 || qp < 1) throw std::invalid_argument("accuracy targets must be >= 1");

  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const BoundedTables>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({qb, qp});
  if (it != cache.end()) return it->second;

  std::vector<std::pair<int, int>> candidates{{qb, qp}};
  for (auto [lb, lp] : {std::pair{2, 2}, std::pair{2, 1}, std::pair{1, 1}})
    if (lb <= qb && lp <= qp && !(lb == qb && lp == qp)) candidates.emplace_back(lb, lp);

  for (auto [cb, cp] : candidates) {
    auto tab = try_derive(cb, cp);
    if (!tab) continue;
    // Exact checks at the minimum size (touching blocks), the first size with
    // interior rows in both matrices, and a generic size.
    if (!verify_tables_exact(*tab, 9) || !verify_tables_exact(*tab, 10) ||
        !verify_tables_exact(*tab, 17))
      continue;
    tab->qb_requested = qb;
    tab->qp_requested = qp;
    tab->fallback = (cb != qb || cp != qp);
    auto shared = std::make_shared<const BoundedTables>(std::move(*tab));
    cache[{qb, qp}] = shared;
    return shared;
  }
  throw std::runtime_error("no feasible bounded closure for the requested accuracy ladder");
}

BoundedRational assemble_bounded_rational(const BoundedTables& tab, int nN) {
  if (nN < 9) throw std::invalid_argument("bounded axis needs at least 9 node points");
  const int nM = nN - 1;
  const int b = tab.block_rows;
  BoundedRational ops;
  ops.dM = rat_zeros(nN, nM);
  ops.dN = rat_zeros(nM, nN);
  ops.aN.assign(nN, Rational(1));
  ops.aM.assign(nM, Rational(1));
  ops.pL.assign(nM, Rational(0));
  ops.pR.assign(nM, Rational(0));

  for (int i = 0; i < b; ++i) {
    ops.aN[i] = tab.aN_left[i];
    ops.aN[nN - 1 - i] = tab.aN_left[i];
    ops.aM[i] = tab.aM_left[i];
    ops.aM[nM - 1 - i] = tab.aM_left[i];
  }
  for (int j = 0; j < tab.proj_width; ++j) {
    ops.pL[j] = tab.pL[j];
    ops.pR[nM - 1 - j] = tab.pL[j];
  }

  for (int i = 0; i < nN; ++i) {
    if (i < b) {
      for (int j = 0; j < tab.cols_m; ++j) ops.dM[i][j] = tab.dM_left[i][j];
    } else if (i >= nN - b) {
      for (int j = 0; j < tab.cols_m; ++j) ops.dM[i][nM - 1 - j] = -tab.dM_left[nN - 1 - i][j];
    } else {
      for (int k = 0; k < 4; ++k) ops.dM[i][i - 2 + k] = stencil_rat()[k];
    }
  }
  for (int j = 0; j < nM; ++j) {
    if (j < b) {
      for (int i = 0; i < tab.cols_n; ++i) ops.dN[j][i] = tab.dN_left[j][i];
    } else if (j >= nM - b) {
      for (int i = 0; i < tab.cols_n; ++i) ops.dN[j][nN - 1 - i] = -tab.dN_left[nM - 1 - j][i];
    } else {
      for (int k = 0; k < 4; ++k) ops.dN[j][j - 1 + k] = stencil_rat()[k];
    }
  }
  return ops;
}

BoundedOps derive_bounded_ops(int nN, double dy, int qb, int qp) {
  if (nN < 9) throw std::invalid_argument("bounded axis needs at least 9 node points");
  if (!(dy > 0.0)) throw std::invalid_argument("dy must be positive");
  auto tab = bounded_closure_tables(qb, qp);
  const auto exact = assemble_bounded_rational(*tab, nN);
  const int nM = nN - 1;
  const int b = tab->block_rows;

  BoundedOps ops;
  ops.nN = nN;
  ops.nM = nM;
  ops.dy = dy;
  ops.qb = tab->qb;
  ops.qp = tab->qp;
  ops.fallback = tab->fallback;
  ops.proj_width = tab->proj_width;
  ops.tables = tab;

  ops.aN.resize(nN);
  ops.aM.resize(nM);
  for (int i = 0; i < nN; ++i) ops.aN[i] = to_double(exact.aN[i]) * dy;
  for (int j = 0; j < nM; ++j) ops.aM[j] = to_double(exact.aM[j]) * dy;

  ops.pL.resize(tab->proj_width);
  ops.pR.resize(tab->proj_width);
  for (int j = 0; j < tab->proj_width; ++j) {
    ops.pL[j] = to_double(exact.pL[j]);
    ops.pR[j] = to_double(exact.pR[nM - tab->proj_width + j]);
  }

  ops.dM_rows.resize(nN);
  for (int i = 0; i < nN; ++i) {
    BoundedRow row;
    if (i < b) {
      row.col0 = 0;
      row.w.resize(tab->cols_m);
      for (int j = 0; j < tab->cols_m; ++j) row.w[j] = to_double(exact.dM[i][j]) / dy;
    } else if (i >= nN - b) {
      row.col0 = nM - tab->cols_m;
      row.w.resize(tab->cols_m);
      for (int j = 0; j < tab->cols_m; ++j) row.w[j] = to_double(exact.dM[i][row.col0 + j]) / dy;
    } else {
      row.col0 = i - 2;
      row.w = {kStencil[0] / dy, kStencil[1] / dy, kStencil[2] / dy, kStencil[3] / dy};
    }
    ops.dM_rows[i] = std::move(row);
  }
  ops.dN_rows.resize(nM);
  for (int j = 0; j < nM; ++j) {
    BoundedRow row;
    if (j < b) {
      row.col0 = 0;
      row.w.resize(tab->cols_n);
      for (int i = 0; i < tab->cols_n; ++i) row.w[i] = to_double(exact.dN[j][i]) / dy;
    } else if (j >= nM - b) {
      row.col0 = nN - tab->cols_n;
      row.w.resize(tab->cols_n);
      for (int i = 0; i < tab->cols_n; ++i) row.w[i] = to_double(exact.dN[j][row.col0 + i]) / dy;
    } else {
      row.col0 = j - 1;
      row.w = {kStencil[0] / dy, kStencil[1] / dy, kStencil[2] / dy, kStencil[3] / dy};
    }
    ops.dN_rows[j] = std::move(row);
  }
  return ops;
}

void BoundedOps::apply_m2n(const double* in, double* out) const {
  for (int i = 0; i < nN; ++i) {
    const auto& row = dM_rows[i];
    double acc = 0.0;
    for (std::size_t k = 0; k < row.w.size(); ++k) acc += row.w[k] * in[row.col0 + (int)k];
    out[i] = acc;
  }
}

void BoundedOps::apply_n2m(const double* in, double* out) const {
  for (int j = 0; j < nM; ++j) {
    const auto& row = dN_rows[j];
    double acc = 0.0;
    for (std::size_t k = 0; k < row.w.size(); ++k) acc += row.w[k] * in[row.col0 + (int)k];
    out[j] = acc;
  }
}

// ---------------------------------------------------------------------------
// Verification reports

void OperatorReport::add(const std::string& name, double residual, double threshold) {
  const bool pass = residual <= threshold;
  entries.push_back({name, residual, threshold, pass});
  all_pass = all_pass && pass;
}

std::string OperatorReport::summary() const {
  std::ostringstream os;
  for (const auto& e : entries) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%-34s %-4s residual=%.3e threshold=%.3e\n", e.name.c_str(),
                  e.pass ? "ok" : "FAIL", e.residual, e.threshold);
    os << buf;
  }
  return os.str();
}

OperatorReport verify_ops(const PeriodicOps& ops) {
  OperatorReport rep;
  const int n = ops.n;

  // dx*dM + (dx*dN)^T should vanish entry by entry; both matrices are
  // circulant so it is enough to scan one period of offsets.
  double ident = 0.0;
  for (int off = 0; off < n; ++off) {
    double dm = 0.0, dn = 0.0;
    // dM(i, i+k) has stencil index k+2; dN(j, j+k) index k+1.
    const int k_m = off <= n / 2 ? off : off - n;
    if (k_m >= -2 && k_m <= 1) dm = ops.m2n[k_m + 2] / ops.dx;
    // (dN)^T(i, j) = dN(j, i): offset i - j = off -> stencil index off+1.
    const int k_n = off <= n / 2 ? off : off - n;
    if (-k_n >= -1 && -k_n <= 2) dn = ops.n2m[-k_n + 1] / ops.dx;
    ident = std::max(ident, std::abs(ops.dx * dm + ops.dx * dn));
  }
  rep.add("periodic.sbp_identity", ident, 1e-14 / ops.dx);

  double rowsum = 0.0;
  for (double c : {ops.m2n[0] + ops.m2n[1] + ops.m2n[2] + ops.m2n[3],
                   ops.n2m[0] + ops.n2m[1] + ops.n2m[2] + ops.n2m[3]})
    rowsum = std::max(rowsum, std::abs(c) / ops.dx);
  rep.add("periodic.row_sums", rowsum, 1e-14 / ops.dx);

  // Polynomial exactness on rows whose taps do not wrap.
  for (int d = 0; d <= 3; ++d) {
    double resid = 0.0, scale = 1.0;
    std::vector<double> fm(n), fn(n), out(n);
    for (int i = 0; i < n; ++i) {
      fn[i] = std::pow(i * ops.dx, d);
      fm[i] = std::pow((i + 0.5) * ops.dx, d);
      scale = std::max({scale, std::abs(fn[i]), std::abs(fm[i])});
    }
    ops.apply_m2n(fm.data(), out.data());
    for (int i = 2; i <= n - 2; ++i) {
      const double expect = d == 0 ? 0.0 : d * std::pow(i * ops.dx, d - 1);
      resid = std::max(resid, std::abs(out[i] - expect));
    }
    ops.apply_n2m(fn.data(), out.data());
    for (int j = 1; j <= n - 3; ++j) {
      const double expect = d == 0 ? 0.0 : d * std::pow((j + 0.5) * ops.dx, d - 1);
      resid = std::max(resid, std::abs(out[j] - expect));
    }
    rep.add("periodic.exact_degree_" + std::to_string(d), resid, 1e-11 * scale / ops.dx);
  }
  return rep;
}

OperatorReport verify_ops(const BoundedOps& ops) {
  OperatorReport rep;
  const int nN = ops.nN, nM = ops.nM;
  const double dy = ops.dy;

  auto dM_at = [&](int i, int j) -> double {
    const auto& row = ops.dM_rows[i];
    const int k = j - row.col0;
    return (k >= 0 && k < (int)row.w.size()) ? row.w[k] : 0.0;
  };
  auto dN_at = [&](int j, int i) -> double {
    const auto& row = ops.dN_rows[j];
    const int k = i - row.col0;
    return (k >= 0 && k < (int)row.w.size()) ? row.w[k] : 0.0;
  };
  auto pL_at = [&](int j) { return j < ops.proj_width ? ops.pL[j] : 0.0; };
  auto pR_at = [&](int j) {
    const int k = j - (nM - ops.proj_width);
    return k >= 0 ? ops.pR[k] : 0.0;
  };

  double ident = 0.0;
  for (int i = 0; i < nN; ++i)
    for (int j = 0; j < nM; ++j) {
      double lhs = ops.aN[i] * dM_at(i, j) + ops.aM[j] * dN_at(j, i);
      double rhs = (i == nN - 1 ? pR_at(j) : 0.0) - (i == 0 ? pL_at(j) : 0.0);
      ident = std::max(ident, std::abs(lhs - rhs));
    }
  rep.add("bounded.sbp_identity", ident, 1e-13 / dy);

  double minw = ops.aN[0];
  for (double v : ops.aN) minw = std::min(minw, v);
  for (double v : ops.aM) minw = std::min(minw, v);
  rep.add("bounded.norm_positivity", minw > 0.0 ? 0.0 : 1.0, 0.5);

  const double L = (nN - 1) * dy;
  double sN = 0.0, sM = 0.0;
  for (double v : ops.aN) sN += v;
  for (double v : ops.aM) sM += v;
  rep.add("bounded.norm_sum", std::max(std::abs(sN - L), std::abs(sM - L)), 1e-12 * std::max(1.0, L));

  const int b = ops.tables ? ops.tables->block_rows : 4;
  for (int d = 0; d <= 3; ++d) {
    std::vector<double> fm(nM), fn(nN), out(std::max(nN, nM));
    double scale = 1.0;
    for (int j = 0; j < nM; ++j) {
      fm[j] = std::pow((j + 0.5) * dy, d);
      scale = std::max(scale, std::abs(fm[j]));
    }
    for (int i = 0; i < nN; ++i) {
      fn[i] = std::pow(i * dy, d);
      scale = std::max(scale, std::abs(fn[i]));
    }
    const double thresh = 1e-11 * scale / dy;

    double resid_int = 0.0, resid_bnd = 0.0;
    ops.apply_m2n(fm.data(), out.data());
    for (int i = 0; i < nN; ++i) {
      const double expect = d == 0 ? 0.0 : d * std::pow(i * dy, d - 1);
      const double r = std::abs(out[i] - expect);
      if (i < b || i >= nN - b)
        resid_bnd = std::max(resid_bnd, r);
      else
        resid_int = std::max(resid_int, r);
    }
    ops.apply_n2m(fn.data(), out.data());
    for (int j = 0; j < nM; ++j) {
      const double expect = d == 0 ? 0.0 : d * std::pow((j + 0.5) * dy, d - 1);
      const double r = std::abs(out[j] - expect);
      if (j < b || j >= nM - b)
        resid_bnd = std::max(resid_bnd, r);
      else
        resid_int = std::max(resid_int, r);
    }
    rep.add("bounded.interior_degree_" + std::to_string(d), resid_int, thresh);
    if (d <= ops.qb) rep.add("bounded.boundary_degree_" + std::to_string(d), resid_bnd, thresh);
  }

  for (int d = 0; d <= ops.qp; ++d) {
    double accL = 0.0, accR = 0.0, scale = 1.0;
    for (int k = 0; k < ops.proj_width; ++k) {
      accL += ops.pL[k] * std::pow((k + 0.5) * dy, d);
      const int j = nM - ops.proj_width + k;
      accR += ops.pR[k] * std::pow((j + 0.5) * dy, d);
      scale = std::max(scale, std::pow((j + 0.5) * dy, d));
    }
    const double expectR = std::pow(L, d);
    const double resid = std::max(std::abs(accL - (d == 0 ? 1.0 : 0.0)), std::abs(accR - expectR));
    rep.add("bounded.projection_degree_" + std::to_string(d), resid, 1e-11 * scale);
  }
  return rep;
}

std::string dump_bounded_tables(const BoundedTables& tab, int nN) {
  const auto ops = assemble_bounded_rational(tab, nN);
  const int nM = nN - 1;
  std::ostringstream os;
  os << "bounded-sbp qb=" << tab.qb << " qp=" << tab.qp << " fallback=" << (tab.fallback ? 1 : 0)
     << " nN=" << nN << " (unit spacing)\n";
  auto emit_vec = [&](const char* name, const RatVec& v) {
    os << name;
    for (const auto& q : v) os << ' ' << rat_str(q);
    os << '\n';
  };
  emit_vec("aN", ops.aN);
  emit_vec("aM", ops.aM);
  emit_vec("pL", ops.pL);
  emit_vec("pR", ops.pR);
  for (int i = 0; i < nN; ++i) {
    os << "dM " << i;
    for (int j = 0; j < nM; ++j) os << ' ' << rat_str(ops.dM[i][j]);
    os << '\n';
  }
  for (int j = 0; j < nM; ++j) {
    os << "dN " << j;
    for (int i = 0; i < nN; ++i) os << ' ' << rat_str(ops.dN[j][i]);
    os << '\n';
  }
  return os.str();
}

}  // namespace elwave

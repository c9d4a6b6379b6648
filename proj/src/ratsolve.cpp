#include "elwave/ratsolve.hpp"

#include <cassert>
#include <stdexcept>

namespace elwave {

namespace {

// In-place reduced row echelon form of [A|b]. Returns pivot column indices.
// Exact arithmetic, so pivot choice is first nonzero in the column.
std::vector<std::size_t> rref(RatMat& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    const Rational inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<AffineSpace> solve_affine(const RatMat& A, const RatVec& b) {
  const std::size_t rows = A.size();
  const std::size_t n = rows ? A[0].size() : 0;
  assert(b.size() == rows);

  RatMat aug(rows, RatVec(n + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = A[i][j];
    aug[i][n] = b[i];
  }
  const auto pivots = rref(aug);

  // A pivot in the rhs column means 0 = 1: inconsistent.
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;

  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  AffineSpace s;
  s.origin.assign(n, Rational(0));
  for (std::size_t k = 0; k < pivots.size(); ++k) s.origin[pivots[k]] = aug[k][n];

  s.basis = rat_zeros(n, free_cols.size());
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    const std::size_t fc = free_cols[f];
    s.basis[fc][f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) s.basis[pivots[k]][f] = -aug[k][fc];
  }
  return s;
}

AffineSpace minimize_on(const AffineSpace& space, const QuadraticObjective& obj) {
  const std::size_t n = space.origin.size();
  const std::size_t dof = space.dim();
  if (dof == 0) return space;

  const std::size_t m = obj.C.size();
  assert(m == 0 || obj.C[0].size() == n);
  assert(obj.d.size() == m);

  // M = C * basis, c = C * origin - d; minimize |M t + c|^2.
  RatMat M = rat_zeros(m, dof);
  RatVec c(m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (obj.C[i][j] == 0) continue;
      c[i] += obj.C[i][j] * space.origin[j];
      for (std::size_t f = 0; f < dof; ++f) M[i][f] += obj.C[i][j] * space.basis[j][f];
    }
    c[i] -= obj.d[i];
  }

  // Normal equations (M^T M) t = -M^T c; always consistent.
  RatMat G = rat_zeros(dof, dof);
  RatVec g(dof, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t a = 0; a < dof; ++a) {
      if (M[i][a] == 0) continue;
      g[a] -= M[i][a] * c[i];
      for (std::size_t bcol = a; bcol < dof; ++bcol) G[a][bcol] += M[i][a] * M[i][bcol];
    }
  }
  for (std::size_t a = 0; a < dof; ++a)
    for (std::size_t bcol = 0; bcol < a; ++bcol) G[a][bcol] = G[bcol][a];

  auto tspace = solve_affine(G, g);
  if (!tspace) throw std::logic_error("normal equations inconsistent");

  AffineSpace out;
  out.origin = space.origin;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t f = 0; f < dof; ++f) out.origin[j] += space.basis[j][f] * tspace->origin[f];

  const std::size_t dof2 = tspace->dim();
  out.basis = rat_zeros(n, dof2);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t u = 0; u < dof2; ++u) {
      Rational acc(0);
      for (std::size_t f = 0; f < dof; ++f) acc += space.basis[j][f] * tspace->basis[f][u];
      out.basis[j][u] = acc;
    }
  return out;
}

RatVec lexicographic_least_squares(const RatMat& A, const RatVec& b,
                                   const std::vector<QuadraticObjective>& objectives) {
  auto space = solve_affine(A, b);
  if (!space) throw std::runtime_error("constraint system inconsistent");
  for (const auto& obj : objectives) {
    if (space->dim() == 0) break;
    *space = minimize_on(*space, obj);
  }
  if (space->dim() != 0)
    throw std::logic_error("objectives leave free directions; add a strictly convex final objective");
  return space->origin;
}

}  // namespace elwave

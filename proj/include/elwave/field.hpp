#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace elwave {

// Dense 2D array of doubles, row-major with x fastest: element (i, j) lives
// at v[j*nx + i]. Rows are contiguous x-lines, which is what the periodic
// x-derivatives operate on.
struct Field2D {
  int nx = 0;
  int ny = 0;
  std::vector<double> v;

  Field2D() = default;
  Field2D(int nx_, int ny_) : nx(nx_), ny(ny_), v(size_t(nx_) * ny_, 0.0) {}

  double& operator()(int i, int j) {
    assert(i >= 0 && i < nx && j >= 0 && j < ny);
    return v[size_t(j) * nx + i];
  }
  double operator()(int i, int j) const {
    assert(i >= 0 && i < nx && j >= 0 && j < ny);
    return v[size_t(j) * nx + i];
  }

  double* row(int j) { return v.data() + size_t(j) * nx; }
  const double* row(int j) const { return v.data() + size_t(j) * nx; }

  size_t size() const { return v.size(); }
  void fill(double x) { std::fill(v.begin(), v.end(), x); }
};

// Deterministic summation: recursive pairwise split, independent of any
// threading configuration and much better conditioned than a running sum.
inline double pairwise_sum(const double* x, size_t n) {
  if (n <= 16) {
    double s = 0.0;
    for (size_t i = 0; i < n; ++i) s += x[i];
    return s;
  }
  size_t half = n / 2;
  return pairwise_sum(x, half) + pairwise_sum(x + half, n - half);
}

inline double pairwise_sum(const std::vector<double>& x) {
  return pairwise_sum(x.data(), x.size());
}

}  // namespace elwave

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "elwave/transfer.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

using namespace elwave;

namespace {

std::vector<double> random_vec(int n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> v(n);
  for (double& x : v) x = u(rng);
  return v;
}

// dense matrix of a linear map, column by column
std::vector<std::vector<double>> densify(int nin, int nout,
                                         void (TransferPair::*op)(const double*, double*) const,
                                         const TransferPair& t) {
  std::vector<std::vector<double>> m(nout, std::vector<double>(nin, 0.0));
  std::vector<double> in(nin, 0.0), out(nout);
  for (int j = 0; j < nin; ++j) {
    in[j] = 1.0;
    (t.*op)(in.data(), out.data());
    in[j] = 0.0;
    for (int i = 0; i < nout; ++i) m[i][j] = out[i];
  }
  return m;
}

}  // namespace

TEST_CASE("ratio one is an exact copy") {
  TransferPair t = build_transfer_pair(12, 0.01, 1);
  CHECK(t.identity);
  CHECK(t.nf == 12);
  auto v = random_vec(12, 7);
  std::vector<double> out(12);
  t.c2f_nodes(v.data(), out.data());
  CHECK(out == v);
  t.f2c_mid(v.data(), out.data());
  CHECK(out == v);
  CHECK(verify_transfer(t).all_pass);
}

TEST_CASE("node prolongation rows carry the exact interpolation weights") {
  TransferPair t = build_transfer_pair(8, 0.5, 2);
  CHECK(t.nf == 16);
  auto m = densify(8, 16, &TransferPair::c2f_nodes, t);
  for (int k = 0; k < 8; ++k) {
    // even fine row: copy of coarse k
    for (int j = 0; j < 8; ++j) CHECK(m[2 * k][j] == (j == k ? 1.0 : 0.0));
    // odd fine row: cubic through coarse k-1..k+2
    std::vector<double> want(8, 0.0);
    want[(k + 7) % 8] = -1.0 / 16.0;
    want[k] = 9.0 / 16.0;
    want[(k + 1) % 8] = 9.0 / 16.0;
    want[(k + 2) % 8] = -1.0 / 16.0;
    for (int j = 0; j < 8; ++j) CHECK(m[2 * k + 1][j] == want[j]);
  }
}

TEST_CASE("midpoint prolongation rows carry the exact interpolation weights") {
  TransferPair t = build_transfer_pair(8, 0.5, 2);
  auto m = densify(8, 16, &TransferPair::c2f_mid, t);
  for (int k = 0; k < 8; ++k) {
    std::vector<double> even(8, 0.0), odd(8, 0.0);
    even[(k + 7) % 8] = 5.0 / 32.0;
    even[k] = 15.0 / 16.0;
    even[(k + 1) % 8] = -3.0 / 32.0;
    odd[(k + 7) % 8] = -3.0 / 32.0;
    odd[k] = 15.0 / 16.0;
    odd[(k + 1) % 8] = 5.0 / 32.0;
    for (int j = 0; j < 8; ++j) {
      CHECK(m[2 * k][j] == even[j]);
      CHECK(m[2 * k + 1][j] == odd[j]);
    }
  }
}

TEST_CASE("restriction is exactly half the transposed prolongation") {
  TransferPair t = build_transfer_pair(10, 0.2, 2);
  auto p = densify(10, 20, &TransferPair::c2f_nodes, t);
  auto r = densify(20, 10, &TransferPair::f2c_nodes, t);
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 20; ++j) CHECK(r[i][j] == 0.5 * p[j][i]);
  auto pm = densify(10, 20, &TransferPair::c2f_mid, t);
  auto rm = densify(20, 10, &TransferPair::f2c_mid, t);
  for (int i = 0; i < 10; ++i)
    for (int j = 0; j < 20; ++j) CHECK(rm[i][j] == 0.5 * pm[j][i]);
}

TEST_CASE("constants map to constants with no rounding at all") {
  TransferPair t = build_transfer_pair(9, 0.1, 2);
  std::vector<double> cc(9, 3.25), ff(18, 3.25), out_f(18), out_c(9);
  t.c2f_nodes(cc.data(), out_f.data());
  for (double x : out_f) CHECK(x == 3.25);
  t.c2f_mid(cc.data(), out_f.data());
  for (double x : out_f) CHECK(x == 3.25);
  t.f2c_nodes(ff.data(), out_c.data());
  for (double x : out_c) CHECK(x == 3.25);
  t.f2c_mid(ff.data(), out_c.data());
  for (double x : out_c) CHECK(x == 3.25);
}

TEST_CASE("shifting the input rotates the output consistently") {
  int nc = 11;
  TransferPair t = build_transfer_pair(nc, 0.3, 2);
  auto v = random_vec(nc, 99);
  std::vector<double> shifted(nc), a(2 * nc), b(2 * nc);
  for (int i = 0; i < nc; ++i) shifted[i] = v[(i + nc - 1) % nc];
  t.c2f_nodes(v.data(), a.data());
  t.c2f_nodes(shifted.data(), b.data());
  for (int i = 0; i < 2 * nc; ++i) CHECK(b[(i + 2) % (2 * nc)] == a[i]);
}

TEST_CASE("built-in verification passes and its adjoint check is exact") {
  for (int nc : {8, 16, 33}) {
    TransferPair t = build_transfer_pair(nc, 0.01, 2);
    auto rep = verify_transfer(t);
    CHECK_MESSAGE(rep.all_pass, rep.summary());
    for (const auto& e : rep.entries)
      if (e.name.find("adjoint") != std::string::npos) CHECK(e.residual == 0.0);
  }
}

TEST_CASE("rejects unsupported ratios and degenerate sizes") {
  CHECK_THROWS_AS(build_transfer_pair(8, 0.1, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_transfer_pair(3, 0.1, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_transfer_pair(8, 0.0, 2), std::invalid_argument);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "elwave/diagnostics.hpp"
#include "elwave/errors.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace elwave;

namespace {

struct World {
  std::vector<RegionSpec> specs;
  SemiDiscrete semi;
};

World single_region(MediaPoint mp = {1.0, 2.0, 1.0}) {
  auto specs = build_region_specs({{0.064, 0.08, 0.008}});
  MediaSource src;
  src.homogeneous = mp;
  auto media = sample_media(specs, src);
  return {specs, SemiDiscrete(specs, std::move(media), build_interfaces(specs))};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string temp_file(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "elwave_diag_tests";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

}  // namespace

TEST_CASE("a single moving point carries its cell's kinetic energy") {
  World w = single_region({1.7, 2.0, 1.0});
  const BoundedOps& by = w.semi.bounded_ops(0);
  State s = make_state(w.specs);

  // interior vx point
  s.regions[0].vx(3, 5) = 0.7;
  EnergyBreakdown e = discrete_energy(w.semi, s);
  CHECK(e.potential == 0.0);
  CHECK(e.kinetic ==
        doctest::Approx(0.5 * 0.008 * by.aN[5] * 1.7 * 0.49).epsilon(1e-15));

  // edge rows carry the boundary-reduced weight
  zero(s);
  s.regions[0].vx(3, 0) = 1.0;
  e = discrete_energy(w.semi, s);
  CHECK(e.kinetic == doctest::Approx(0.5 * 0.008 * by.aN[0] * 1.7).epsilon(1e-15));
  CHECK(by.aN[0] < by.aN[5]);

  // vy points use the midpoint weights
  zero(s);
  s.regions[0].vy(2, 3) = -2.0;
  e = discrete_energy(w.semi, s);
  CHECK(e.kinetic == doctest::Approx(0.5 * 0.008 * by.aM[3] * 1.7 * 4.0).epsilon(1e-15));
}

TEST_CASE("stress energy matches the compliance form point by point") {
  MediaPoint mp{1.3, 2.4, 1.1};
  World w = single_region(mp);
  const BoundedOps& by = w.semi.bounded_ops(0);
  Lame l = lame_from_speeds(mp);
  Compliance c = compliance_from_lame(l);
  State s = make_state(w.specs);

  // pure shear at one midpoint cell
  s.regions[0].sxy(2, 4) = 3.0;
  EnergyBreakdown e = discrete_energy(w.semi, s);
  CHECK(e.kinetic == 0.0);
  CHECK(e.potential ==
        doctest::Approx(0.5 * 0.008 * by.aM[4] * 9.0 / l.mu).epsilon(1e-14));

  // normal stresses couple through the off-diagonal compliance
  zero(s);
  s.regions[0].sxx(4, 6) = 1.5;
  s.regions[0].syy(4, 6) = -0.5;
  e = discrete_energy(w.semi, s);
  double a = 0.5 * 0.008 * by.aN[6];
  double want = a * (c.cA * (1.5 * 1.5 + 0.25) - 2.0 * c.cB * 1.5 * (-0.5));
  CHECK(e.potential == doctest::Approx(want).epsilon(1e-14));

  // energy is positive for any nonzero stress state
  zero(s);
  s.regions[0].sxx(1, 1) = 1.0;
  s.regions[0].syy(1, 1) = 1.0;  // hydrostatic, the weakest direction
  CHECK(discrete_energy(w.semi, s).total() > 0.0);
}

TEST_CASE("region breakdown sums to the totals") {
  auto specs = build_region_specs({{0.128, 0.064, 0.004}, {0.128, 0.128, 0.008}});
  MediaSource src;
  src.homogeneous = MediaPoint{1.0, 2.0, 1.0};
  SemiDiscrete semi(specs, sample_media(specs, src), build_interfaces(specs));
  State s = random_state(specs, 17);
  EnergyBreakdown e = discrete_energy(semi, s);
  CHECK(e.region_kinetic.size() == 2);
  CHECK(e.kinetic ==
        doctest::Approx(e.region_kinetic[0] + e.region_kinetic[1]).epsilon(1e-15));
  CHECK(e.potential ==
        doctest::Approx(e.region_potential[0] + e.region_potential[1]).epsilon(1e-15));
  CHECK(e.kinetic > 0.0);
  CHECK(e.potential > 0.0);
}

TEST_CASE("staggered energy with equal snapshots is the plain energy") {
  World w = single_region();
  State s = random_state(w.specs, 4);
  EnergyBreakdown a = discrete_energy(w.semi, s);
  EnergyBreakdown b = discrete_energy_staggered(w.semi, s, s);
  CHECK(a.kinetic == b.kinetic);
  CHECK(a.potential == b.potential);
}

TEST_CASE("energy rate is the derivative of the energy") {
  World w = single_region({1.2, 2.1, 0.9});
  State s = random_state(w.specs, 8);
  State d = random_state(w.specs, 9);  // arbitrary direction, not the rhs
  double eps = 1e-6;

  State plus = make_state(w.specs), minus = make_state(w.specs);
  copy_into(s, plus);
  axpy(eps, d, plus);
  copy_into(s, minus);
  axpy(-eps, d, minus);
  double fd = (discrete_energy(w.semi, plus).total() -
               discrete_energy(w.semi, minus).total()) /
              (2.0 * eps);
  double an = energy_rate(w.semi, s, d);
  CHECK(an == doctest::Approx(fd).epsilon(1e-7));
}

TEST_CASE("receivers read grid points exactly") {
  World w = single_region();
  State s = random_state(w.specs, 12);
  double h = 0.008;
  double yb = w.specs[0].y_bottom;

  // vx grid point: x = (i + 1/2) h on a node row
  ReceiverBinding rb = bind_receiver({(3 + 0.5) * h, yb + 2 * h, "vx"}, w.specs);
  CHECK(rb.sample(s) == doctest::Approx(s.regions[0].vx(3, 2)).epsilon(1e-15));

  // vy grid point: x = i h on a midpoint row
  rb = bind_receiver({2 * h, yb + (4 + 0.5) * h, "vy"}, w.specs);
  CHECK(rb.sample(s) == doctest::Approx(s.regions[0].vy(2, 4)).epsilon(1e-15));
}

TEST_CASE("receivers interpolate linear fields exactly") {
  World w = single_region();
  State s = make_state(w.specs);
  double h = 0.008;
  double yb = w.specs[0].y_bottom;
  const RegionSpec& sp = w.specs[0];
  for (int j = 0; j < sp.nyN; ++j)
    for (int i = 0; i < sp.nx; ++i)
      s.regions[0].vx(i, j) = 2.0 + 3.0 * ((i + 0.5) * h) - 5.0 * (yb + j * h);
  double x = 0.0314, y = -0.0277;  // interior, away from the wrap
  ReceiverBinding rb = bind_receiver({x, y, "vx"}, w.specs);
  CHECK(rb.sample(s) == doctest::Approx(2.0 + 3.0 * x - 5.0 * y).epsilon(1e-12));
}

TEST_CASE("receivers wrap around in x") {
  World w = single_region();
  State s = make_state(w.specs);
  const RegionSpec& sp = w.specs[0];
  // field constant along y, sawtooth in x so the wrap cell is distinctive
  for (int j = 0; j < sp.nyM; ++j)
    for (int i = 0; i < sp.nx; ++i) s.regions[0].vy(i, j) = double(i % 2);
  // x just before zero falls between node nx-1 and node 0 (wrapped)
  double x = sp.Lx - 0.25 * sp.h;
  ReceiverBinding rb = bind_receiver({x, -0.03, "vy"}, w.specs);
  double left = double((sp.nx - 1) % 2), right = 0.0;
  CHECK(rb.sample(s) == doctest::Approx(0.25 * left + 0.75 * right).epsilon(1e-12));
}

TEST_CASE("a receiver on the seam reads the upper region") {
  auto specs = build_region_specs({{0.128, 0.064, 0.004}, {0.128, 0.128, 0.008}});
  ReceiverBinding rb = bind_receiver({0.05, -0.064, "vx"}, specs);
  CHECK(rb.region == 0);
  CHECK(rb.is_vx);
  ReceiverBinding below = bind_receiver({0.05, -0.0641, "vx"}, specs);
  CHECK(below.region == 1);
}

TEST_CASE("receiver validation names the problem") {
  World w = single_region();
  CHECK_THROWS_AS(bind_receiver({0.01, -0.01, "vz"}, w.specs), ConfigError);
  CHECK_THROWS_AS(bind_receiver({0.01, 0.5, "vx"}, w.specs), ConfigError);
  CHECK_THROWS_AS(bind_receiver({0.01, -3.0, "vx"}, w.specs), ConfigError);
  try {
    bind_receiver({0.01, -3.0, "vx"}, w.specs);
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("outside the stack") != std::string::npos);
  }
}

TEST_CASE("energy csv has the exact documented shape") {
  std::string path = temp_file("energy.csv");
  write_energy_csv(path, {{0.0, 1.5, 1.0, 0.5},
                          {0.125, 1.5000000000000002, 1.0000000000000002, 0.5}});
  std::string text = read_file(path);
  CHECK(text ==
        "t,e_total,e_kin,e_pot\n"
        "0,1.5,1,0.5\n"
        "0.125,1.5000000000000002,1.0000000000000002,0.5\n");
  std::remove(path.c_str());
}

TEST_CASE("seismogram csv carries one column per receiver") {
  std::string path = temp_file("seis.csv");
  write_seismogram_csv(path, {"rec0_vx", "rec1_vy"}, {0.0, 0.5},
                       {{1.0, -2.25}, {0.0625, 3.0}});
  std::string text = read_file(path);
  CHECK(text ==
        "t,rec0_vx,rec1_vy\n"
        "0,1,-2.25\n"
        "0.5,0.0625,3\n");
  std::remove(path.c_str());
}

TEST_CASE("csv numbers survive a read back") {
  std::string path = temp_file("roundtrip.csv");
  double v = 0.1234567890123456789;  // not representable, needs %.17g
  write_energy_csv(path, {{v, v * 3, -v, 1e-300}});
  std::string text = read_file(path);
  // skip header, parse the four fields
  std::istringstream line(text.substr(text.find('\n') + 1));
  std::string cell;
  std::array<double, 4> got{};
  for (int k = 0; k < 4; ++k) {
    REQUIRE(std::getline(line, cell, k < 3 ? ',' : '\n'));
    got[k] = std::strtod(cell.c_str(), nullptr);
  }
  CHECK(got[0] == v);
  CHECK(got[1] == v * 3);
  CHECK(got[2] == -v);
  CHECK(got[3] == 1e-300);
  std::remove(path.c_str());
}

#include "elwave/cli.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "elwave/diagnostics.hpp"
#include "elwave/errors.hpp"
#include "elwave/simulation.hpp"
#include "elwave/state.hpp"
#include "elwave/transfer.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace elwave {

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitVerify = 4;

int cmd_run(const std::string& config_path, const std::string& outdir) {
  SimulationConfig cfg = parse_config_file(config_path);
  Problem p = build_problem(cfg);
  if (!p.cfl.ok)
    std::fprintf(stderr, "warning: time step exceeds the stability bound: %s\n",
                 p.cfl.detail.c_str());
  RunSummary sum = run_simulation(p, outdir);
  std::printf("steps: %d\n", sum.steps);
  std::printf("wall seconds: %.3f\n", sum.wall_seconds);
  std::printf("final energy: %.17g\n", sum.final_energy);
  std::printf("energy trace: %s\n", sum.energy_path.c_str());
  if (!sum.seismogram_path.empty())
    std::printf("seismogram: %s\n", sum.seismogram_path.c_str());
  return 0;
}

int cmd_verify_operators(int n, double dx, int nN, double dy, int qb, int qp,
                         int nc) {
  bool ok = true;
  {
    OperatorReport rep = verify_ops(build_periodic_ops(n, dx));
    std::printf("periodic axis (n=%d, dx=%g):\n%s", n, dx, rep.summary().c_str());
    ok = ok && rep.all_pass;
  }
  {
    OperatorReport rep = verify_ops(derive_bounded_ops(nN, dy, qb, qp));
    std::printf("bounded axis (nN=%d, dy=%g, qb=%d, qp=%d):\n%s", nN, dy, qb, qp,
                rep.summary().c_str());
    ok = ok && rep.all_pass;
  }
  for (int ratio : {1, 2}) {
    OperatorReport rep = verify_transfer(build_transfer_pair(nc, dx, ratio));
    std::printf("transfer (nc=%d, ratio=%d):\n%s", nc, ratio, rep.summary().c_str());
    ok = ok && rep.all_pass;
  }
  std::printf("verify-operators: %s\n", ok ? "all checks passed" : "FAILED");
  return ok ? 0 : kExitVerify;
}

int cmd_energy_audit(const std::string& config_path, int states, uint64_t seed) {
  SimulationConfig cfg = parse_config_file(config_path);
  std::vector<RegionSpec> specs = build_region_specs(cfg.regions);
  std::vector<InterfaceSpec> faces = build_interfaces(specs);
  std::vector<RegionMedia> media = sample_media(specs, cfg.media);

  struct Combo {
    SatToggles t;
    const char* label;
  };
  const Combo combos[] = {
      {{false, false}, "free_surface=off interface=off"},
      {{true, false}, "free_surface=on  interface=off"},
      {{false, true}, "free_surface=off interface=on"},
      {{true, true}, "free_surface=on  interface=on"},
  };

  bool ok = true;
  for (const Combo& c : combos) {
    SemiDiscrete semi(specs, media, faces, c.t);
    State deriv = make_state(specs);
    double worst_rate = 0.0, worst_tol = 0.0;
    for (int k = 0; k < states; ++k) {
      State s = random_state(specs, seed + uint64_t(k));
      semi.rhs(s, deriv);
      double rate = std::fabs(energy_rate(semi, s, deriv));
      double tol = 1e-12 * std::max(1.0, discrete_energy(semi, s).total());
      if (rate > worst_rate) {
        worst_rate = rate;
        worst_tol = tol;
      }
    }
    bool full = c.t.free_surface && c.t.interface;
    if (full) {
      bool pass = worst_rate <= worst_tol;
      ok = ok && pass;
      std::printf("sat %s  max |dE/dt| = %.3e  (tolerance %.3e) %s\n", c.label,
                  worst_rate, worst_tol, pass ? "ok" : "FAILED");
    } else {
      std::printf("sat %s  max |dE/dt| = %.3e\n", c.label, worst_rate);
    }
  }
  std::printf("energy-audit: %s\n", ok ? "conservative" : "FAILED");
  return ok ? 0 : kExitVerify;
}

int cmd_derive_operators(int qb, int qp, int nN, const std::string& out_path) {
  auto tab = bounded_closure_tables(qb, qp);
  std::string text = dump_bounded_tables(*tab, nN);
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ConfigError("cannot write " + out_path);
    out << text;
  }
  return 0;
}

}  // namespace

int cli_main(int argc, char** argv) {
  CLI::App app{"Elastic wave simulator on stacked staggered grids"};
  app.require_subcommand(1);

  uint64_t seed = 1234;
  int threads = 0;
  app.add_option("--seed", seed, "PRNG seed for randomized commands");
  app.add_option("--threads", threads, "worker thread count (0 = library default)");

  auto* run = app.add_subcommand("run", "run a configured simulation");
  std::string run_config, run_output;
  run->add_option("--config", run_config, "JSON run description")->required();
  run->add_option("--output", run_output, "override the output directory");

  auto* ver = app.add_subcommand("verify-operators",
                                 "re-derive and check the difference operators");
  int v_n = 64, v_nN = 17, v_qb = 2, v_qp = 2, v_nc = 16;
  double v_dx = 0.01, v_dy = 0.01;
  ver->add_option("--n", v_n, "periodic axis points");
  ver->add_option("--dx", v_dx, "periodic axis spacing");
  ver->add_option("--nN", v_nN, "bounded axis node points");
  ver->add_option("--dy", v_dy, "bounded axis spacing");
  ver->add_option("--qb", v_qb, "boundary row accuracy target");
  ver->add_option("--qp", v_qp, "boundary projection accuracy target");
  ver->add_option("--nc", v_nc, "coarse points for the transfer checks");

  auto* aud = app.add_subcommand(
      "energy-audit", "measure semidiscrete energy rates on random states");
  std::string aud_config;
  int aud_states = 5;
  aud->add_option("--config", aud_config, "JSON run description")->required();
  aud->add_option("--states", aud_states, "number of random states")
      ->check(CLI::PositiveNumber);

  auto* der = app.add_subcommand("derive-operators",
                                 "print the boundary closure tables exactly");
  int d_qb = 2, d_qp = 2, d_nN = 12;
  std::string d_output;
  der->add_option("--qb", d_qb, "boundary row accuracy target");
  der->add_option("--qp", d_qp, "boundary projection accuracy target");
  der->add_option("--nN", d_nN, "node count for the assembled dump");
  der->add_option("--output", d_output, "write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#else
  (void)threads;
#endif

  try {
    if (run->parsed()) return cmd_run(run_config, run_output);
    if (ver->parsed())
      return cmd_verify_operators(v_n, v_dx, v_nN, v_dy, v_qb, v_qp, v_nc);
    if (aud->parsed()) return cmd_energy_audit(aud_config, aud_states, seed);
    if (der->parsed()) return cmd_derive_operators(d_qb, d_qp, d_nN, d_output);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  } catch (const MediaError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  } catch (const NumericalError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 1;
  }
  return 0;
}

}  // namespace elwave

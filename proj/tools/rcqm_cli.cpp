// Batch driver: verification suites, spectral evolutions and field-system
// runs from command-line flags or an INI-style config file.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 I/O error, 3 bad config.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <random>

#include "rcqm/evolution.hpp"
#include "rcqm/maxwell.hpp"
#include "rcqm/planewave.hpp"
#include "rcqm/suites.hpp"

namespace {

int worker_cap() {
  if (const char* env = std::getenv("RCQM_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return 1;
}

std::array<int, 3> parse_dims(const std::vector<int>& g) {
  if (g.size() == 1) return {g[0], 1, 1};
  if (g.size() == 3) return {g[0], g[1], g[2]};
  throw CLI::ValidationError("--grid expects 1 or 3 integers");
}

std::array<double, 3> parse_box(const std::vector<double>& b, const std::array<int, 3>& n) {
  std::array<double, 3> box{{1.0, 1.0, 1.0}};
  if (b.size() == 1) {
    box = {b[0], b[0], b[0]};
  } else if (b.size() == 3) {
    box = {b[0], b[1], b[2]};
  } else if (!b.empty()) {
    throw CLI::ValidationError("--box expects 1 or 3 reals");
  }
  for (int d = 0; d < 3; ++d)
    if (n[d] == 1) box[d] = 1.0;
  return box;
}

// Gaussian preset amplitudes, component weights fixed by the seed.
rcqm::GridState gaussian_amplitudes(const std::array<int, 3>& dims,
                                    const std::array<double, 3>& box, int ncomp,
                                    double width, std::uint64_t seed) {
  rcqm::GridState amps(dims, box, ncomp);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<std::complex<double>> weight(ncomp);
  for (auto& w : weight) w = {dist(rng), dist(rng)};
  for (std::size_t i = 0; i < amps.points(); ++i) {
    const rcqm::KVec k = amps.wavevector(i);
    const double env = std::exp(-k.squaredNorm() / (2.0 * width * width));
    if (env < 1e-14) continue;
    for (int c = 0; c < ncomp; ++c) amps.at(c, i) = weight[c] * env;
  }
  return amps;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"relativistic canonical quantum mechanics toolkit"};
  app.set_config("--config", "", "INI config file with long-option keys");
  app.require_subcommand(1);
  (void)worker_cap();

  // ---- verify ----
  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::vector<std::string> suites;
  std::string spin = "1/2,1/2-";
  double mass = 1.0, tol = 1e-10;
  std::string out_path = "report.json";
  std::uint64_t seed = 1;
  verify->add_option("--suite", suites, "suites to run")
      ->delimiter(',');
  verify->add_option("--spin", spin, "spin config, e.g. 3/2,3/2-");
  verify->add_option("--mass", mass, "mass parameter");
  verify->add_option("--tol", tol, "tolerance");
  verify->add_option("--out", out_path, "JSON report path");
  verify->add_option("--seed", seed, "RNG seed");

  // ---- evolve ----
  auto* evolve = app.add_subcommand("evolve", "spectral time evolution");
  std::string rep_name = "rcqm";
  std::string spin_e = "1/2,1/2-";
  std::vector<int> grid{256};
  std::vector<double> boxv;
  double mass_e = 1.0, time_e = 1.0;
  int snapshots = 1;
  std::string out_dir = ".";
  std::uint64_t seed_e = 1;
  bool equivalence = false;
  double width = 2.0;
  evolve->add_option("--rep", rep_name, "rcqm | fw | dirac");
  evolve->add_option("--spin", spin_e, "spin config");
  evolve->add_option("--grid", grid, "n or n1,n2,n3")->delimiter(',');
  evolve->add_option("--box", boxv, "L or L1,L2,L3")->delimiter(',');
  evolve->add_option("--mass", mass_e, "mass");
  evolve->add_option("--t", time_e, "final time");
  evolve->add_option("--snapshots", snapshots, "number of snapshots");
  evolve->add_option("--out-dir", out_dir, "output directory");
  evolve->add_option("--seed", seed_e, "RNG seed for the Gaussian preset");
  evolve->add_option("--width", width, "Gaussian preset width in k");
  evolve->add_flag("--equivalence", equivalence,
                   "run the cross-representation equivalence check");

  // ---- maxwell ----
  auto* maxwell = app.add_subcommand("maxwell", "field-strength system run");
  std::vector<int> grid_m{64};
  std::vector<double> boxv_m;
  double mass_m = 1.0, time_m = 1.0;
  int snapshots_m = 1;
  std::string out_dir_m = ".";
  std::uint64_t seed_m = 1;
  maxwell->add_option("--grid", grid_m, "n or n1,n2,n3")->delimiter(',');
  maxwell->add_option("--box", boxv_m, "L or L1,L2,L3")->delimiter(',');
  maxwell->add_option("--mass", mass_m, "mass");
  maxwell->add_option("--t", time_m, "final time");
  maxwell->add_option("--snapshots", snapshots_m, "number of snapshots");
  maxwell->add_option("--out-dir", out_dir_m, "output directory");
  maxwell->add_option("--seed", seed_m, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    if (app.got_subcommand(verify)) {
      if (suites.empty()) {
        std::cerr << "verify: empty suite list\n";
        return 3;
      }
      rcqm::VerificationReport all;
      all.suite = "verify";
      for (const auto& s : suites) {
        bool known = false;
        for (const auto& n : rcqm::suite_names()) known |= (n == s);
        if (!known) {
          std::cerr << "verify: unknown suite '" << s << "'\n";
          return 3;
        }
        all.merge(rcqm::run_suite(s, tol, mass, seed));
      }
      all.write_json_file(out_path);
      for (const auto& c : all.checks)
        if (!c.pass && c.gating)
          std::cout << "FAIL " << c.id << " residual " << c.residual << " tol "
                    << c.tol << "\n";
      std::cout << (all.pass() ? "PASS" : "FAIL") << " (" << all.checks.size()
                << " checks, " << all.errata.size() << " errata) -> " << out_path
                << "\n";
      return all.pass() ? 0 : 1;
    }

    if (app.got_subcommand(evolve)) {
      const auto dims = parse_dims(grid);
      const auto box = parse_box(boxv, dims);
      const rcqm::SpinConfig cfg = rcqm::SpinConfig::parse(spin_e);
      rcqm::Representation rep = rcqm::Representation::rcqm;
      if (rep_name == "fw") rep = rcqm::Representation::fw;
      else if (rep_name == "dirac") rep = rcqm::Representation::dirac;
      else if (rep_name != "rcqm") {
        std::cerr << "evolve: unknown representation '" << rep_name << "'\n";
        return 3;
      }

      const rcqm::GridState amps =
          gaussian_amplitudes(dims, box, cfg.dim(), width, seed_e);
      rcqm::GridState state = rcqm::synthesize_solution(cfg, rep, amps, mass_e);
      const rcqm::Mat s3 = rep == rcqm::Representation::rcqm
                               ? rcqm::multiplet_spin(cfg).s[2]
                               : rcqm::fw_spin(cfg).s[2];

      std::filesystem::create_directories(out_dir);
      rcqm::ConservedLog log;
      const int steps = std::max(1, snapshots);
      for (int s = 0; s <= steps; ++s) {
        const double t = time_e * s / steps;
        rcqm::GridState at;
        switch (rep) {
          case rcqm::Representation::rcqm: at = rcqm::evolve_sf(state, mass_e, t); break;
          case rcqm::Representation::fw: at = rcqm::evolve_fw(state, mass_e, t); break;
          case rcqm::Representation::dirac: at = rcqm::evolve_dirac(state, mass_e, t); break;
        }
        log.samples.push_back(rcqm::mean_values(at, mass_e, s3, t));
        rcqm::write_rcqm_array(out_dir + "/snapshot_" + std::to_string(s) + ".rcqm", at);
      }
      log.write_csv(out_dir + "/conserved.csv");

      if (equivalence) {
        const rcqm::GridState f0 =
            rcqm::synthesize_solution(cfg, rcqm::Representation::rcqm, amps, mass_e);
        const auto rep_eq = rcqm::cross_rep_equivalence(f0, mass_e, time_e, 1e-10);
        rep_eq.write_json_file(out_dir + "/equivalence.json");
        std::cout << (rep_eq.pass() ? "PASS" : "FAIL") << " equivalence residual "
                  << rep_eq.max_residual() << "\n";
        if (!rep_eq.pass()) return 1;
      }
      std::cout << "wrote " << steps + 1 << " snapshots and conserved.csv to "
                << out_dir << "\n";
      return 0;
    }

    if (app.got_subcommand(maxwell)) {
      const auto dims = parse_dims(grid_m);
      const auto box = parse_box(boxv_m, dims);
      std::filesystem::create_directories(out_dir_m);

      // constrained initial data: transverse fields varying along x3
      rcqm::FieldState f(dims, box);
      std::mt19937_64 rng(seed_m);
      std::uniform_real_distribution<double> dist(-1.0, 1.0);
      const double a1 = dist(rng), a2 = dist(rng), b1 = dist(rng), b2 = dist(rng);
      for (int i3 = 0; i3 < dims[2]; ++i3) {
        const double x3 = box[2] * i3 / dims[2];
        const double c = std::cos(2.0 * M_PI * x3 / box[2]);
        const double s = std::sin(2.0 * M_PI * x3 / box[2]);
        for (int i1 = 0; i1 < dims[0]; ++i1)
          for (int i2 = 0; i2 < dims[1]; ++i2) {
            const std::size_t idx =
                (static_cast<std::size_t>(i1) * dims[1] + i2) * dims[2] + i3;
            f.at(1, idx) = a1 * c + a2 * s;  // E1
            f.at(2, idx) = b1 * c - b2 * s;  // E2
            f.at(5, idx) = b2 * c + b1 * s;  // H1
            f.at(6, idx) = a2 * c - a1 * s;  // H2
          }
      }
      // when the grid has no x3 extent, fall back to x1-varying data
      if (dims[2] == 1 && dims[0] > 1) {
        for (int i1 = 0; i1 < dims[0]; ++i1) {
          const double x1 = box[0] * i1 / dims[0];
          const double c = std::cos(2.0 * M_PI * x1 / box[0]);
          for (int i2 = 0; i2 < dims[1]; ++i2) {
            const std::size_t idx = (static_cast<std::size_t>(i1) * dims[1] + i2) * dims[2];
            f.at(2, idx) = a1 * c;  // E2 transverse to x1
            f.at(7, idx) = b1 * c;  // H3
          }
        }
      }

      const auto sysrep = rcqm::derive_signed_system_report(mass_m);
      sysrep.write_json_file(out_dir_m + "/signed_system.json");

      std::vector<rcqm::MaxwellLogRow> rows;
      const int steps = std::max(1, snapshots_m);
      for (int s = 0; s <= steps; ++s) {
        const double t = time_m * s / steps;
        const rcqm::FieldState at = rcqm::evolve_maxwell(f, mass_m, t);
        const auto cres = rcqm::constraint_residual(at, mass_m);
        rows.push_back({t, at.energy(), cres[0], cres[1]});
        rcqm::write_field_state(out_dir_m + "/fields_" + std::to_string(s) + ".rcqm", at);
      }
      rcqm::write_maxwell_csv(out_dir_m + "/constraints.csv", rows);
      std::cout << "wrote " << steps + 1 << " field snapshots and constraints.csv to "
                << out_dir_m << "\n";
      return sysrep.pass() ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 3;
}

// Copyright 2026 The Menger Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// menger: evaluate integral Menger curvature energies of Fourier knots and
// run their gradient flow.

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "menger/energy.hpp"
#include "menger/errors.hpp"
#include "menger/flow.hpp"
#include "menger/io.hpp"
#include "menger/knot.hpp"

namespace fs = std::filesystem;
using namespace menger;

namespace {

enum Exit { kOk = 0, kUsage = 2, kDegenerate = 3, kAbort = 4 };

// Significant digits for printed reports; 2π prints as 6.28318530718.
constexpr int kDigits = 12;

std::string num(double v) { return format_real(v, kDigits); }

void print_report(const EnergyReport& r) {
  std::cout << "p = " << num(r.p) << '\n'
            << "length = " << num(r.length) << '\n'
            << "mp = " << num(r.mp) << '\n'
            << "ep = " << num(r.ep) << '\n';
  if (r.ep_lambda)
    std::cout << "lambda = " << num(*r.lambda) << '\n'
              << "ep_lambda = " << num(*r.ep_lambda) << '\n';
  std::cout << "thickness = " << num(r.thickness) << '\n';
}

struct EnergyArgs {
  std::string knot;
  double p = 3.0;
  int samples = 0;
  std::optional<double> lambda;
};

int cmd_energy(const EnergyArgs& a) {
  const FourierKnot k = read_knot(a.knot);
  const int M = a.samples > 0 ? a.samples : default_samples(k.n_modes());
  print_report(energy_report(build_grid(k, M), a.p, a.lambda));
  return kOk;
}

struct FlowArgs {
  std::string knot;
  std::string energy = "ep";
  std::string out_dir = "flow_out";
  FlowConfig config;
  bool no_initial = false;
};

std::string csv_row(const FlowState& s) {
  std::string row = std::to_string(s.step) + ',' + num(s.time) + ',' + num(s.last_tau) +
                    ',' + num(s.report.length) + ',' + num(s.report.mp) + ',' +
                    num(s.report.ep) + ',';
  if (s.report.ep_lambda) row += num(*s.report.ep_lambda);
  return row;
}

int cmd_flow(FlowArgs& a) {
  FlowConfig& c = a.config;
  c.energy = parse_energy_kind(a.energy);
  c.initial_redistribution = !a.no_initial;
  c.validate();
  const FourierKnot k = read_knot(a.knot);

  fs::create_directories(a.out_dir);
  const fs::path dir(a.out_dir);
  std::ofstream csv(dir / "flow.csv");
  if (!csv) throw Error("cannot write '" + (dir / "flow.csv").string() + "'");
  csv << "step,time,tau,length,mp,ep,ep_lambda\n";

  const int M = c.grid_samples(k.n_modes());
  std::optional<FlowState> last;
  FlowObserver obs;
  obs.on_log = [&](const FlowState& s) {
    csv << csv_row(s) << '\n';
    csv.flush();
    last = s;
  };
  obs.on_frame = [&](const FlowState& s) {
    const std::string stem = "frame_" + std::to_string(s.step);
    write_points(dir / (stem + ".xyz"), build_grid(s.knot, M).points());
    write_knot(dir / (stem + ".fcoef"), s.knot);
  };

  try {
    const FlowResult r = run_flow(k, c, obs);
    write_knot(dir / "final.fcoef", r.final_state.knot);
    const FlowState& f = r.final_state;
    std::cout << "steps = " << f.step << "  time = " << num(f.time)
              << "  length = " << num(f.report.length) << "  ep = " << num(f.report.ep)
              << '\n';
  } catch (const FlowAbort& e) {
    std::cerr << "menger flow: " << e.what() << '\n';
    if (last) std::cerr << "last logged step: " << last->step << '\n';
    return kAbort;
  }
  return kOk;
}

struct RedistributeArgs {
  std::string knot, out;
  int samples = 0;
  int modes = 0;
};

int cmd_redistribute(const RedistributeArgs& a) {
  const FourierKnot k = read_knot(a.knot);
  const int n = a.modes > 0 ? a.modes : k.n_modes();
  const int m = a.samples > 0 ? a.samples : default_samples(k.n_modes());
  write_knot(a.out, redistribute(k, m, n));
  return kOk;
}

struct ImportArgs {
  std::string xyz, out;
  int modes = 20;
};

int cmd_import(const ImportArgs& a) {
  const auto pts = read_points(a.xyz);
  if (static_cast<int>(pts.size()) < 2 * a.modes + 2)
    throw ParseError("'" + a.xyz + "': need at least " + std::to_string(2 * a.modes + 2) +
                     " vertices for " + std::to_string(a.modes) + " modes, got " +
                     std::to_string(pts.size()));
  write_knot(a.out, fit_polygon(pts, a.modes));
  return kOk;
}

int cmd_info(const std::string& path, int samples) {
  const FourierKnot k = read_knot(path);
  const int M = samples > 0 ? samples : default_samples(k.n_modes());
  const SampleGrid g = build_grid(k, M);
  std::cout << "modes = " << k.n_modes() << '\n'
            << "samples = " << M << '\n'
            << "length = " << num(length(g)) << '\n'
            << "min_speed = " << num(g.min_speed()) << '\n'
            << "thickness = " << num(thickness(g)) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integral Menger curvature energies and gradient flow of Fourier knots"};
  app.require_subcommand(1);

  EnergyArgs ea;
  auto* energy = app.add_subcommand("energy", "Print length, M_p, E_p, E_p^lambda and thickness");
  energy->add_option("knot", ea.knot, "Coefficient file")->required();
  energy->add_option("--p", ea.p, "Exponent p >= 2")->check(CLI::Range(2.0, 1e6));
  energy->add_option("--samples,-M", ea.samples, "Sample count M (default max(8N,64))")
      ->check(CLI::Range(3, 1 << 14));
  energy->add_option("--lambda", ea.lambda, "Length penalty for E_p^lambda")
      ->check(CLI::NonNegativeNumber);

  FlowArgs fa;
  auto* flow = app.add_subcommand("flow", "Run the implicit gradient flow");
  flow->add_option("knot", fa.knot, "Initial coefficient file")->required();
  flow->add_option("--p", fa.config.p, "Exponent p >= 2")->check(CLI::Range(2.0, 1e6));
  flow->add_option("--energy", fa.energy, "mp, ep or ep-lambda")
      ->check(CLI::IsMember({"mp", "ep", "ep-lambda"}));
  flow->add_option("--lambda", fa.config.lambda, "Length penalty (ep-lambda)")
      ->check(CLI::NonNegativeNumber);
  flow->add_option("--steps", fa.config.steps, "Number of time steps")
      ->check(CLI::NonNegativeNumber);
  flow->add_option("--samples,-M", fa.config.samples, "Sample count M (default max(8N,64))")
      ->check(CLI::Range(3, 1 << 14));
  flow->add_option("--tau-max", fa.config.tau_max, "Upper bound of the time step")
      ->check(CLI::NonNegativeNumber);
  flow->add_option("--epsilon", fa.config.epsilon, "Allowed condition number growth")
      ->check(CLI::PositiveNumber);
  flow->add_option("--redistribute-every", fa.config.redistribute_every,
                   "Redistribute every n steps (0 = never)")
      ->check(CLI::NonNegativeNumber);
  flow->add_flag("--no-initial-redistribution", fa.no_initial,
                 "Do not redistribute the initial knot");
  flow->add_option("--out-dir", fa.out_dir, "Output directory");
  flow->add_option("--log-every", fa.config.log_every, "CSV row cadence")
      ->check(CLI::PositiveNumber);
  flow->add_option("--frame-every", fa.config.frame_every, "Frame cadence")
      ->check(CLI::PositiveNumber);

  RedistributeArgs ra;
  auto* redis = app.add_subcommand("redistribute", "Reparametrize a knot by arclength");
  redis->add_option("knot", ra.knot, "Coefficient file")->required();
  redis->add_option("--samples,-M", ra.samples, "Polygon vertex count (default max(8N,64))")
      ->check(CLI::Range(3, 1 << 16));
  redis->add_option("--modes,-N", ra.modes, "Output mode count (default: input N)")
      ->check(CLI::PositiveNumber);
  redis->add_option("--out,-o", ra.out, "Output coefficient file")->required();

  ImportArgs ia;
  auto* import = app.add_subcommand("import", "Fit Fourier coefficients to a closed polygon");
  import->add_option("xyz", ia.xyz, "Polygon file, one 'x y z' row per vertex")->required();
  import->add_option("--modes,-N", ia.modes, "Mode count")->check(CLI::PositiveNumber);
  import->add_option("--out,-o", ia.out, "Output coefficient file")->required();

  std::string info_knot;
  int info_samples = 0;
  auto* info = app.add_subcommand("info", "Print basic data of a knot");
  info->add_option("knot", info_knot, "Coefficient file")->required();
  info->add_option("--samples,-M", info_samples, "Sample count M")->check(CLI::Range(3, 1 << 14));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*energy) return cmd_energy(ea);
    if (*flow) return cmd_flow(fa);
    if (*redis) return cmd_redistribute(ra);
    if (*import) return cmd_import(ia);
    if (*info) return cmd_info(info_knot, info_samples);
  } catch (const ParseError& e) {
    std::cerr << "menger: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "menger: " << e.what() << '\n';
    return kUsage;
  } catch (const DegenerateError& e) {
    std::cerr << "menger: degenerate input: " << e.what() << '\n';
    return kDegenerate;
  } catch (const FlowAbort& e) {
    std::cerr << "menger: " << e.what() << '\n';
    return kAbort;
  } catch (const std::exception& e) {
    std::cerr << "menger: " << e.what() << '\n';
    return 1;
  }
  return kOk;
}

// Copyright 2026 The qec5 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qec5 command-line front end.
//
// Exit codes: 0 success, 1 configuration or I/O error, 2 invariant violation.

#include "qec5/qec5.hpp"
#include "qec5/validation.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitInvariant = 2;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void write_trace(const qec5::FidelityTrace& trace, qec5::RunManifest manifest, const std::string& out,
                 Clock::time_point start) {
  manifest.wall_seconds = seconds_since(start);
  if (out.empty() || out == "-") {
    qec5::write_csv(trace, std::cout);
    return;
  }
  qec5::emit_csv(trace, manifest, out);
  std::cerr << "wrote " << out << " (" << trace.samples.size() << " samples) and "
            << qec5::manifest_path(out).string() << '\n';
}

std::vector<double> parse_dt_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const double v = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw qec5::ConfigError("--dt: '" + item + "' is not a number");
    }
  }
  if (out.empty()) throw qec5::ConfigError("--dt: empty list");
  return out;
}

struct PresetArgs {
  std::string name;
  std::optional<double> dt, total_time, lambda;
  std::optional<int> record_every;
  bool validate = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--dt", dt, "Time between corrections (omega0 units)");
    cmd->add_option("--total-time", total_time, "Simulated time (omega0 units)");
    cmd->add_option("--lambda", lambda, "Dephasing rate per omega0 (default: matched to 5 mK relaxation)");
    cmd->add_option("--record-every", record_every, "Rounds per fidelity sample")->check(CLI::PositiveNumber);
    cmd->add_flag("--validate", validate, "Check state invariants after every round");
  }

  qec5::ExperimentConfig config() const {
    qec5::PresetOverrides o;
    o.dt = dt;
    o.total_time = total_time;
    o.dephasing_rate = lambda;
    o.record_every = record_every;
    o.validate = validate;
    return qec5::preset_config(qec5::preset_from_string(name), o);
  }
};

int cmd_validate(bool quick) {
  qec5::ValidationOptions opt;
  opt.include_presets = !quick;
  bool ok = true;
  for (const auto& r : qec5::run_invariant_suite(opt)) {
    std::printf("[%s] %s: %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str());
    ok = ok && r.passed;
  }
  return ok ? kExitOk : kExitInvariant;
}

int cmd_bench(int rounds) {
  std::mt19937_64 rng(7);
  const qec5::DensityMatrix rho = qec5::random_density_matrix(qec5::kDataQubits, rng);
  const qec5::QecRound& round = qec5::QecRound::get();

  qec5::DensityMatrix out = round.apply(rho);  // warm-up
  const auto start = Clock::now();
  for (int i = 0; i < rounds; ++i) out = round.apply(rho);
  const double per_round_ms = seconds_since(start) / rounds * 1e3;

  const auto dense_start = Clock::now();
  const qec5::DenseQecRound dense;
  const qec5::DensityMatrix reference = dense.apply(rho);
  const double dense_ms = seconds_since(dense_start) * 1e3;
  const double diff = qec5::max_abs_diff(out.matrix(), reference.matrix());

  std::printf("structured QEC round: %.3f ms/round over %d rounds\n", per_round_ms, rounds);
  std::printf("dense oracle (build + one round): %.1f ms\n", dense_ms);
  std::printf("max |structured - dense| = %.3e\n", diff);
  return diff <= 1e-10 ? kExitOk : kExitInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Density-matrix simulation of periodic five-qubit-code error correction"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(qec5::kVersion));

  std::string config_path, out_path;
  bool run_validate = false;
  auto* run_cmd = app.add_subcommand("run", "Run an experiment from a JSON config");
  run_cmd->add_option("--config", config_path, "JSON config file")->required()->check(CLI::ExistingFile);
  run_cmd->add_option("--out", out_path, "CSV output path (default: stdout)");
  run_cmd->add_flag("--validate", run_validate, "Check state invariants after every round");

  PresetArgs preset_args;
  auto* preset_cmd = app.add_subcommand("preset", "Run a reference scenario");
  preset_cmd->add_option("name", preset_args.name, "fig4 | fig5 | fig6")->required();
  preset_cmd->add_option("--out", out_path, "CSV output path (default: stdout)");
  preset_args.attach(preset_cmd);

  std::string sweep_config, sweep_preset, dt_list;
  std::optional<double> sweep_total;
  unsigned threads = 1;
  auto* sweep_cmd = app.add_subcommand("sweep", "Final fidelity for a list of correction intervals");
  auto* sweep_cfg_opt = sweep_cmd->add_option("--config", sweep_config, "JSON config file")->check(CLI::ExistingFile);
  sweep_cmd->add_option("--preset", sweep_preset, "fig4 | fig5 | fig6")->excludes(sweep_cfg_opt);
  sweep_cmd->add_option("--dt", dt_list, "Comma-separated intervals, e.g. 1,0.1,0.01")->required();
  sweep_cmd->add_option("--total-time", sweep_total, "Simulated time (omega0 units)");
  sweep_cmd->add_option("--out", out_path, "CSV output path (default: stdout)");
  sweep_cmd->add_option("--threads", threads, "Concurrent runs")->check(CLI::PositiveNumber);

  bool quick = false;
  auto* validate_cmd = app.add_subcommand("validate", "Run the invariant suite; exit 2 on any violation");
  validate_cmd->add_flag("--quick", quick, "Skip the full preset runs");

  int bench_rounds = 200;
  auto* bench_cmd = app.add_subcommand("bench", "Time the structured QEC round against the dense oracle");
  bench_cmd->add_option("--rounds", bench_rounds, "Rounds to time")->check(CLI::PositiveNumber);

  std::string show_preset;
  auto* show_cmd = app.add_subcommand("show-config", "Print a preset's resolved config as JSON");
  show_cmd->add_option("name", show_preset, "fig4 | fig5 | fig6")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  const auto start = Clock::now();
  try {
    if (*run_cmd) {
      qec5::RunManifest m;
      m.config = qec5::load_config(config_path);
      m.config.validate = m.config.validate || run_validate;
      write_trace(qec5::run(m.config), m, out_path, start);
    } else if (*preset_cmd) {
      qec5::RunManifest m;
      m.config = preset_args.config();
      m.preset = preset_args.name;
      write_trace(qec5::run(m.config), m, out_path, start);
    } else if (*sweep_cmd) {
      qec5::ExperimentConfig cfg;
      if (!sweep_config.empty()) cfg = qec5::load_config(sweep_config);
      else if (!sweep_preset.empty()) cfg = qec5::preset_config(qec5::preset_from_string(sweep_preset));
      else throw qec5::ConfigError("sweep: one of --config or --preset is required");
      if (sweep_total) cfg.total_time = *sweep_total;
      const auto dts = parse_dt_list(dt_list);
      for (double dt : dts) {
        qec5::ExperimentConfig c = cfg;
        c.dt_qec = dt;
        qec5::validate_config(c);
      }
      const auto points = qec5::sweep_dt(cfg, dts, threads);
      if (out_path.empty() || out_path == "-") {
        qec5::write_sweep_csv(points, std::cout);
      } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
        qec5::write_sweep_csv(points, out);
      }
    } else if (*validate_cmd) {
      return cmd_validate(quick);
    } else if (*bench_cmd) {
      return cmd_bench(bench_rounds);
    } else if (*show_cmd) {
      std::cout << qec5::config_to_json(qec5::preset_config(qec5::preset_from_string(show_preset))).dump(2) << '\n';
    }
  } catch (const qec5::InvariantError& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const qec5::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitOk;
}

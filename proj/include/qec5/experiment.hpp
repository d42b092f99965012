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

#pragma once

// Periodic error correction experiment: encode, then alternate a noise
// interval of length dt with one QEC round, sampling fidelity against the
// input qubit after each round.

#include "qec5/channels.hpp"
#include "qec5/code5.hpp"
#include "qec5/linalg.hpp"

#include <cmath>
#include <cstdint>
#include <future>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qec5 {

/// Raised for invalid experiment or CLI configuration.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class FidelityMode { decoded, codespace };

inline std::string to_string(FidelityMode m) { return m == FidelityMode::decoded ? "decoded" : "codespace"; }

inline FidelityMode fidelity_mode_from_string(const std::string& s) {
  if (s == "decoded") return FidelityMode::decoded;
  if (s == "codespace") return FidelityMode::codespace;
  throw ConfigError("fidelity_mode: expected 'decoded' or 'codespace', got '" + s + "'");
}

inline constexpr double kMaxRounds = 1e7;

struct ExperimentConfig {
  double theta = 1.0;
  double phi = 1.0;
  NoiseConfig noise;
  double dt_qec = 1.0;       // omega0
  double total_time = 10.0;  // omega0
  int record_every = 1;
  FidelityMode fidelity_mode = FidelityMode::decoded;
  bool baseline = true;
  bool validate = false;  // check state invariants (incl. PSD) after every round

  bool operator==(const ExperimentConfig&) const = default;
};

inline void validate_config(const ExperimentConfig& cfg) {
  auto fail = [](const std::string& field, const std::string& why) { throw ConfigError(field + ": " + why); };
  if (!(cfg.theta >= 0.0 && cfg.theta <= std::numbers::pi)) fail("theta", "must lie in [0, pi]");
  if (!(cfg.phi >= 0.0 && cfg.phi < 2 * std::numbers::pi)) fail("phi", "must lie in [0, 2 pi)");
  if (!(cfg.dt_qec > 0.0) || !std::isfinite(cfg.dt_qec)) fail("dt_w0", "must be positive");
  if (!(cfg.total_time > 0.0) || !std::isfinite(cfg.total_time)) fail("total_time_w0", "must be positive");
  if (cfg.dt_qec > cfg.total_time) fail("dt_w0", "must not exceed total_time_w0");
  if (cfg.total_time / cfg.dt_qec > kMaxRounds) fail("total_time_w0", "more than 1e7 rounds requested");
  if (cfg.record_every < 1) fail("record_every", "must be >= 1");
  if (!(cfg.noise.temperature >= 0.0) || !std::isfinite(cfg.noise.temperature)) fail("temperature", "must be >= 0");
  if (!(cfg.noise.dephasing_rate >= 0.0) || !std::isfinite(cfg.noise.dephasing_rate)) {
    fail("dephasing_rate", "must be >= 0");
  }
}

/// Number of noise intervals needed to cover total_time.
inline std::int64_t round_count(double dt, double total_time) {
  return static_cast<std::int64_t>(std::ceil(total_time / dt - 1e-9));
}

struct FidelitySample {
  double time;
  double corrected;
  std::optional<double> uncorrected;

  bool operator==(const FidelitySample&) const = default;
};

struct FidelityTrace {
  std::vector<FidelitySample> samples;
};

struct FidelityPoint {
  double time;
  double fidelity;
};

/// Unencoded single-qubit evolution under the same noise, no correction.
/// First point is t = 0.
inline std::vector<FidelityPoint> run_unencoded(const PureState& psi, const NoiseConfig& noise, double dt,
                                                double total_time, int record_every = 1) {
  if (psi.dim() != 2) throw std::invalid_argument("run_unencoded: psi must be a single qubit");
  if (!(dt > 0) || !(total_time > 0) || record_every < 1) {
    throw std::invalid_argument("run_unencoded: dt, total_time and record_every must be positive");
  }
  const NoiseStep step(noise, 1, dt);
  DensityMatrix rho = psi.projector();
  std::vector<FidelityPoint> out{{0.0, fidelity_pure(psi, rho)}};
  const std::int64_t rounds = round_count(dt, total_time);
  for (std::int64_t k = 1; k <= rounds; ++k) {
    rho = step.apply(rho);
    if (k % record_every == 0 || k == rounds) out.push_back({static_cast<double>(k) * dt, fidelity_pure(psi, rho)});
  }
  return out;
}

inline double sample_fidelity(const PureState& psi, const PureState& psi_l, const DensityMatrix& rho5,
                              FidelityMode mode) {
  return mode == FidelityMode::decoded ? fidelity_pure(psi, decode(rho5)) : fidelity_pure(psi_l, rho5);
}

inline FidelityTrace run(const ExperimentConfig& cfg) {
  validate_config(cfg);
  const PureState psi = PureState::bloch(cfg.theta, cfg.phi);
  const PureState psi_l = encode(psi);
  const NoiseStep noise5(cfg.noise, kDataQubits, cfg.dt_qec);
  const QecRound& qec = QecRound::get();

  std::vector<FidelityPoint> baseline;
  if (cfg.baseline) baseline = run_unencoded(psi, cfg.noise, cfg.dt_qec, cfg.total_time, cfg.record_every);

  DensityMatrix rho = psi_l.projector();
  FidelityTrace trace;
  auto push = [&](double t, double f) {
    FidelitySample s{t, f, std::nullopt};
    if (cfg.baseline) s.uncorrected = baseline[trace.samples.size()].fidelity;
    trace.samples.push_back(s);
  };
  push(0.0, sample_fidelity(psi, psi_l, rho, cfg.fidelity_mode));

  const std::int64_t rounds = round_count(cfg.dt_qec, cfg.total_time);
  for (std::int64_t k = 1; k <= rounds; ++k) {
    rho = qec.apply(noise5.apply(rho));
    if (cfg.validate) rho.validate(true, 1e-10);
    if (k % cfg.record_every == 0 || k == rounds) {
      push(static_cast<double>(k) * cfg.dt_qec, sample_fidelity(psi, psi_l, rho, cfg.fidelity_mode));
    }
  }
  return trace;
}

struct SweepPoint {
  double dt;
  double final_fidelity;
};

/// One run per dt at fixed total_time; results follow the input order.
/// Runs are independent, so up to `threads` of them execute concurrently.
inline std::vector<SweepPoint> sweep_dt(const ExperimentConfig& cfg, const std::vector<double>& dt_values,
                                        unsigned threads = 1) {
  for (double dt : dt_values) {
    if (!(dt > 0)) throw ConfigError("dt_w0: sweep values must be positive");
  }
  auto one = [&](double dt) {
    ExperimentConfig c = cfg;
    c.dt_qec = dt;
    c.baseline = false;
    c.record_every = static_cast<int>(std::min<std::int64_t>(round_count(dt, c.total_time), 1 << 30));
    return SweepPoint{dt, run(c).samples.back().corrected};
  };
  std::vector<SweepPoint> out;
  out.reserve(dt_values.size());
  if (threads <= 1) {
    for (double dt : dt_values) out.push_back(one(dt));
    return out;
  }
  std::vector<std::future<SweepPoint>> pending;
  for (std::size_t i = 0; i < dt_values.size(); ++i) {
    pending.push_back(std::async(std::launch::async, one, dt_values[i]));
    if (pending.size() == threads || i + 1 == dt_values.size()) {
      for (auto& f : pending) out.push_back(f.get());
      pending.clear();
    }
  }
  return out;
}

/// Infidelities 1 - F after a single interval dt starting from the fresh
/// input: (encoded + one QEC round, unencoded).
struct StepInfidelity {
  double corrected;
  double uncorrected;
};

inline StepInfidelity per_step_infidelity(const ExperimentConfig& cfg, double dt) {
  ExperimentConfig c = cfg;
  c.dt_qec = dt;
  c.total_time = dt;
  c.record_every = 1;
  c.baseline = true;
  const FidelityTrace t = run(c);
  return {1.0 - t.samples.back().corrected, 1.0 - *t.samples.back().uncorrected};
}

/// Least-squares slope of log10(y) against log10(x).
inline double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("loglog_slope: need >= 2 paired points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0) || !(y[i] > 0)) throw std::invalid_argument("loglog_slope: values must be positive");
    const double lx = std::log10(x[i]), ly = std::log10(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace qec5

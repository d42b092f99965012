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


#include "qec5/experiment.hpp"
#include "qec5/presets.hpp"

#include "gtest/gtest.h"

#include "oracles.hpp"

using namespace qec5;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig cfg;
  cfg.noise.temperature = 0.05;
  cfg.noise.dephasing_rate = 0.1;
  cfg.dt_qec = 0.5;
  cfg.total_time = 3.0;
  return cfg;
}

}  // namespace

TEST(Run, ZeroNoiseKeepsFidelityOne) {
  ExperimentConfig cfg;
  cfg.noise.enable_dephasing = false;
  cfg.noise.enable_relaxation = false;
  cfg.total_time = 5.0;
  for (FidelityMode mode : {FidelityMode::decoded, FidelityMode::codespace}) {
    cfg.fidelity_mode = mode;
    const FidelityTrace t = run(cfg);
    ASSERT_EQ(t.samples.size(), 6u);
    for (const auto& s : t.samples) {
      EXPECT_NEAR(s.corrected, 1.0, 1e-11);
      ASSERT_TRUE(s.uncorrected.has_value());
      EXPECT_NEAR(*s.uncorrected, 1.0, 1e-11);
    }
  }
}

TEST(Run, SampleTimesAndBounds) {
  ExperimentConfig cfg = small_config();
  cfg.record_every = 4;  // 6 rounds: samples at 0, 4 and the final round
  const FidelityTrace t = run(cfg);
  ASSERT_EQ(t.samples.size(), 3u);
  EXPECT_EQ(t.samples[0].time, 0.0);
  EXPECT_EQ(t.samples[1].time, 2.0);
  EXPECT_EQ(t.samples[2].time, 3.0);
  for (const auto& s : t.samples) {
    EXPECT_GE(s.corrected, 0.0);
    EXPECT_LE(s.corrected, 1.0 + 1e-12);
  }
}

TEST(Run, DeterministicAndBaselineOptional) {
  ExperimentConfig cfg = small_config();
  EXPECT_EQ(run(cfg).samples, run(cfg).samples);
  cfg.baseline = false;
  for (const auto& s : run(cfg).samples) EXPECT_FALSE(s.uncorrected.has_value());
}

TEST(Run, DecodedAndCodespaceModesAgreeAfterRounds) {
  ExperimentConfig a = small_config();
  ExperimentConfig b = a;
  b.fidelity_mode = FidelityMode::codespace;
  const FidelityTrace ta = run(a), tb = run(b);
  for (std::size_t i = 0; i < ta.samples.size(); ++i) EXPECT_NEAR(ta.samples[i].corrected, tb.samples[i].corrected, 1e-12);
}

TEST(Run, ValidationModePassesOnPhysicalNoise) {
  ExperimentConfig cfg = small_config();
  cfg.validate = true;
  EXPECT_NO_THROW(run(cfg));
}

TEST(Run, RejectsInvalidConfig) {
  ExperimentConfig cfg;
  cfg.dt_qec = 0;
  EXPECT_THROW(run(cfg), ConfigError);
  cfg = ExperimentConfig{};
  cfg.dt_qec = 20;
  EXPECT_THROW(run(cfg), ConfigError);
  cfg = ExperimentConfig{};
  cfg.theta = 4.0;
  EXPECT_THROW(run(cfg), ConfigError);
  cfg = ExperimentConfig{};
  cfg.record_every = 0;
  EXPECT_THROW(run(cfg), ConfigError);
  cfg = ExperimentConfig{};
  cfg.noise.temperature = -1;
  EXPECT_THROW(run(cfg), ConfigError);
}

TEST(RunUnencoded, DephasingMatchesClosedForm) {
  NoiseConfig noise;
  noise.enable_relaxation = false;
  noise.dephasing_rate = 0.3;
  for (double theta : {0.3, 1.0, 2.0}) {
    const auto pts = run_unencoded(PureState::bloch(theta, 1.0), noise, 0.5, 5.0);
    ASSERT_EQ(pts.size(), 11u);
    for (const auto& p : pts) EXPECT_NEAR(p.fidelity, oracle::dephased_fidelity(theta, 0.3 * p.time), 1e-12);
  }
}

TEST(RunUnencoded, RelaxationMatchesClosedForm) {
  NoiseConfig noise;
  noise.enable_dephasing = false;
  noise.temperature = 0.2;
  const auto pts = run_unencoded(PureState::bloch(1.0, 1.0), noise, 0.25, 4.0);
  for (const auto& p : pts) EXPECT_NEAR(p.fidelity, oracle::relaxed_fidelity(1.0, 1.0, gamma_of(p.time, 0.2)), 1e-12);
}

TEST(RunUnencoded, BasisStateImmuneToDephasing) {
  NoiseConfig noise;
  noise.enable_relaxation = false;
  noise.dephasing_rate = 5.0;
  for (const auto& p : run_unencoded(PureState::basis(1, 0), noise, 1.0, 50.0)) EXPECT_EQ(p.fidelity, 1.0);
}

TEST(RunUnencoded, MinusStateDecaysToZero) {
  NoiseConfig noise;
  noise.enable_dephasing = false;
  noise.temperature = 5.0;
  const auto pts = run_unencoded(PureState::minus(), noise, 1.0, 10.0);
  EXPECT_NEAR(pts.front().fidelity, 1.0, 1e-15);
  EXPECT_LT(pts.back().fidelity, 1e-9);
  for (std::size_t i = 1; i < pts.size(); ++i) EXPECT_LE(pts[i].fidelity, pts[i - 1].fidelity);
}

TEST(Run, NoiseOrderDoesNotMatterAtSmallDt) {
  PresetOverrides o;
  o.record_every = 1000;
  ExperimentConfig a = preset_config(Preset::fig6, o);
  ExperimentConfig b = a;
  b.noise.order = NoiseOrder::relaxation_first;
  EXPECT_LT(std::abs(run(a).samples.back().corrected - run(b).samples.back().corrected), 1e-6);
}

TEST(Sweep, SingleDtEqualsRun) {
  ExperimentConfig cfg = small_config();
  const auto pts = sweep_dt(cfg, {cfg.dt_qec});
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_EQ(pts[0].final_fidelity, run(cfg).samples.back().corrected);
}

TEST(Sweep, ThreadedMatchesSerialAndKeepsOrder) {
  ExperimentConfig cfg = small_config();
  const std::vector<double> dts{1.0, 0.5, 0.25};
  const auto serial = sweep_dt(cfg, dts, 1);
  const auto threaded = sweep_dt(cfg, dts, 3);
  for (std::size_t i = 0; i < dts.size(); ++i) {
    EXPECT_EQ(serial[i].dt, dts[i]);
    EXPECT_EQ(serial[i].final_fidelity, threaded[i].final_fidelity);
  }
  EXPECT_THROW(sweep_dt(cfg, {0.0}), ConfigError);
}

TEST(Sweep, CombinedNoiseMonotoneInDt) {
  ExperimentConfig cfg = preset_config(Preset::fig6);
  cfg.total_time = 1.0;
  const auto pts = sweep_dt(cfg, {1.0, 0.1, 0.01});
  EXPECT_LE(pts[0].final_fidelity, pts[1].final_fidelity);
  EXPECT_LE(pts[1].final_fidelity, pts[2].final_fidelity);
}

TEST(LoglogSlope, RecoversPowerLaw) {
  EXPECT_NEAR(loglog_slope({0.1, 0.01, 0.001}, {3e-2, 3e-4, 3e-6}), 2.0, 1e-12);
  EXPECT_THROW(loglog_slope({1.0}, {1.0}), std::invalid_argument);
  EXPECT_THROW(loglog_slope({1.0, 2.0}, {0.0, 1.0}), std::invalid_argument);
}

TEST(Presets, ResolvedParameters) {
  const ExperimentConfig f4 = preset_config(Preset::fig4);
  EXPECT_FALSE(f4.noise.enable_relaxation);
  EXPECT_EQ(f4.total_time, 1000.0);
  EXPECT_NEAR(f4.noise.temperature, oracle::kProduct5mK, 1e-15);
  const ExperimentConfig f5 = preset_config(Preset::fig5);
  EXPECT_FALSE(f5.noise.enable_dephasing);
  // The anchored dephasing rate calibrates back to 5 mK.
  EXPECT_NEAR(f5.noise.temperature, oracle::kProduct5mK, 1e-9);
  const ExperimentConfig f6 = preset_config(Preset::fig6);
  EXPECT_EQ(f6.dt_qec, 0.001);
  EXPECT_EQ(f6.record_every, 100);
  PresetOverrides o;
  o.dephasing_rate = 1.0;
  o.dt = 0.5;
  const ExperimentConfig f4b = preset_config(Preset::fig4, o);
  EXPECT_EQ(f4b.noise.dephasing_rate, 1.0);
  EXPECT_EQ(f4b.dt_qec, 0.5);
  EXPECT_THROW(preset_from_string("fig7"), ConfigError);
}

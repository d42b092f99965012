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

// Reference scenarios.
//
//   fig4  dephasing only, dt = 1, 1000 omega0
//   fig5  relaxation only (calibrated), dt = 1 by default, 10 omega0
//   fig6  dephasing + calibrated relaxation, dt = 0.001, 1 omega0
//
// All use the input qubit theta = phi = 1 and a 5 mK bath. Unless
// overridden, the dephasing rate is the one at which one omega0 of
// dephasing costs the input qubit as much fidelity as one omega0 of 5 mK
// relaxation, so calibrating relaxation against it lands back on 5 mK.

#include "qec5/channels.hpp"
#include "qec5/experiment.hpp"

#include <optional>
#include <string>

namespace qec5 {

enum class Preset { fig4, fig5, fig6 };

inline Preset preset_from_string(const std::string& s) {
  if (s == "fig4") return Preset::fig4;
  if (s == "fig5") return Preset::fig5;
  if (s == "fig6") return Preset::fig6;
  throw ConfigError("preset: expected fig4, fig5 or fig6, got '" + s + "'");
}

inline std::string to_string(Preset p) {
  switch (p) {
    case Preset::fig4: return "fig4";
    case Preset::fig5: return "fig5";
    case Preset::fig6: return "fig6";
  }
  return "?";
}

inline constexpr double kPresetMillikelvin = 5.0;
inline constexpr double kPresetTheta = 1.0;
inline constexpr double kPresetPhi = 1.0;

struct PresetOverrides {
  std::optional<double> dt;
  std::optional<double> total_time;
  std::optional<double> dephasing_rate;
  std::optional<int> record_every;
  bool validate = false;
};

/// Dephasing rate matched to 5 mK relaxation for the preset input qubit.
inline double anchored_dephasing_rate() {
  return dephasing_rate_for_temperature(units::temperature_from_millikelvin(kPresetMillikelvin),
                                        PureState::bloch(kPresetTheta, kPresetPhi));
}

inline ExperimentConfig preset_config(Preset preset, const PresetOverrides& o = {}) {
  ExperimentConfig cfg;
  cfg.theta = kPresetTheta;
  cfg.phi = kPresetPhi;
  cfg.noise.temperature = units::temperature_from_millikelvin(kPresetMillikelvin);
  cfg.noise.dephasing_rate = o.dephasing_rate.value_or(anchored_dephasing_rate());
  cfg.baseline = true;
  cfg.validate = o.validate;

  switch (preset) {
    case Preset::fig4:
      cfg.noise.enable_dephasing = true;
      cfg.noise.enable_relaxation = false;
      cfg.dt_qec = 1.0;
      cfg.total_time = 1000.0;
      cfg.record_every = 1;
      break;
    case Preset::fig5:
      cfg.noise.enable_dephasing = false;
      cfg.noise.enable_relaxation = true;
      cfg.dt_qec = 1.0;
      cfg.total_time = 10.0;
      cfg.record_every = 1;
      break;
    case Preset::fig6:
      cfg.noise.enable_dephasing = true;
      cfg.noise.enable_relaxation = true;
      cfg.dt_qec = 0.001;
      cfg.total_time = 1.0;
      cfg.record_every = 100;
      break;
  }
  if (preset != Preset::fig4) {
    cfg.noise.temperature = calibrate_relaxation(cfg.noise, PureState::bloch(cfg.theta, cfg.phi));
  }
  if (o.dt) cfg.dt_qec = *o.dt;
  if (o.total_time) cfg.total_time = *o.total_time;
  if (o.record_every) cfg.record_every = *o.record_every;
  validate_config(cfg);
  return cfg;
}

}  // namespace qec5

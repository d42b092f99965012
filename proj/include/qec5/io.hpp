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

// JSON run configuration, run manifests and CSV traces.
//
// Config units are explicit in the key names: times in omega0
// (dt_w0, total_time_w0), temperature either in millikelvin
// (temperature_mK) or as the dimensionless per-omega0 product
// (temperature_w0). See docs/config.md for the schema.

#include "qec5/experiment.hpp"
#include "qec5/version.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

namespace qec5 {

using Json = nlohmann::json;

namespace detail {

inline void reject_unknown_keys(const Json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.contains(key)) throw ConfigError(where + key + ": unknown field");
  }
}

inline double get_number(const Json& obj, const std::string& key, const std::string& where, double fallback) {
  if (!obj.contains(key)) return fallback;
  const Json& v = obj.at(key);
  if (!v.is_number()) throw ConfigError(where + key + ": expected a number");
  return v.get<double>();
}

inline bool get_bool(const Json& obj, const std::string& key, const std::string& where, bool fallback) {
  if (!obj.contains(key)) return fallback;
  const Json& v = obj.at(key);
  if (!v.is_boolean()) throw ConfigError(where + key + ": expected true or false");
  return v.get<bool>();
}

inline std::optional<std::string> get_string(const Json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) return std::nullopt;
  const Json& v = obj.at(key);
  if (!v.is_string()) throw ConfigError(where + key + ": expected a string");
  return v.get<std::string>();
}

inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

}  // namespace detail

inline std::string to_string(NoiseOrder o) {
  return o == NoiseOrder::dephasing_first ? "dephasing_first" : "relaxation_first";
}

inline Json noise_to_json(const NoiseConfig& n) {
  return Json{
      {"temperature_w0", n.temperature},
      {"temperature_mK", units::millikelvin_from_temperature(n.temperature)},
      {"dephasing_rate", n.dephasing_rate},
      {"dephasing_model", to_string(n.dephasing_model)},
      {"enable_dephasing", n.enable_dephasing},
      {"enable_relaxation", n.enable_relaxation},
      {"order", to_string(n.order)},
  };
}

inline Json config_to_json(const ExperimentConfig& c) {
  return Json{
      {"theta", c.theta},
      {"phi", c.phi},
      {"dt_w0", c.dt_qec},
      {"total_time_w0", c.total_time},
      {"record_every", c.record_every},
      {"fidelity_mode", to_string(c.fidelity_mode)},
      {"baseline", c.baseline},
      {"validate", c.validate},
      {"noise", noise_to_json(c.noise)},
  };
}

/// Parses and validates a config object. `calibrate_relaxation: true` in
/// the noise block replaces the temperature with the calibrated one.
inline ExperimentConfig config_from_json(const Json& j) {
  if (!j.is_object()) throw ConfigError("config: expected a JSON object");
  detail::reject_unknown_keys(j,
                              {"theta", "phi", "dt_w0", "total_time_w0", "record_every", "fidelity_mode",
                               "baseline", "validate", "noise"},
                              "");
  ExperimentConfig c;
  c.theta = detail::get_number(j, "theta", "", c.theta);
  c.phi = detail::get_number(j, "phi", "", c.phi);
  c.dt_qec = detail::get_number(j, "dt_w0", "", c.dt_qec);
  c.total_time = detail::get_number(j, "total_time_w0", "", c.total_time);
  if (j.contains("record_every")) {
    if (!j.at("record_every").is_number_integer()) throw ConfigError("record_every: expected an integer");
    c.record_every = j.at("record_every").get<int>();
  }
  if (auto s = detail::get_string(j, "fidelity_mode", "")) c.fidelity_mode = fidelity_mode_from_string(*s);
  c.baseline = detail::get_bool(j, "baseline", "", c.baseline);
  c.validate = detail::get_bool(j, "validate", "", c.validate);

  bool calibrate = false;
  if (j.contains("noise")) {
    const Json& n = j.at("noise");
    const std::string w = "noise.";
    if (!n.is_object()) throw ConfigError("noise: expected a JSON object");
    detail::reject_unknown_keys(n,
                                {"temperature_w0", "temperature_mK", "calibrate_relaxation", "dephasing_rate",
                                 "dephasing_model", "enable_dephasing", "enable_relaxation", "order"},
                                w);
    NoiseConfig& nc = c.noise;
    if (n.contains("temperature_w0")) {
      nc.temperature = detail::get_number(n, "temperature_w0", w, 0.0);
      if (n.contains("temperature_mK")) {
        const double mk = detail::get_number(n, "temperature_mK", w, 0.0);
        const double from_mk = units::temperature_from_millikelvin(mk);
        if (std::abs(from_mk - nc.temperature) > 1e-9 * std::max(1.0, std::abs(nc.temperature))) {
          throw ConfigError("noise.temperature_mK: disagrees with noise.temperature_w0");
        }
      }
    } else if (n.contains("temperature_mK")) {
      nc.temperature = units::temperature_from_millikelvin(detail::get_number(n, "temperature_mK", w, 0.0));
    }
    calibrate = detail::get_bool(n, "calibrate_relaxation", w, false);
    nc.dephasing_rate = detail::get_number(n, "dephasing_rate", w, nc.dephasing_rate);
    if (auto s = detail::get_string(n, "dephasing_model", w)) {
      try {
        nc.dephasing_model = dephasing_model_from_string(*s);
      } catch (const std::invalid_argument& e) {
        throw ConfigError("noise.dephasing_model: " + std::string(e.what()));
      }
    }
    nc.enable_dephasing = detail::get_bool(n, "enable_dephasing", w, nc.enable_dephasing);
    nc.enable_relaxation = detail::get_bool(n, "enable_relaxation", w, nc.enable_relaxation);
    if (auto s = detail::get_string(n, "order", w)) {
      if (*s == "dephasing_first") nc.order = NoiseOrder::dephasing_first;
      else if (*s == "relaxation_first") nc.order = NoiseOrder::relaxation_first;
      else throw ConfigError("noise.order: expected 'dephasing_first' or 'relaxation_first'");
    }
  }
  validate_config(c);
  if (calibrate) {
    try {
      c.noise.temperature = calibrate_relaxation(c.noise, PureState::bloch(c.theta, c.phi));
    } catch (const std::domain_error& e) {
      throw ConfigError("noise.calibrate_relaxation: " + std::string(e.what()));
    }
  }
  return c;
}

inline ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError("config file " + path.string() + ": " + e.what());
  }
  return config_from_json(j);
}

struct RunManifest {
  ExperimentConfig config;
  std::string version = kVersion;
  std::string preset;  // empty for explicit configs
  double wall_seconds = 0.0;
};

inline Json manifest_to_json(const RunManifest& m) {
  Json j{{"artifact", "qec5"}, {"version", m.version}, {"config", config_to_json(m.config)},
         {"wall_clock_seconds", m.wall_seconds}};
  if (!m.preset.empty()) j["preset"] = m.preset;
  return j;
}

inline RunManifest manifest_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("config")) throw ConfigError("manifest: missing config");
  RunManifest m;
  m.config = config_from_json(j.at("config"));
  if (auto v = detail::get_string(j, "version", "manifest.")) m.version = *v;
  if (auto p = detail::get_string(j, "preset", "manifest.")) m.preset = *p;
  m.wall_seconds = detail::get_number(j, "wall_clock_seconds", "manifest.", 0.0);
  return m;
}

inline constexpr const char* kCsvHeader = "time_w0,fidelity_corrected,fidelity_uncorrected";

/// Header plus one row per sample, 17 significant digits, LF endings. A
/// missing baseline leaves the third field empty.
inline void write_csv(const FidelityTrace& trace, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const auto& s : trace.samples) {
    out << detail::format_double(s.time) << ',' << detail::format_double(s.corrected) << ',';
    if (s.uncorrected) out << detail::format_double(*s.uncorrected);
    out << '\n';
  }
}

inline void write_sweep_csv(const std::vector<SweepPoint>& points, std::ostream& out) {
  out << "dt_w0,final_fidelity\n";
  for (const auto& p : points) out << detail::format_double(p.dt) << ',' << detail::format_double(p.final_fidelity) << '\n';
}

/// out.csv -> out.manifest.json
inline std::filesystem::path manifest_path(const std::filesystem::path& csv_path) {
  std::filesystem::path p = csv_path;
  p.replace_extension(".manifest.json");
  return p;
}

inline void emit_csv(const FidelityTrace& trace, const RunManifest& manifest, const std::filesystem::path& path) {
  {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    write_csv(trace, out);
    if (!out) throw std::runtime_error("write failed for " + path.string());
  }
  const auto mpath = manifest_path(path);
  std::ofstream out(mpath, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + mpath.string() + " for writing");
  out << manifest_to_json(manifest).dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed for " + mpath.string());
}

}  // namespace qec5

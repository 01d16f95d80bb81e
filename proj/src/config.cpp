// Copyright 2026 The qheat Authors
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

#include "qheat/config.hpp"

#include <cmath>
#include <json.hpp>

#include "qheat/errors.hpp"

namespace qheat {

using nlohmann::json;

namespace {

double number(const json& v, const std::string& key) {
  if (!v.is_number()) throw ConfigError(key + ": expected a number");
  return v.get<double>();
}

std::uint64_t count(const json& v, const std::string& key) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return v.get<std::uint64_t>();
  if (v.is_number_float()) {
    const double d = v.get<double>();
    if (d >= 0.0 && d == std::floor(d) && d < 1.8e19) return static_cast<std::uint64_t>(d);
  }
  throw ConfigError(key + ": expected a non-negative integer");
}

std::string text(const json& v, const std::string& key) {
  if (!v.is_string()) throw ConfigError(key + ": expected a string");
  return v.get<std::string>();
}

Channel channel_of(const std::string& s, const std::string& key) {
  if (s.size() == 1) {
    if (auto c = parse_channel(s[0])) return *c;
  }
  throw ConfigError(key + ": '" + s + "' is not one of a, b, c");
}

void apply_merge(SystemConfig& sys, const std::string& value) {
  if (value.empty()) {
    for (Channel c : kAllChannels) sys.channels[index(c)].bath_id = channel_label(c);
    return;
  }
  const auto comma = value.find(',');
  if (comma == std::string::npos) throw ConfigError("merge: expected 'l,m' (e.g. \"b,c\")");
  const Channel l = channel_of(value.substr(0, comma), "merge");
  const Channel m = channel_of(value.substr(comma + 1), "merge");
  if (l == m) throw ConfigError("merge: the two channels must differ");
  sys.merge(l, m);
}

std::string merge_string(const SystemConfig& sys) {
  for (int l = 0; l < kChannels; ++l) {
    for (int m = l + 1; m < kChannels; ++m) {
      if (sys.merged(kAllChannels[l], kAllChannels[m])) {
        return std::string{channel_label(kAllChannels[l]), ',', channel_label(kAllChannels[m])};
      }
    }
  }
  return "";
}

TemperatureScenario parse_scenario(const json& j) {
  if (!j.is_object()) throw ConfigError("sweep.scenario: expected an object");
  TemperatureScenario s;
  for (const auto& [key, v] : j.items()) {
    const std::string k = "sweep.scenario." + key;
    if (key == "base") {
      s.base_temperature = number(v, k);
    } else if (key == "hot") {
      s.hot_temperature = number(v, k);
    } else if (key == "hot_set") {
      for (char c : text(v, k)) {
        if (c == ',' || c == ' ') continue;
        s.hot[index(channel_of(std::string(1, c), k))] = true;
      }
    } else if (key == "overrides") {
      if (!v.is_object()) throw ConfigError(k + ": expected an object");
      for (const auto& [ch, t] : v.items()) {
        s.override_temperature[index(channel_of(ch, k))] = number(t, k + "." + ch);
      }
    } else {
      throw ConfigError("unknown key " + k);
    }
  }
  return s;
}

json scenario_json(const TemperatureScenario& s) {
  std::string hot;
  json overrides = json::object();
  for (Channel c : kAllChannels) {
    if (s.hot[index(c)]) hot += channel_label(c);
    if (s.override_temperature[index(c)]) {
      overrides[std::string(1, channel_label(c))] = *s.override_temperature[index(c)];
    }
  }
  return {{"base", s.base_temperature},
          {"hot", s.hot_temperature},
          {"hot_set", hot},
          {"overrides", overrides}};
}

SweepSpec parse_sweep(const json& j, SweepSpec s) {
  if (!j.is_object()) throw ConfigError("sweep: expected an object");
  for (const auto& [key, v] : j.items()) {
    const std::string k = "sweep." + key;
    if (key == "axes") {
      if (!v.is_array()) throw ConfigError(k + ": expected an array");
      s.axes.clear();
      for (const auto& a : v) {
        if (!a.is_object()) throw ConfigError(k + ": each axis must be an object");
        Axis ax;
        bool named = false;
        for (const auto& [ak, av] : a.items()) {
          const std::string kk = k + "." + ak;
          if (ak == "name") {
            const std::string n = text(av, kk);
            const auto kind = parse_axis(n);
            if (!kind) {
              throw ConfigError(kk + ": unknown axis '" + n +
                                "' (T, T_H, T_a, T_b, T_c, phi, Q, log10_Q, lambda_off)");
            }
            ax.kind = *kind;
            named = true;
          } else if (ak == "min") {
            ax.min = number(av, kk);
          } else if (ak == "max") {
            ax.max = number(av, kk);
          } else if (ak == "points") {
            ax.points = static_cast<std::size_t>(count(av, kk));
          } else {
            throw ConfigError("unknown key " + kk);
          }
        }
        if (!named) throw ConfigError(k + ": axis without a name");
        s.axes.push_back(ax);
      }
    } else if (key == "metrics") {
      if (!v.is_array()) throw ConfigError(k + ": expected an array");
      s.metrics.clear();
      for (const auto& m : v) {
        const std::string n = text(m, k);
        if (n == "currents") continue;
        const auto metric = parse_metric(n);
        if (!metric) throw ConfigError(k + ": unknown metric '" + n + "'");
        s.metrics.push_back(*metric);
      }
    } else if (key == "scenario") {
      s.scenario = parse_scenario(v);
    } else if (key == "passive") {
      const std::string p = text(v, k);
      if (p == "base") {
        s.passive = PassiveMode::base;
      } else if (p == "mean") {
        s.passive = PassiveMode::mean;
      } else {
        throw ConfigError(k + ": expected \"base\" or \"mean\"");
      }
    } else {
      throw ConfigError("unknown key " + k);
    }
  }
  return s;
}

json sweep_json(const SweepSpec& s) {
  json axes = json::array();
  for (const Axis& a : s.axes) {
    axes.push_back({{"name", std::string(axis_name(a.kind))},
                    {"min", a.min},
                    {"max", a.max},
                    {"points", a.points}});
  }
  json metrics = json::array();
  for (Metric m : s.metrics) metrics.push_back(std::string(metric_name(m)));
  return {{"axes", axes},
          {"metrics", metrics},
          {"scenario", scenario_json(s.scenario)},
          {"passive", s.passive == PassiveMode::mean ? "mean" : "base"}};
}

void apply_preset(RunConfig& cfg, const std::string& name) {
  SweepSpec spec = preset(name);
  cfg.system = spec.fixed;
  cfg.sweep = std::move(spec);
}

bool apply_channel_key(RunConfig& cfg, const std::string& key, const json& v) {
  const auto us = key.rfind('_');
  if (us == std::string::npos || us + 2 != key.size()) return false;
  const auto which = parse_channel(key.back());
  if (!which) return false;
  ChannelSettings& ch = cfg.system.channels[index(*which)];
  const std::string field = key.substr(0, us);
  if (field == "q") {
    ch.q = number(v, key);
  } else if (field == "lambda_res") {
    ch.lambda_res = number(v, key);
  } else if (field == "lambda_off") {
    ch.lambda_off = number(v, key);
  } else if (field == "omega") {
    ch.omega = v.is_null() ? std::nullopt : std::optional<double>(number(v, key));
  } else {
    return false;
  }
  return true;
}

void apply_key(RunConfig& cfg, const std::string& key, const json& v) {
  auto& sys = cfg.system;
  if (key == "ej") {
    sys.circuit.e_j = number(v, key);
  } else if (key == "ec") {
    sys.circuit.e_c = number(v, key);
  } else if (key == "flux") {
    sys.circuit.phi = number(v, key);
  } else if (key == "q") {
    sys.set_quality_factor(number(v, key));
  } else if (key == "lambda_res") {
    for (auto& c : sys.channels) c.lambda_res = number(v, key);
  } else if (key == "lambda_off") {
    sys.set_lambda_off(number(v, key));
  } else if (key == "ta") {
    cfg.temperatures[0] = number(v, key);
  } else if (key == "tb") {
    cfg.temperatures[1] = number(v, key);
  } else if (key == "tc") {
    cfg.temperatures[2] = number(v, key);
  } else if (key == "merge") {
    apply_merge(sys, text(v, key));
  } else if (key == "seed") {
    cfg.seed = count(v, key);
  } else if (key == "jumps") {
    cfg.jumps = count(v, key);
  } else if (key == "out") {
    cfg.out = text(v, key);
  } else if (key == "sweep") {
    if (v.is_null()) {
      cfg.sweep.reset();
    } else {
      cfg.sweep = parse_sweep(v, cfg.sweep.value_or(SweepSpec{}));
    }
  } else if (!apply_channel_key(cfg, key, v)) {
    throw ConfigError("unknown configuration key '" + key + "'");
  }
}

// Emit a per-channel field globally when all three agree.
template <typename Get>
void channel_field(json& j, const SystemConfig& sys, const std::string& name, Get get) {
  const auto a = get(sys.channels[0]);
  if (a == get(sys.channels[1]) && a == get(sys.channels[2])) {
    j[name] = a;
    return;
  }
  for (Channel c : kAllChannels) j[name + "_" + channel_label(c)] = get(sys.channels[index(c)]);
}

}  // namespace

void RunConfig::validate() const {
  auto positive = [](double v, const std::string& key) {
    if (!std::isfinite(v) || !(v > 0.0)) throw ConfigError(key + ": must be > 0");
  };
  auto non_negative = [](double v, const std::string& key) {
    if (!std::isfinite(v) || v < 0.0) throw ConfigError(key + ": must be >= 0");
  };
  positive(system.circuit.e_j, "ej");
  positive(system.circuit.e_c, "ec");
  if (!std::isfinite(system.circuit.phi)) throw ConfigError("flux: must be finite");
  for (Channel c : kAllChannels) {
    const std::string s(1, channel_label(c));
    const ChannelSettings& ch = system.channels[index(c)];
    positive(ch.q, "q_" + s);
    non_negative(ch.lambda_res, "lambda_res_" + s);
    non_negative(ch.lambda_off, "lambda_off_" + s);
    if (ch.omega) positive(*ch.omega, "omega_" + s);
    non_negative(temperatures[index(c)], "t" + s);
  }
  for (int l = 0; l < kChannels; ++l) {
    for (int m = l + 1; m < kChannels; ++m) {
      if (system.merged(kAllChannels[l], kAllChannels[m]) && temperatures[l] != temperatures[m]) {
        throw ConfigError(std::string("t") + channel_label(kAllChannels[l]) + ", t" +
                          channel_label(kAllChannels[m]) +
                          ": merged channels must share one temperature");
      }
    }
  }
  if (sweep) {
    try {
      sweep_spec().validate();
    } catch (const InvalidArgument& e) {
      throw ConfigError(std::string("sweep: ") + e.what());
    }
  }
}

SweepSpec RunConfig::sweep_spec() const {
  if (!sweep) throw ConfigError("no sweep configured (use a preset or a \"sweep\" object)");
  SweepSpec s = *sweep;
  s.fixed = system;
  return s;
}

void apply_json(RunConfig& cfg, const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("configuration must be a JSON object");
  try {
    if (auto it = j.find("preset"); it != j.end() && !it->is_null()) {
      apply_preset(cfg, text(*it, "preset"));
    }
    for (const auto& [key, v] : j.items()) {
      if (key != "preset") apply_key(cfg, key, v);
    }
  } catch (const json::exception& e) {
    throw ConfigError(e.what());
  }
}

RunConfig run_config_from_json(const std::string& json_text) {
  RunConfig cfg;
  apply_json(cfg, json_text);
  return cfg;
}

std::string run_config_to_json(const RunConfig& cfg) {
  const SystemConfig& sys = cfg.system;
  json j;
  j["ej"] = sys.circuit.e_j;
  j["ec"] = sys.circuit.e_c;
  j["flux"] = sys.circuit.phi;
  channel_field(j, sys, "q", [](const ChannelSettings& c) { return c.q; });
  channel_field(j, sys, "lambda_res", [](const ChannelSettings& c) { return c.lambda_res; });
  channel_field(j, sys, "lambda_off", [](const ChannelSettings& c) { return c.lambda_off; });
  for (Channel c : kAllChannels) {
    const auto& om = sys.channels[index(c)].omega;
    j[std::string("omega_") + channel_label(c)] = om ? json(*om) : json(nullptr);
  }
  j["ta"] = cfg.temperatures[0];
  j["tb"] = cfg.temperatures[1];
  j["tc"] = cfg.temperatures[2];
  j["merge"] = merge_string(sys);
  j["seed"] = cfg.seed;
  j["jumps"] = cfg.jumps;
  j["out"] = cfg.out;
  j["sweep"] = cfg.sweep ? sweep_json(*cfg.sweep) : json(nullptr);
  return j.dump(2);
}

}  // namespace qheat

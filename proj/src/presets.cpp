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

// Figure-reproduction grids. All share E_J = 5, E_C = 0.5, phi = pi/2,
// resonators pinned to omega10, omega21, omega20 and lambda_res = 1.

#include <functional>
#include <map>

#include "qheat/errors.hpp"
#include "qheat/sweep.hpp"

namespace qheat {

namespace {

constexpr std::size_t kGrid = 201;

SweepSpec base(double q, double lambda_off) {
  SweepSpec s;
  s.fixed.set_quality_factor(q);
  s.fixed.set_lambda_off(lambda_off);
  return s;
}

// T x T_H rectification or circulation map; the currents columns are for a hot.
SweepSpec t_th_map(double q, double lambda_off, std::vector<Metric> metrics, double t_min,
                   double t_max, double th_min, double th_max) {
  SweepSpec s = base(q, lambda_off);
  s.axes = {{AxisKind::base_temperature, t_min, t_max, kGrid},
            {AxisKind::hot_temperature, th_min, th_max, kGrid}};
  s.metrics = std::move(metrics);
  s.scenario = TemperatureScenario::with_hot({Channel::a}, 1.0, 1.0);
  return s;
}

const std::map<std::string_view, std::function<SweepSpec()>>& registry() {
  static const std::map<std::string_view, std::function<SweepSpec()>> presets{
      // Operating regimes over (T_a, T_b) with k_B T_c = 2.
      {"fig2",
       [] {
         SweepSpec s = base(100.0, 1.0);
         s.axes = {{AxisKind::temp_a, 1.0, 4.0, kGrid}, {AxisKind::temp_b, 1.0, 4.0, kGrid}};
         s.scenario.override_temperature[2] = 2.0;
         s.metrics = {Metric::regime};
         return s;
       }},
      // Cooling / pumping currents versus hot T_a and Q, k_B T_b = 1.5, k_B T_c = 2.
      {"fig3",
       [] {
         SweepSpec s = base(100.0, 1.0);
         s.axes = {{AxisKind::log10_q, 1.0, 4.0, kGrid}, {AxisKind::temp_a, 2.0, 4.0, kGrid}};
         s.scenario.override_temperature[1] = 1.5;
         s.scenario.override_temperature[2] = 2.0;
         s.metrics = {Metric::regime};
         return s;
       }},
      {"fig4",
       [] {
         return t_th_map(100.0, 0.0, {Metric::R_ab, Metric::R_ac, Metric::R_bc}, 0.1, 2.0, 0.1,
                         4.0);
       }},
      {"fig5",
       [] {
         return t_th_map(100.0, 1.0, {Metric::R_ab, Metric::R_ac, Metric::R_bc}, 0.1, 2.0, 0.1,
                         4.0);
       }},
      // Passive bath at (T + T_H) / 2.
      {"fig6",
       [] {
         SweepSpec s = t_th_map(100.0, 1.0, {Metric::R_ab}, 0.1, 2.0, 0.1, 2.0);
         s.passive = PassiveMode::mean;
         return s;
       }},
      {"fig6a",
       [] {
         SweepSpec s = t_th_map(100.0, 0.0, {Metric::R_ab}, 0.1, 2.0, 0.1, 2.0);
         s.passive = PassiveMode::mean;
         return s;
       }},
      {"fig7", [] { return t_th_map(100.0, 1.0, {Metric::C}, 0.1, 2.0, 0.1, 6.0); }},
      // Circulation versus flux at k_B T = 0.9, k_B T_H = 3.
      {"fig7c",
       [] {
         SweepSpec s = base(100.0, 1.0);
         s.axes = {{AxisKind::flux, 0.0, 4.5, 451}};
         s.scenario = TemperatureScenario::with_hot({Channel::a}, 0.9, 3.0);
         s.metrics = {Metric::C};
         return s;
       }},
      {"fig7d",
       [] {
         SweepSpec s = base(100.0, 1.0);
         s.axes = {{AxisKind::flux, 0.0, 4.5, kGrid},
                   {AxisKind::hot_temperature, 0.1, 6.0, kGrid}};
         s.scenario = TemperatureScenario::with_hot({Channel::a}, 0.9, 3.0);
         s.metrics = {Metric::C};
         return s;
       }},
      // Circulation versus T and Q at k_B T_H = 2.
      {"fig8",
       [] {
         SweepSpec s = base(100.0, 1.0);
         s.axes = {{AxisKind::log10_q, 1.5, 3.5, kGrid},
                   {AxisKind::base_temperature, 0.05, 2.0, kGrid}};
         s.scenario = TemperatureScenario::with_hot({Channel::a}, 1.0, 2.0);
         s.metrics = {Metric::C};
         return s;
       }},
  };
  return presets;
}

}  // namespace

std::vector<std::string_view> preset_names() {
  std::vector<std::string_view> names;
  for (const auto& [name, _] : registry()) names.push_back(name);
  return names;
}

SweepSpec preset(std::string_view name) {
  const auto& reg = registry();
  if (auto it = reg.find(name); it != reg.end()) return it->second();
  std::string msg = "unknown preset '" + std::string(name) + "'; valid presets:";
  for (const auto& [n, _] : reg) msg += " " + std::string(n);
  throw ConfigError(msg);
}

}  // namespace qheat

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

// config.hpp - run configuration and its flat JSON form.
//
// Keys (all optional):
//   ej, ec, flux                  circuit
//   q, lambda_res, lambda_off     all three channels
//   q_a, lambda_res_b, omega_c..  one channel; omega_l = null pins to the transition
//   ta, tb, tc                    single-point temperatures
//   merge                         "l,m" routes two resonators into one bath
//   seed, jumps                   stochastic verification
//   out                           CSV destination
//   preset                        named sweep, applied before every other key
//   sweep                         {axes: [{name, min, max, points}], metrics: [...],
//                                  scenario: {base, hot, hot_set, overrides}, passive}

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qheat/sweep.hpp"
#include "qheat/transport.hpp"

namespace qheat {

struct RunConfig {
  SystemConfig system{};
  Temperatures temperatures{1.0, 1.0, 1.0};
  std::optional<SweepSpec> sweep;  // sweep.fixed is ignored; system is used
  std::string out;
  std::uint64_t seed{1};
  std::uint64_t jumps{1000000};
  std::vector<std::string> warnings;  // non-fatal advisories collected on load

  // Throws ConfigError naming the offending key.
  void validate() const;

  // SweepSpec with fixed parameters taken from system; ConfigError when
  // no sweep is configured.
  SweepSpec sweep_spec() const;
};

// Overlay a JSON object onto cfg. A "preset" key is applied first.
// Throws ConfigError on malformed JSON, unknown keys or wrong types.
void apply_json(RunConfig& cfg, const std::string& json_text);

RunConfig run_config_from_json(const std::string& json_text);

// Fully expanded form (no preset key); parsing it reproduces the config.
std::string run_config_to_json(const RunConfig& cfg);

}  // namespace qheat

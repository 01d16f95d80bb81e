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

// sweep.hpp - parameter grids over the transport metrics and their CSV form.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qheat/transport.hpp"

namespace qheat {

enum class AxisKind {
  base_temperature,
  hot_temperature,
  temp_a,
  temp_b,
  temp_c,
  flux,
  quality_factor,
  log10_q,
  lambda_off,
};

std::string_view axis_name(AxisKind kind) noexcept;
std::optional<AxisKind> parse_axis(std::string_view name) noexcept;

struct Axis {
  AxisKind kind{AxisKind::base_temperature};
  double min{0.0};
  double max{1.0};
  std::size_t points{2};

  // Linear spacing, endpoints included.
  double value(std::size_t k) const;
};

enum class Metric { R_ab, R_ac, R_bc, R_ab_c, R_ac_b, R_bc_a, C, regime };

std::string_view metric_name(Metric m) noexcept;
// "currents" is accepted by callers as a no-op since currents are always emitted.
std::optional<Metric> parse_metric(std::string_view name) noexcept;

enum class PassiveMode { base, mean };

struct SweepSpec {
  std::vector<Axis> axes;
  SystemConfig fixed{};
  std::vector<Metric> metrics;
  // Temperatures for the populations/currents columns; the coefficient
  // metrics only read its base and hot temperatures.
  TemperatureScenario scenario{};
  PassiveMode passive{PassiveMode::base};

  // Throws InvalidArgument.
  void validate() const;
  std::size_t size() const;
  bool has_axis(AxisKind kind) const;
};

struct SweepRow {
  std::vector<double> axis_values;
  bool ok{false};
  std::array<double, kLevels> p{};
  std::array<double, kChannels> j{};
  double residual{};
  std::vector<std::optional<double>> metrics;  // nullopt: undefined or failed
  std::optional<Regime> regime;
  std::vector<std::string> flags;
};

struct SweepResult {
  std::vector<AxisKind> axes;
  std::vector<Metric> metrics;  // without regime
  bool regime_column{false};
  std::vector<SweepRow> rows;   // row-major over the axes
  std::vector<std::string> warnings;

  std::size_t undefined_count() const;
  std::size_t error_count() const;
};

struct SweepOptions {
  unsigned workers{0};  // 0: hardware concurrency
};

SweepResult run_map(const SweepSpec& spec, const SweepOptions& options = {});
// Requires a flux axis; resonators follow the spectrum unless pinned.
SweepResult run_flux_sweep(const SweepSpec& spec, const SweepOptions& options = {});
// Requires a Q or log10_Q axis; adds a linewidth advisory for the lowest Q.
SweepResult run_q_sweep(const SweepSpec& spec, const SweepOptions& options = {});
// Dispatches to the flux / Q variants when those axes are present.
SweepResult run_sweep(const SweepSpec& spec, const SweepOptions& options = {});

// Warning when a resonator line (omega_l / Q_l) is wider than the gap
// omega21 - omega32 that keeps the third excited level dark.
std::optional<std::string> linewidth_advisory(const SystemConfig& config);

// 17 significant digits, shortest exact form.
std::string format_number(double v);

void write_csv(const SweepResult& result, std::ostream& out);
// Throws IoError naming the path.
void write_csv(const SweepResult& result, const std::string& path);

// Named figure-reproduction grids.
std::vector<std::string_view> preset_names();
// Throws ConfigError listing the valid names.
SweepSpec preset(std::string_view name);

}  // namespace qheat

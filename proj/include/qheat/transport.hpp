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

// transport.hpp - heat currents, diode/circulator coefficients and the
// refrigerator/pump regime classifier.
//
// Sign convention: a current is positive when heat leaves the bath and
// enters the qutrit.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qheat/rates.hpp"
#include "qheat/spectrum.hpp"
#include "qheat/steady_state.hpp"

namespace qheat {

using Temperatures = std::array<double, kChannels>;

// Relative round-off floor below which a coefficient's denominator counts as zero.
inline constexpr double kUndefinedTolerance = 1e-12;

// Everything about a channel except its temperature.
struct ChannelSettings {
  double q{100.0};
  double lambda_res{1.0};
  double lambda_off{1.0};
  std::optional<double> omega;  // unset: pinned to the resonant transition
  char bath_id{'a'};
};

struct SystemConfig {
  CircuitParams circuit{};
  std::array<ChannelSettings, kChannels> channels{
      ChannelSettings{.omega = std::nullopt, .bath_id = 'a'},
      ChannelSettings{.omega = std::nullopt, .bath_id = 'b'},
      ChannelSettings{.omega = std::nullopt, .bath_id = 'c'}};

  // Resonator frequencies for a spectrum, honouring fixed overrides.
  std::array<double, kChannels> resonator_frequencies(const QutritSpectrum& s) const;
  std::array<BathChannel, kChannels> bath_channels(const QutritSpectrum& s,
                                                   const Temperatures& t) const;

  void set_quality_factor(double q);
  void set_lambda_off(double lambda_off);
  // Route channels l and m into one reservoir; the third keeps its own.
  void merge(Channel l, Channel m);
  bool merged(Channel l, Channel m) const;
};

struct HeatCurrents {
  std::array<double, kChannels> j{};
  // Gross energy flow sum |omega_ji| Gamma^l_ji p_i: the magnitude against
  // which round-off in j is measured.
  double scale{};

  double operator[](Channel c) const { return j[index(c)]; }
};

HeatCurrents heat_currents(const SteadyState& steady, const RateMatrix& rates,
                           const QutritSpectrum& spectrum);

// Which channels sit at T_H; the others sit at T unless overridden.
struct TemperatureScenario {
  std::array<bool, kChannels> hot{};
  double base_temperature{1.0};
  double hot_temperature{1.0};
  std::array<std::optional<double>, kChannels> override_temperature{};

  static TemperatureScenario with_hot(std::initializer_list<Channel> hot_channels, double t,
                                      double t_hot);
  static TemperatureScenario explicit_temperatures(const Temperatures& t);

  Temperatures resolve() const;
};

enum class Regime { none, R_a, R_b, R_c, P_a, P_b, P_c };
std::string_view regime_name(Regime r) noexcept;

struct RegimeResult {
  Regime regime{Regime::none};
  // Both a refrigerator and a pump label applied; reported as none.
  bool hybrid{false};
};

struct TransportReport {
  Temperatures temperatures{};
  QutritSpectrum spectrum{};
  SteadyState steady{};
  HeatCurrents currents{};
  std::optional<RegimeResult> regime;  // empty when the extremum is ambiguous
  std::string regime_diagnostic;
};

// Single steady-state evaluation at explicit per-channel temperatures.
TransportReport evaluate(const SystemConfig& config, const Temperatures& temperatures);
TransportReport evaluate(const SystemConfig& config, const TemperatureScenario& scenario);

double scenario_current(const SystemConfig& config, const TemperatureScenario& scenario,
                        Channel probe);

// Sum of the currents of every channel dissipating into the probe's bath.
double bath_current(const SystemConfig& config, const HeatCurrents& currents, Channel probe);

// -(forward - backward) / (|forward| + |backward|). Throws
// UndefinedCoefficient only when the denominator is exactly zero.
double rectification_from_currents(double forward, double backward);

// (|cw| - |ccw|) / |cw + ccw|; UndefinedCoefficient when cw + ccw == 0.
double circulation_from_products(double clockwise, double counterclockwise);

// R_{l l'} from J_{l,l'} (l' hot) and J_{l',l} (l hot). The passive
// channel sits at T unless passive_temperature is given.
double rectification_3t(const SystemConfig& config, Channel l, Channel l_prime, double t,
                        double t_hot, std::optional<double> passive_temperature = std::nullopt);

inline double mean_passive_temperature(double t, double t_hot) { return 0.5 * (t + t_hot); }

// R_{(l l') m} with channels l, l' merged into one bath.
double rectification_2t(const SystemConfig& config, Channel l, Channel l_prime, Channel single,
                        double t, double t_hot);

struct CirculationCurrents {
  // J_{x,y}: current in x when y is hot.
  double ab{}, bc{}, ca{}, ac{}, cb{}, ba{};
  // Gross flow of the solve with bath a, b or c hot.
  std::array<double, kChannels> hot_scale{};

  double clockwise() const { return ab * bc * ca; }
  double counterclockwise() const { return ac * cb * ba; }
};

CirculationCurrents circulation_currents(const SystemConfig& config, double t, double t_hot);

double circulation(const SystemConfig& config, double t, double t_hot);

// R_l: l strictly coldest with J_l > 0. P_l: l strictly hottest with J_l < 0.
// Throws AmbiguousExtremum when a tie leaves the label undecidable.
RegimeResult classify_regime(const HeatCurrents& currents, const Temperatures& temperatures);

}  // namespace qheat

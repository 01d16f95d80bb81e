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

#include "qheat/transport.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qheat/errors.hpp"
#include "wide.hpp"

namespace qheat {

std::array<double, kChannels> SystemConfig::resonator_frequencies(const QutritSpectrum& s) const {
  const std::array<double, kChannels> pinned{s.omega10, s.omega21, s.omega20};
  std::array<double, kChannels> out{};
  for (int l = 0; l < kChannels; ++l) out[l] = channels[l].omega.value_or(pinned[l]);
  return out;
}

std::array<BathChannel, kChannels> SystemConfig::bath_channels(const QutritSpectrum& s,
                                                               const Temperatures& t) const {
  const auto omega = resonator_frequencies(s);
  std::array<BathChannel, kChannels> out;
  for (int l = 0; l < kChannels; ++l) {
    const ChannelSettings& cs = channels[l];
    out[l] = BathChannel{.id = channel_label(kAllChannels[l]),
                         .omega_l = omega[l],
                         .q = cs.q,
                         .lambda_res = cs.lambda_res,
                         .lambda_off = cs.lambda_off,
                         .temperature = t[l],
                         .bath_id = cs.bath_id};
  }
  return out;
}

void SystemConfig::set_quality_factor(double q) {
  for (auto& c : channels) c.q = q;
}

void SystemConfig::set_lambda_off(double lambda_off) {
  for (auto& c : channels) c.lambda_off = lambda_off;
}

void SystemConfig::merge(Channel l, Channel m) {
  if (l == m) throw InvalidArgument("cannot merge a channel with itself");
  const char shared = channel_label(std::min(l, m));
  for (Channel c : kAllChannels) {
    channels[index(c)].bath_id = (c == l || c == m) ? shared : channel_label(c);
  }
}

bool SystemConfig::merged(Channel l, Channel m) const {
  return l != m && channels[index(l)].bath_id == channels[index(m)].bath_id;
}

HeatCurrents heat_currents(const SteadyState& steady, const RateMatrix& rates,
                           const QutritSpectrum& spectrum) {
  using detail::Wide;
  const auto e = spectrum.energies();
  std::array<Wide, kLevels> p{};
  for (int i = 0; i < kLevels; ++i) p[i] = Wide{steady.p[i]} + Wide{steady.p_correction[i]};

  HeatCurrents out;
  Wide scale = 0;
  for (int l = 0; l < kChannels; ++l) {
    Wide j = 0;
    for (int i = 0; i < kLevels; ++i) {
      for (int f = 0; f < kLevels; ++f) {
        if (f == i) continue;
        const Wide term = (Wide{e[f]} - Wide{e[i]}) * Wide{rates.per_bath[l][f][i]} * p[i];
        j += term;
        scale += detail::wide_abs(term);
      }
    }
    out.j[l] = static_cast<double>(j);
  }
  out.scale = static_cast<double>(scale);
  return out;
}

TemperatureScenario TemperatureScenario::with_hot(std::initializer_list<Channel> hot_channels,
                                                  double t, double t_hot) {
  TemperatureScenario s;
  s.base_temperature = t;
  s.hot_temperature = t_hot;
  for (Channel c : hot_channels) s.hot[index(c)] = true;
  return s;
}

TemperatureScenario TemperatureScenario::explicit_temperatures(const Temperatures& t) {
  TemperatureScenario s;
  for (int l = 0; l < kChannels; ++l) s.override_temperature[l] = t[l];
  return s;
}

Temperatures TemperatureScenario::resolve() const {
  Temperatures t{};
  for (int l = 0; l < kChannels; ++l) {
    t[l] = override_temperature[l].value_or(hot[l] ? hot_temperature : base_temperature);
    if (!std::isfinite(t[l]) || t[l] < 0.0) {
      std::ostringstream os;
      os << "temperature of channel " << channel_label(kAllChannels[l]) << " is " << t[l]
         << "; must be >= 0";
      throw InvalidArgument(os.str());
    }
  }
  return t;
}

std::string_view regime_name(Regime r) noexcept {
  switch (r) {
    case Regime::none: return "none";
    case Regime::R_a: return "R_a";
    case Regime::R_b: return "R_b";
    case Regime::R_c: return "R_c";
    case Regime::P_a: return "P_a";
    case Regime::P_b: return "P_b";
    case Regime::P_c: return "P_c";
  }
  return "none";
}

TransportReport evaluate(const SystemConfig& config, const Temperatures& temperatures) {
  TransportReport r;
  r.temperatures = temperatures;
  r.spectrum = derive_spectrum(config.circuit);
  const auto channels = config.bath_channels(r.spectrum, temperatures);
  const RateMatrix rates = assemble_rate_matrix(r.spectrum, channels);
  r.steady = solve_steady(rates);
  r.currents = heat_currents(r.steady, rates, r.spectrum);
  try {
    r.regime = classify_regime(r.currents, temperatures);
    if (r.regime->hybrid) r.regime_diagnostic = "refrigerator and pump labels both applied";
  } catch (const AmbiguousExtremum& e) {
    r.regime.reset();
    r.regime_diagnostic = e.what();
  }
  return r;
}

TransportReport evaluate(const SystemConfig& config, const TemperatureScenario& scenario) {
  return evaluate(config, scenario.resolve());
}

double scenario_current(const SystemConfig& config, const TemperatureScenario& scenario,
                        Channel probe) {
  return evaluate(config, scenario).currents[probe];
}

double bath_current(const SystemConfig& config, const HeatCurrents& currents, Channel probe) {
  double j = 0.0;
  for (Channel c : kAllChannels) {
    if (c == probe || config.merged(c, probe)) j += currents[c];
  }
  return j;
}

double rectification_from_currents(double forward, double backward) {
  const double denominator = std::abs(forward) + std::abs(backward);
  if (denominator == 0.0) throw UndefinedCoefficient("rectification: both currents vanish");
  return -(forward - backward) / denominator;
}

double circulation_from_products(double clockwise, double counterclockwise) {
  const double denominator = std::abs(clockwise + counterclockwise);
  if (denominator == 0.0) throw UndefinedCoefficient("circulation: J_cw + J_ccw vanishes");
  return (std::abs(clockwise) - std::abs(counterclockwise)) / denominator;
}

namespace {

Channel passive_channel(Channel l, Channel m) {
  for (Channel c : kAllChannels) {
    if (c != l && c != m) return c;
  }
  return Channel::a;
}

double checked_rectification(double forward, double backward, double scale, const char* what) {
  if (std::abs(forward) + std::abs(backward) <= kUndefinedTolerance * scale) {
    throw UndefinedCoefficient(std::string(what) + ": forward and backward currents vanish");
  }
  return rectification_from_currents(forward, backward);
}

}  // namespace

double rectification_3t(const SystemConfig& config, Channel l, Channel l_prime, double t,
                        double t_hot, std::optional<double> passive_temperature) {
  if (l == l_prime) throw InvalidArgument("rectification needs two distinct channels");
  const Channel passive = passive_channel(l, l_prime);

  auto forward_s = TemperatureScenario::with_hot({l_prime}, t, t_hot);
  auto backward_s = TemperatureScenario::with_hot({l}, t, t_hot);
  if (passive_temperature) {
    forward_s.override_temperature[index(passive)] = *passive_temperature;
    backward_s.override_temperature[index(passive)] = *passive_temperature;
  }
  const TransportReport fwd = evaluate(config, forward_s);
  const TransportReport bwd = evaluate(config, backward_s);
  return checked_rectification(fwd.currents[l], bwd.currents[l_prime],
                               fwd.currents.scale + bwd.currents.scale, "rectification_3t");
}

double rectification_2t(const SystemConfig& config, Channel l, Channel l_prime, Channel single,
                        double t, double t_hot) {
  if (l == l_prime || single == l || single == l_prime) {
    throw InvalidArgument("two-terminal rectification needs a merged pair and a distinct channel");
  }
  SystemConfig merged = config;
  merged.merge(l, l_prime);

  const TransportReport fwd = evaluate(merged, TemperatureScenario::with_hot({single}, t, t_hot));
  const TransportReport bwd =
      evaluate(merged, TemperatureScenario::with_hot({l, l_prime}, t, t_hot));
  return checked_rectification(bath_current(merged, fwd.currents, l), bwd.currents[single],
                               fwd.currents.scale + bwd.currents.scale, "rectification_2t");
}

CirculationCurrents circulation_currents(const SystemConfig& config, double t, double t_hot) {
  using enum Channel;
  std::array<HeatCurrents, kChannels> hot{};
  for (Channel c : kAllChannels) {
    hot[index(c)] = evaluate(config, TemperatureScenario::with_hot({c}, t, t_hot)).currents;
  }
  CirculationCurrents cc;
  cc.ab = hot[index(b)][a];
  cc.bc = hot[index(c)][b];
  cc.ca = hot[index(a)][c];
  cc.ac = hot[index(c)][a];
  cc.cb = hot[index(b)][c];
  cc.ba = hot[index(a)][b];
  for (Channel c : kAllChannels) cc.hot_scale[index(c)] = hot[index(c)].scale;
  return cc;
}

double circulation(const SystemConfig& config, double t, double t_hot) {
  const CirculationCurrents cc = circulation_currents(config, t, t_hot);
  const double cw = cc.clockwise();
  const double ccw = cc.counterclockwise();
  // Undefined when the two loops cancel, or when every loop current sits
  // at the round-off floor of its solve (no temperature bias).
  using enum Channel;
  const auto floor = [&cc](double j, Channel hot) {
    return std::abs(j) <= kUndefinedTolerance * cc.hot_scale[index(hot)];
  };
  const bool silent = floor(cc.ab, b) && floor(cc.cb, b) && floor(cc.bc, c) && floor(cc.ac, c) &&
                      floor(cc.ca, a) && floor(cc.ba, a);
  if (silent || std::abs(cw + ccw) <= kUndefinedTolerance * (std::abs(cw) + std::abs(ccw))) {
    throw UndefinedCoefficient("circulation: J_cw + J_ccw vanishes");
  }
  return circulation_from_products(cw, ccw);
}

RegimeResult classify_regime(const HeatCurrents& currents, const Temperatures& temperatures) {
  const auto [lo, hi] = std::minmax_element(temperatures.begin(), temperatures.end());
  if (*lo == *hi) return {};

  auto extremum = [&](double target, bool want_positive, const char* what) -> std::optional<int> {
    std::vector<int> tied;
    for (int l = 0; l < kChannels; ++l) {
      if (temperatures[l] == target) tied.push_back(l);
    }
    const auto qualifies = [&](int l) {
      return want_positive ? currents.j[l] > 0.0 : currents.j[l] < 0.0;
    };
    if (tied.size() == 1) {
      return qualifies(tied[0]) ? std::optional<int>(tied[0]) : std::nullopt;
    }
    for (int l : tied) {
      if (qualifies(l)) {
        std::ostringstream os;
        os << what << " temperature " << target << " is shared by " << tied.size()
           << " baths; regime undefined";
        throw AmbiguousExtremum(os.str());
      }
    }
    return std::nullopt;
  };

  const auto cooled = extremum(*lo, true, "minimum");
  const auto pumped = extremum(*hi, false, "maximum");
  if (cooled && pumped) return {Regime::none, true};
  if (cooled) return {static_cast<Regime>(static_cast<int>(Regime::R_a) + *cooled), false};
  if (pumped) return {static_cast<Regime>(static_cast<int>(Regime::P_a) + *pumped), false};
  return {};
}

}  // namespace qheat

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

#include "qheat/rates.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "qheat/errors.hpp"

namespace qheat {

namespace {

void require(bool ok, char id, std::string_view field, std::string_view rule) {
  if (ok) return;
  std::ostringstream os;
  os << "channel " << id << ": " << field << " " << rule;
  throw InvalidArgument(os.str());
}

// lambda (2 w / Q) filter, shared by both directions.
double rate_prefactor(const BathChannel& channel, double omega, double lambda) {
  return lambda * (2.0 * omega / channel.q) * lorentz_filter(omega, channel.omega_l, channel.q);
}

}  // namespace

char channel_label(Channel c) noexcept { return static_cast<char>('a' + index(c)); }

std::optional<Channel> parse_channel(char label) noexcept {
  switch (label) {
    case 'a': return Channel::a;
    case 'b': return Channel::b;
    case 'c': return Channel::c;
    default: return std::nullopt;
  }
}

void BathChannel::validate() const {
  require(std::isfinite(omega_l) && omega_l > 0.0, id, "omega_l", "must be > 0");
  require(std::isfinite(q) && q > 0.0, id, "q", "must be > 0");
  require(std::isfinite(lambda_res) && lambda_res >= 0.0, id, "lambda_res", "must be >= 0");
  require(std::isfinite(lambda_off) && lambda_off >= 0.0, id, "lambda_off", "must be >= 0");
  require(std::isfinite(temperature) && temperature >= 0.0, id, "temperature", "must be >= 0");
}

double bose_occupation(double omega, double temperature) {
  if (temperature <= 0.0) return 0.0;
  return 1.0 / std::expm1(omega / temperature);
}

double lorentz_filter(double omega, double omega_l, double q) {
  const double x = omega / omega_l - omega_l / omega;
  return 1.0 / (1.0 + q * q * x * x);
}

double excitation_rate(const BathChannel& channel, double omega_ji, double lambda) {
  return rate_prefactor(channel, omega_ji, lambda) * bose_occupation(omega_ji, channel.temperature);
}

double relaxation_rate(const BathChannel& channel, double omega_ji, double lambda) {
  return rate_prefactor(channel, omega_ji, lambda) *
         (1.0 + bose_occupation(omega_ji, channel.temperature));
}

double coupling_weight(const BathChannel& channel, Channel which, Transition t) noexcept {
  const Transition res = resonant_transition(which);
  return (res.lower == t.lower && res.upper == t.upper) ? channel.lambda_res : channel.lambda_off;
}

RateMatrix assemble_rate_matrix(const QutritSpectrum& spectrum,
                                std::span<const BathChannel> channels) {
  if (channels.size() != kChannels) {
    throw ChannelMismatch("expected exactly three channels labelled a, b, c");
  }
  std::array<const BathChannel*, kChannels> by_label{};
  for (const auto& ch : channels) {
    const auto which = parse_channel(ch.id);
    if (!which || by_label[index(*which)] != nullptr) {
      throw ChannelMismatch(std::string("channel labels must be {a,b,c}; got '") + ch.id + "'");
    }
    by_label[index(*which)] = &ch;
  }
  for (const auto* ch : by_label) ch->validate();
  for (int l = 0; l < kChannels; ++l) {
    for (int m = l + 1; m < kChannels; ++m) {
      if (by_label[l]->bath_id == by_label[m]->bath_id &&
          by_label[l]->temperature != by_label[m]->temperature) {
        std::ostringstream os;
        os << "channels " << by_label[l]->id << " and " << by_label[m]->id
           << " share bath '" << by_label[l]->bath_id << "' but have different temperatures";
        throw InconsistentBath(os.str());
      }
    }
  }

  const auto energies = spectrum.energies();
  RateMatrix rates;
  for (Channel which : kAllChannels) {
    const BathChannel& ch = *by_label[index(which)];
    Mat3& g = rates.per_bath[index(which)];
    for (const Transition t : kTransitions) {
      const double omega = energies[t.upper] - energies[t.lower];
      const double lambda = coupling_weight(ch, which, t);
      g[t.upper][t.lower] = excitation_rate(ch, omega, lambda);
      g[t.lower][t.upper] = relaxation_rate(ch, omega, lambda);
    }
  }
  for (const Mat3& g : rates.per_bath) {
    for (int j = 0; j < kLevels; ++j) {
      for (int i = 0; i < kLevels; ++i) rates.total[j][i] += g[j][i];
    }
  }
  return rates;
}

}  // namespace qheat

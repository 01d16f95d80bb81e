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

// rates.hpp - bath-induced transition rates through Lorentzian resonator filters.

#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>

#include "qheat/spectrum.hpp"

namespace qheat {

inline constexpr int kLevels = 3;
inline constexpr int kChannels = 3;

using Mat3 = std::array<std::array<double, kLevels>, kLevels>;

enum class Channel : int { a = 0, b = 1, c = 2 };

inline constexpr std::array<Channel, kChannels> kAllChannels{Channel::a, Channel::b, Channel::c};

constexpr int index(Channel c) noexcept { return static_cast<int>(c); }
char channel_label(Channel c) noexcept;
std::optional<Channel> parse_channel(char label) noexcept;

// The upward transition (lower -> upper) a channel is tuned to:
// a drives 0<->1, b drives 1<->2, c drives 0<->2.
struct Transition {
  int lower;
  int upper;
};
inline constexpr std::array<Transition, 3> kTransitions{{{0, 1}, {1, 2}, {0, 2}}};
constexpr Transition resonant_transition(Channel c) noexcept { return kTransitions[index(c)]; }

struct BathChannel {
  char id{'a'};
  double omega_l{1.0};       // resonator frequency
  double q{100.0};           // quality factor
  double lambda_res{1.0};    // weight of the transition the resonator is tuned to
  double lambda_off{1.0};    // weight of the two other transitions
  double temperature{1.0};   // k_B T of the bath behind the resonator
  char bath_id{'a'};         // channels sharing a bath_id dissipate into one reservoir

  // Throws InvalidArgument naming the offending field.
  void validate() const;
};

// per_bath[l][j][i] is the rate of i -> j induced by channel l (diagonal 0).
struct RateMatrix {
  std::array<Mat3, kChannels> per_bath{};
  Mat3 total{};
};

// Bose-Einstein occupation; exactly 0 at zero temperature.
double bose_occupation(double omega, double temperature);

// Lorentzian suppression [1 + Q^2 (w/w_l - w_l/w)^2]^-1, in (0, 1].
double lorentz_filter(double omega, double omega_l, double q);

// Upward rate lambda (2 w/Q) filter n_B for a transition of frequency omega_ji > 0.
double excitation_rate(const BathChannel& channel, double omega_ji, double lambda);

// Downward rate lambda (2 w/Q) filter (1 + n_B); equals the upward rate
// times exp(omega/T) and stays finite at T = 0.
double relaxation_rate(const BathChannel& channel, double omega_ji, double lambda);

// Coupling weight channel applies to upward transition t.
double coupling_weight(const BathChannel& channel, Channel which, Transition t) noexcept;

// channels must carry the labels a, b, c exactly once (any order); otherwise
// ChannelMismatch. Channels sharing a bath_id with different temperatures
// raise InconsistentBath.
RateMatrix assemble_rate_matrix(const QutritSpectrum& spectrum,
                                std::span<const BathChannel> channels);

}  // namespace qheat

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

// steady_state.hpp - stationary populations of the three-level rate equations.

#pragma once

#include <array>
#include <cstdint>

#include "qheat/rates.hpp"

namespace qheat {

struct SteadyState {
  std::array<double, kLevels> p{};
  // p + p_correction carries the populations past double rounding; the
  // heat-current sums need those digits near equilibrium. Zero is fine.
  std::array<double, kLevels> p_correction{};
  // max |G p| / max |G_ij| for the generator G the populations solve.
  double residual{};
};

// Generator of dp/dt = G p: off-diagonal G_ji = Gamma_ji, diagonal -sum_j Gamma_ji.
Mat3 generator(const Mat3& total_rates);

// True when every state reaches every other along nonzero rates.
bool is_irreducible(const Mat3& total_rates);

// Exact stationary distribution. Throws ReducibleChain on a disconnected
// or absorbing rate graph.
SteadyState solve_steady(const RateMatrix& rates);
SteadyState solve_steady(const Mat3& total_rates);

// Ideal-filter cycle amplitude for symmetric couplings kappa, with
// theta_l = omega_l / T_l. Zero exactly on theta_c = theta_a + theta_b.
// The currents are J_a = omega_a A, J_b = omega_b A, J_c = -omega_c A.
double ideal_current_amplitude(double theta_a, double theta_b, double theta_c, double kappa);

// The uncalibrated closed form; ideal_current_amplitude multiplies it by
// ideal_current_sign().
double ideal_current_amplitude_raw(double theta_a, double theta_b, double theta_c, double kappa);

// +1 or -1, fixed once by comparing the closed form with solve_steady at a
// reference point.
double ideal_current_sign();

struct StochasticEstimate {
  std::array<double, kLevels> p_hat{};
  std::array<double, kLevels> sigma_p{};
  std::array<double, kChannels> j_hat{};
  std::array<double, kChannels> sigma_j{};
  std::uint64_t n_jumps{};
  std::uint64_t seed{};
  double elapsed_time{};  // simulated time
};

inline constexpr std::uint64_t kMinJumps = 10000;

// Continuous-time jump simulation of the rate equations. Populations are
// occupation-time fractions, currents the energy drawn from each channel per
// unit time (positive = out of the bath). Standard errors come from batch
// means over 100 equal-jump batches. Deterministic for a given seed.
StochasticEstimate gillespie_estimate(const RateMatrix& rates, const QutritSpectrum& spectrum,
                                      std::uint64_t n_jumps, std::uint64_t seed);

}  // namespace qheat

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

// spectrum.hpp - three-level spectrum of a flux-tunable transmon-like qutrit.
//
// Units: everything is dimensionless. Frequencies are in units of the
// reference frequency omega_r, energies in hbar*omega_r, temperatures in
// hbar*omega_r/k_B and heat currents in lambda*hbar*omega_r^2.

#pragma once

#include <array>
#include <optional>
#include <string>

namespace qheat {

struct UnitSystem {
  static constexpr double omega_r = 1.0;
  // Physical value of the reference frequency, omega_r / 2pi in Hz.
  static constexpr double reference_frequency_hz = 1.0e9;
};

struct CircuitParams {
  double e_j{5.0};   // Josephson energy
  double e_c{0.5};   // island charging energy
  double phi{1.5707963267948966};  // reduced flux phase (rad)
};

struct QutritSpectrum {
  double omega0{};   // plasma frequency
  double omega10{};
  double omega21{};
  double omega20{};  // always omega10 + omega21
  double omega32{};  // only used as a validity bound

  // Level energies with E_0 = 0.
  std::array<double, 3> energies() const noexcept { return {0.0, omega10, omega20}; }
};

// Effective Josephson energy of the three-junction loop, 3/2 E_J cos(phi/3).
double effective_josephson_energy(const CircuitParams& params);

double plasma_frequency(const CircuitParams& params);

// Perturbative level spacings of the anharmonic well for a given plasma
// frequency. e_c == 0 is allowed here and gives the harmonic ladder.
QutritSpectrum spectrum_from_plasma(double omega0, double e_c);

// Throws InvalidArgument (e_j, e_c not positive), InvalidFlux
// (cos(phi/3) <= 0) or NonPositiveFrequency.
QutritSpectrum derive_spectrum(const CircuitParams& params);

// Non-fatal warning text when E_J < 5 E_C (outside the transmon regime).
std::optional<std::string> transmon_advisory(const CircuitParams& params);

}  // namespace qheat

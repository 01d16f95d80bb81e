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

#include "qheat/spectrum.hpp"

#include <cmath>
#include <sstream>

#include "qheat/errors.hpp"

namespace qheat {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidFlux: return "InvalidFlux";
    case ErrorCode::NonPositiveFrequency: return "NonPositiveFrequency";
    case ErrorCode::ChannelMismatch: return "ChannelMismatch";
    case ErrorCode::InconsistentBath: return "InconsistentBath";
    case ErrorCode::ReducibleChain: return "ReducibleChain";
    case ErrorCode::UndefinedCoefficient: return "UndefinedCoefficient";
    case ErrorCode::AmbiguousExtremum: return "AmbiguousExtremum";
    case ErrorCode::Config: return "Config";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

double effective_josephson_energy(const CircuitParams& params) {
  return 1.5 * params.e_j * std::cos(params.phi / 3.0);
}

double plasma_frequency(const CircuitParams& params) {
  return std::sqrt(8.0 * effective_josephson_energy(params) * params.e_c);
}

QutritSpectrum spectrum_from_plasma(double omega0, double e_c) {
  // E_n = omega0 (n + 1/2) - e_c (6n^2 + 6n + 3) / 16
  QutritSpectrum s;
  s.omega0 = omega0;
  s.omega10 = omega0 - 0.75 * e_c;
  s.omega21 = omega0 - 1.5 * e_c;
  s.omega20 = s.omega10 + s.omega21;
  s.omega32 = omega0 - 2.25 * e_c;
  return s;
}

QutritSpectrum derive_spectrum(const CircuitParams& params) {
  if (!(params.e_j > 0.0) || !std::isfinite(params.e_j)) {
    throw InvalidArgument("e_j must be a positive finite number");
  }
  if (!(params.e_c > 0.0) || !std::isfinite(params.e_c)) {
    throw InvalidArgument("e_c must be a positive finite number");
  }
  if (!std::isfinite(params.phi) || !(std::cos(params.phi / 3.0) > 0.0)) {
    std::ostringstream os;
    os << "flux phase " << params.phi << " gives cos(phi/3) <= 0";
    throw InvalidFlux(os.str());
  }
  const QutritSpectrum s = spectrum_from_plasma(plasma_frequency(params), params.e_c);
  for (double w : {s.omega0, s.omega10, s.omega21, s.omega20, s.omega32}) {
    if (!(w > 0.0)) {
      std::ostringstream os;
      os << "non-positive transition frequency (omega0=" << s.omega0
         << ", omega32=" << s.omega32 << ")";
      throw NonPositiveFrequency(os.str());
    }
  }
  return s;
}

std::optional<std::string> transmon_advisory(const CircuitParams& params) {
  if (params.e_j >= 5.0 * params.e_c) return std::nullopt;
  std::ostringstream os;
  os << "E_J/E_C = " << params.e_j / params.e_c
     << " is below 5; the perturbative spectrum is unreliable outside the transmon regime";
  return os.str();
}

}  // namespace qheat

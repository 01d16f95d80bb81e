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

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <numbers>

#include "oracles.hpp"
#include "qheat/errors.hpp"
#include "qheat/spectrum.hpp"

using namespace qheat;
namespace qt = qheat::testing;

TEST_CASE("frozen transition frequencies at zero flux") {
  const QutritSpectrum s = derive_spectrum({5.0, 0.5, 0.0});
  CHECK(qt::rel_diff(s.omega0, qt::frozen::omega0_phi0) < 1e-15);
  CHECK(qt::rel_diff(s.omega10, qt::frozen::omega10_phi0) < 1e-15);
  CHECK(qt::rel_diff(s.omega21, qt::frozen::omega21_phi0) < 1e-15);
  CHECK(qt::rel_diff(s.omega20, qt::frozen::omega20_phi0) < 1e-15);
  CHECK(qt::rel_diff(s.omega32, qt::frozen::omega32_phi0) < 1e-15);
}

TEST_CASE("frozen transition frequencies at quarter flux") {
  const QutritSpectrum s = derive_spectrum({5.0, 0.5, std::numbers::pi / 2});
  CHECK(qt::rel_diff(s.omega0, qt::frozen::omega0) < 1e-15);
  CHECK(qt::rel_diff(s.omega10, qt::frozen::omega10) < 1e-15);
  CHECK(qt::rel_diff(s.omega21, qt::frozen::omega21) < 1e-15);
  CHECK(qt::rel_diff(s.omega20, qt::frozen::omega20) < 1e-15);
  CHECK(qt::rel_diff(s.omega32, qt::frozen::omega32) < 1e-15);
  // Rounded values quoted for this working point.
  CHECK(std::abs(s.omega10 - 4.72213) < 1e-5);
  CHECK(std::abs(s.omega21 - 4.34713) < 1e-5);
  CHECK(std::abs(s.omega20 - 9.06926) < 1e-5);
}

TEST_CASE("default circuit") {
  const CircuitParams c;
  CHECK(c.e_j == 5.0);
  CHECK(c.e_c == 0.5);
  CHECK(c.phi == std::numbers::pi / 2);
  CHECK(effective_josephson_energy(c) == doctest::Approx(1.5 * 5.0 * std::cos(std::numbers::pi / 6)));
}

TEST_CASE("two-photon frequency is the sum of the ladder steps") {
  qt::Gen gen(11);
  for (int k = 0; k < 2000; ++k) {
    const QutritSpectrum s = derive_spectrum(gen.circuit());
    CHECK(std::abs(s.omega20 - (s.omega10 + s.omega21)) <= 1e-14 * s.omega20);
  }
}

TEST_CASE("random circuits match the closed-form ladder") {
  qt::Gen gen(12);
  for (int k = 0; k < 2000; ++k) {
    const CircuitParams c = gen.circuit();
    const QutritSpectrum s = derive_spectrum(c);
    const auto r = qt::ref_spectrum(c.e_j, c.e_c, c.phi);
    CHECK(qt::rel_diff(s.omega10, r.w10) < 1e-13);
    CHECK(qt::rel_diff(s.omega21, r.w21) < 1e-13);
    CHECK(qt::rel_diff(s.omega20, r.w20) < 1e-13);
    CHECK(qt::rel_diff(s.omega32, r.w32) < 1e-13);
  }
}

TEST_CASE("plasma frequency strictly decreases with flux") {
  const double hi = 1.5 * std::numbers::pi;
  double prev = plasma_frequency({5.0, 0.5, 1e-6});
  for (int k = 1; k < 4000; ++k) {
    const double phi = hi * k / 4000.0;
    const double w = plasma_frequency({5.0, 0.5, phi});
    CHECK(w < prev);
    prev = w;
  }
}

TEST_CASE("spectrum is deterministic to the bit") {
  qt::Gen gen(13);
  for (int k = 0; k < 100; ++k) {
    const CircuitParams c = gen.circuit();
    const QutritSpectrum a = derive_spectrum(c);
    const QutritSpectrum b = derive_spectrum(c);
    CHECK(std::memcmp(&a, &b, sizeof a) == 0);
  }
}

TEST_CASE("harmonic limit has equal level spacing") {
  const QutritSpectrum s = spectrum_from_plasma(3.25, 0.0);
  CHECK(s.omega10 == 3.25);
  CHECK(s.omega21 == 3.25);
  CHECK(s.omega20 == 6.5);
  CHECK(s.omega32 == 3.25);
}

TEST_CASE("energies start at zero") {
  const QutritSpectrum s = derive_spectrum({});
  const auto e = s.energies();
  CHECK(e[0] == 0.0);
  CHECK(e[1] == s.omega10);
  CHECK(e[2] == s.omega20);
}

TEST_CASE("flux outside the allowed range is rejected") {
  CHECK_THROWS_AS(derive_spectrum({5.0, 0.5, 1.5 * std::numbers::pi + 1e-9}), InvalidFlux);
  CHECK_THROWS_AS(derive_spectrum({5.0, 0.5, 5.0}), InvalidFlux);
  CHECK_THROWS_AS(derive_spectrum({5.0, 0.5, -5.0}), InvalidFlux);
  CHECK_THROWS_AS(derive_spectrum({5.0, 0.5, NAN}), InvalidFlux);
  try {
    derive_spectrum({5.0, 0.5, 5.0});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidFlux);
  }
}

TEST_CASE("non-positive circuit energies are rejected") {
  CHECK_THROWS_AS(derive_spectrum({0.0, 0.5, 0.0}), InvalidArgument);
  CHECK_THROWS_AS(derive_spectrum({5.0, -0.5, 0.0}), InvalidArgument);
}

TEST_CASE("strong anharmonicity drives a frequency non-positive") {
  CHECK_THROWS_AS(derive_spectrum({0.1, 1.0, 0.0}), NonPositiveFrequency);
  // Near the flux edge the plasma frequency collapses.
  CHECK_THROWS_AS(derive_spectrum({5.0, 0.5, 1.5 * std::numbers::pi - 1e-6}),
                  NonPositiveFrequency);
}

TEST_CASE("advisory outside the transmon regime") {
  CHECK_FALSE(transmon_advisory({5.0, 0.5, 0.0}).has_value());
  const auto msg = transmon_advisory({1.0, 0.5, 0.0});
  REQUIRE(msg.has_value());
  CHECK(msg->find("E_J/E_C") != std::string::npos);
}

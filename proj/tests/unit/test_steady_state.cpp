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

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "qheat/errors.hpp"
#include "qheat/steady_state.hpp"
#include "qheat/transport.hpp"

using namespace qheat;
namespace qt = qheat::testing;

TEST_CASE("solver matches the adjugate null vector") {
  qt::Gen gen(31);
  for (int k = 0; k < 10000; ++k) {
    const Mat3 r = gen.rates();
    const SteadyState st = solve_steady(r);
    const auto ref = qt::adjugate_null_vector(r);
    for (int i = 0; i < 3; ++i) {
      CHECK(std::abs(st.p[i] - ref[i]) <= 1e-10);
    }
    CHECK(st.residual < 1e-13);
  }
}

TEST_CASE("populations form a probability vector") {
  qt::Gen gen(32);
  for (int k = 0; k < 1000; ++k) {
    const SteadyState st = solve_steady(gen.rates());
    double sum = 0.0;
    for (double p : st.p) {
      CHECK(p >= 0.0);
      sum += p;
    }
    CHECK(std::abs(sum - 1.0) < 1e-14);
  }
}

TEST_CASE("populations are invariant under rescaling time") {
  qt::Gen gen(33);
  for (int k = 0; k < 1000; ++k) {
    const Mat3 r = gen.rates();
    const double c = gen.log_uniform(1e-6, 1e6);
    Mat3 scaled = r;
    for (auto& row : scaled) {
      for (double& x : row) x *= c;
    }
    const SteadyState a = solve_steady(r);
    const SteadyState b = solve_steady(scaled);
    for (int i = 0; i < 3; ++i) CHECK(std::abs(a.p[i] - b.p[i]) <= 1e-13);
  }
}

TEST_CASE("generator columns sum to zero") {
  qt::Gen gen(34);
  const Mat3 g = generator(gen.rates());
  for (int i = 0; i < 3; ++i) {
    double s = 0.0;
    double m = 0.0;
    for (int j = 0; j < 3; ++j) {
      s += g[j][i];
      m = std::max(m, std::abs(g[j][i]));
    }
    CHECK(std::abs(s) <= 1e-15 * m);
  }
}

TEST_CASE("disconnected rate graphs are reducible") {
  Mat3 r{};
  r[1][0] = 1.0;
  r[0][1] = 1.0;
  CHECK_FALSE(is_irreducible(r));
  CHECK_THROWS_AS(solve_steady(r), ReducibleChain);
  // One-way chain 0 -> 1 -> 2 with no return.
  Mat3 oneway{};
  oneway[1][0] = 1.0;
  oneway[2][1] = 1.0;
  CHECK_FALSE(is_irreducible(oneway));
  CHECK_THROWS_AS(solve_steady(oneway), ReducibleChain);
  // Closing the cycle makes it irreducible.
  oneway[0][2] = 1.0;
  CHECK(is_irreducible(oneway));
  const SteadyState st = solve_steady(oneway);
  for (double p : st.p) CHECK(p == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("zero temperature with no upward rates is reducible") {
  SystemConfig sys;
  CHECK_THROWS_AS(evaluate(sys, Temperatures{0.0, 0.0, 0.0}), ReducibleChain);
}

TEST_CASE("negative or non-finite rates are rejected") {
  Mat3 r{};
  r[1][0] = 1.0;
  r[0][1] = -1.0;
  CHECK_THROWS_AS(solve_steady(r), InvalidArgument);
  r[0][1] = NAN;
  CHECK_THROWS_AS(solve_steady(r), InvalidArgument);
}

TEST_CASE("two-level detailed balance") {
  Mat3 r{};
  r[1][0] = 2.0;
  r[0][1] = 6.0;
  r[2][1] = 1.0;
  r[1][2] = 1.0;
  const SteadyState st = solve_steady(r);
  CHECK(st.p[0] == doctest::Approx(0.6));
  CHECK(st.p[1] == doctest::Approx(0.2));
  CHECK(st.p[2] == doctest::Approx(0.2));
}

TEST_CASE("ideal coupling carries one probability flux round the cycle") {
  qt::Gen gen(35);
  for (int k = 0; k < 1000; ++k) {
    SystemConfig sys = gen.system(false, false);
    const TransportReport rep = evaluate(sys, gen.temperatures());
    const auto& p = rep.steady.p;
    const auto s = derive_spectrum(sys.circuit);
    const auto ch = sys.bath_channels(s, rep.temperatures);
    const RateMatrix r = assemble_rate_matrix(s, ch);
    const double f01 = r.total[1][0] * p[0] - r.total[0][1] * p[1];
    const double f12 = r.total[2][1] * p[1] - r.total[1][2] * p[2];
    const double f20 = r.total[0][2] * p[2] - r.total[2][0] * p[0];
    const double scale = std::max({r.total[1][0] * p[0], r.total[0][1] * p[1],
                                   r.total[2][1] * p[1], r.total[1][2] * p[2],
                                   r.total[0][2] * p[2], r.total[2][0] * p[0]});
    CHECK(std::abs(f01 - f12) <= 1e-12 * scale);
    CHECK(std::abs(f12 - f20) <= 1e-12 * scale);
  }
}

TEST_CASE("closed-form cycle flux matches the linear solve") {
  // Each resonator weight is chosen so its resonant rates are kappa * n and
  // kappa * (1 + n).
  qt::Gen gen(36);
  const QutritSpectrum s = derive_spectrum({});
  const std::array<double, 3> w{s.omega10, s.omega21, s.omega20};
  for (int k = 0; k < 500; ++k) {
    const double kappa = gen.log_uniform(1e-3, 10.0);
    const double q = gen.log_uniform(10.0, 1e4);
    const Temperatures t = gen.temperatures();
    std::array<BathChannel, 3> ch;
    for (int l = 0; l < 3; ++l) {
      ch[l].id = static_cast<char>('a' + l);
      ch[l].bath_id = ch[l].id;
      ch[l].omega_l = w[l];
      ch[l].q = q;
      ch[l].lambda_res = kappa * q / (2.0 * w[l]);
      ch[l].lambda_off = 0.0;
      ch[l].temperature = t[l];
    }
    const RateMatrix r = assemble_rate_matrix(s, ch);
    const SteadyState st = solve_steady(r);
    const double flux = r.total[1][0] * st.p[0] - r.total[0][1] * st.p[1];
    const double closed = ideal_current_amplitude(w[0] / t[0], w[1] / t[1], w[2] / t[2], kappa);
    const double gross = r.total[1][0] * st.p[0] + r.total[0][1] * st.p[1];
    CHECK(std::abs(flux - closed) <= 1e-10 * gross);
    // Each bath's current is its frequency times the cycle flux.
    const HeatCurrents j = heat_currents(st, r, s);
    CHECK(std::abs(j.j[0] - w[0] * closed) <= 1e-10 * w[0] * gross);
  }
}

TEST_CASE("closed-form sign is fixed") {
  CHECK(std::abs(ideal_current_sign()) == 1.0);
  CHECK(ideal_current_amplitude(1.0, 1.0, 2.0, 1.0) == 0.0);
}

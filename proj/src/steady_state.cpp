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

#include "qheat/steady_state.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "qheat/errors.hpp"
#include "wide.hpp"

namespace qheat {

Mat3 generator(const Mat3& total_rates) {
  Mat3 g{};
  for (int i = 0; i < kLevels; ++i) {
    double out = 0.0;
    for (int j = 0; j < kLevels; ++j) {
      if (j == i) continue;
      g[j][i] = total_rates[j][i];
      out += total_rates[j][i];
    }
    g[i][i] = -out;
  }
  return g;
}

bool is_irreducible(const Mat3& total_rates) {
  // reach[i][j]: j reachable from i. Transitive closure over three nodes.
  std::array<std::array<bool, kLevels>, kLevels> reach{};
  for (int i = 0; i < kLevels; ++i) {
    reach[i][i] = true;
    for (int j = 0; j < kLevels; ++j) {
      if (j != i && total_rates[j][i] > 0.0) reach[i][j] = true;
    }
  }
  for (int k = 0; k < kLevels; ++k) {
    for (int i = 0; i < kLevels; ++i) {
      for (int j = 0; j < kLevels; ++j) reach[i][j] = reach[i][j] || (reach[i][k] && reach[k][j]);
    }
  }
  for (const auto& row : reach) {
    if (!std::all_of(row.begin(), row.end(), [](bool b) { return b; })) return false;
  }
  return true;
}

namespace {

using detail::Wide;
using WideMat = std::array<std::array<Wide, kLevels>, kLevels>;

void check_rates(const Mat3& rates) {
  for (const auto& row : rates) {
    for (double r : row) {
      if (!std::isfinite(r) || r < 0.0) throw InvalidArgument("rates must be finite and >= 0");
    }
  }
}

// Populations from off-diagonal rates r[j][i] (i -> j) summed in wide
// precision. The currents cancel to many digits near equilibrium and near
// stall points, so the balance equations must hold beyond double rounding.
SteadyState solve_extended(const WideMat& r, const Mat3& total_rates) {
  if (!is_irreducible(total_rates)) {
    throw ReducibleChain("rate graph is not strongly connected; stationary state is not unique");
  }
  WideMat a{};
  for (int i = 0; i < kLevels; ++i) {
    Wide out = Wide{0};
    for (int j = 0; j < kLevels; ++j) {
      if (j == i) continue;
      a[j][i] = r[j][i];
      out += r[j][i];
    }
    a[i][i] = -out;
  }
  // One balance equation is redundant; swap it for the normalisation row.
  std::array<Wide, kLevels> rhs{Wide{1}, Wide{0}, Wide{0}};
  a[0] = {Wide{1}, Wide{1}, Wide{1}};

  for (int col = 0; col < kLevels; ++col) {
    int pivot = col;
    for (int k = col + 1; k < kLevels; ++k) {
      if (detail::wide_abs(a[k][col]) > detail::wide_abs(a[pivot][col])) pivot = k;
    }
    std::swap(a[col], a[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    for (int k = col + 1; k < kLevels; ++k) {
      const Wide f = a[k][col] / a[col][col];
      for (int c = col; c < kLevels; ++c) a[k][c] -= f * a[col][c];
      rhs[k] -= f * rhs[col];
    }
  }
  std::array<Wide, kLevels> p_wide{};
  for (int k = kLevels - 1; k >= 0; --k) {
    Wide s = rhs[k];
    for (int c = k + 1; c < kLevels; ++c) s -= a[k][c] * p_wide[c];
    p_wide[k] = s / a[k][k];
  }
  SteadyState st;
  // Round-off can leave a population at -1e-300 deep in the low-T limit.
  Wide norm = Wide{0};
  for (Wide& p : p_wide) {
    if (p < Wide{0}) p = Wide{0};
    norm += p;
  }
  for (int i = 0; i < kLevels; ++i) {
    p_wide[i] /= norm;
    st.p[i] = static_cast<double>(p_wide[i]);
    st.p_correction[i] = static_cast<double>(p_wide[i] - Wide{st.p[i]});
  }

  const Mat3 g = generator(total_rates);
  double gmax = 0.0;
  double res = 0.0;
  for (int j = 0; j < kLevels; ++j) {
    double s = 0.0;
    for (int i = 0; i < kLevels; ++i) {
      s += g[j][i] * st.p[i];
      gmax = std::max(gmax, std::abs(g[j][i]));
    }
    res = std::max(res, std::abs(s));
  }
  st.residual = res / gmax;
  return st;
}

}  // namespace

SteadyState solve_steady(const Mat3& total_rates) {
  check_rates(total_rates);
  WideMat r{};
  for (int j = 0; j < kLevels; ++j) {
    for (int i = 0; i < kLevels; ++i) r[j][i] = total_rates[j][i];
  }
  return solve_extended(r, total_rates);
}

SteadyState solve_steady(const RateMatrix& rates) {
  for (const Mat3& m : rates.per_bath) check_rates(m);
  check_rates(rates.total);
  WideMat r{};
  for (const Mat3& m : rates.per_bath) {
    for (int j = 0; j < kLevels; ++j) {
      for (int i = 0; i < kLevels; ++i) r[j][i] += m[j][i];
    }
  }
  return solve_extended(r, rates.total);
}

double ideal_current_amplitude_raw(double theta_a, double theta_b, double theta_c, double kappa) {
  const double eab = std::exp(theta_a + theta_b);
  const double ec = std::exp(theta_c);
  const double eb = std::exp(theta_b);
  const double numerator = eab - ec;
  const double denominator =
      2.0 + 2.0 * eb + ec - eab - 2.0 * eb * ec - 2.0 * eab * ec;
  return kappa * numerator / denominator;
}

double ideal_current_sign() {
  static const double sign = [] {
    // Symmetric ideal-filter reference point; compare the closed form with
    // the 0 -> 1 link flux from the exact solve.
    const QutritSpectrum s = derive_spectrum(CircuitParams{});
    const double q = 100.0;
    const double kappa = 1.0;
    const std::array<double, kChannels> omega{s.omega10, s.omega21, s.omega20};
    const std::array<double, kChannels> temp{2.0, 1.5, 1.0};
    std::array<BathChannel, kChannels> ch;
    for (int l = 0; l < kChannels; ++l) {
      ch[l].id = channel_label(kAllChannels[l]);
      ch[l].bath_id = ch[l].id;
      ch[l].omega_l = omega[l];
      ch[l].q = q;
      ch[l].lambda_res = kappa * q / (2.0 * omega[l]);
      ch[l].lambda_off = 0.0;
      ch[l].temperature = temp[l];
    }
    const RateMatrix rates = assemble_rate_matrix(s, ch);
    const SteadyState st = solve_steady(rates);
    const double flux = rates.per_bath[0][1][0] * st.p[0] - rates.per_bath[0][0][1] * st.p[1];
    const double closed = ideal_current_amplitude_raw(omega[0] / temp[0], omega[1] / temp[1],
                                                      omega[2] / temp[2], kappa);
    return (flux * closed >= 0.0) ? 1.0 : -1.0;
  }();
  return sign;
}

double ideal_current_amplitude(double theta_a, double theta_b, double theta_c, double kappa) {
  return ideal_current_sign() * ideal_current_amplitude_raw(theta_a, theta_b, theta_c, kappa);
}

}  // namespace qheat

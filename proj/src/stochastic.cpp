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

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <vector>

#include "qheat/errors.hpp"
#include "qheat/steady_state.hpp"

namespace qheat {

namespace {

constexpr int kBatches = 100;

struct Event {
  int channel;
  int target;
  double cumulative;  // running sum of rates out of the source state
};

struct Batch {
  double time{};
  std::array<double, kLevels> occupation{};
  std::array<double, kChannels> energy{};
};

// Batch-means standard error of the ratio estimator sum(x_b) / sum(t_b).
double ratio_standard_error(const std::vector<Batch>& batches, double estimate,
                            auto numerator) {
  double total_time = 0.0;
  for (const Batch& b : batches) total_time += b.time;
  const double mean_time = total_time / static_cast<double>(batches.size());
  double ss = 0.0;
  for (const Batch& b : batches) {
    const double d = (numerator(b) - estimate * b.time) / mean_time;
    ss += d * d;
  }
  const double n = static_cast<double>(batches.size());
  return std::sqrt(ss / (n * (n - 1.0)));
}

}  // namespace

StochasticEstimate gillespie_estimate(const RateMatrix& rates, const QutritSpectrum& spectrum,
                                      std::uint64_t n_jumps, std::uint64_t seed) {
  if (n_jumps < kMinJumps) {
    std::ostringstream os;
    os << "n_jumps must be >= " << kMinJumps << " (got " << n_jumps << ")";
    throw InvalidArgument(os.str());
  }
  if (!is_irreducible(rates.total)) {
    throw ReducibleChain("rate graph is not strongly connected; jump process is not ergodic");
  }

  const auto energies = spectrum.energies();
  std::array<std::vector<Event>, kLevels> events;
  std::array<double, kLevels> escape{};
  for (int i = 0; i < kLevels; ++i) {
    double acc = 0.0;
    for (int l = 0; l < kChannels; ++l) {
      for (int j = 0; j < kLevels; ++j) {
        const double r = rates.per_bath[l][j][i];
        if (j == i || r <= 0.0) continue;
        acc += r;
        events[i].push_back({l, j, acc});
      }
    }
    escape[i] = acc;
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<Batch> batches(kBatches);
  const std::uint64_t per_batch = n_jumps / kBatches;
  int state = 0;
  for (std::uint64_t step = 0; step < n_jumps; ++step) {
    const std::size_t bi =
        std::min<std::uint64_t>(step / per_batch, static_cast<std::uint64_t>(kBatches - 1));
    Batch& batch = batches[bi];

    const double dt = -std::log1p(-unit(rng)) / escape[state];
    batch.time += dt;
    batch.occupation[state] += dt;

    const double pick = unit(rng) * escape[state];
    const auto& out = events[state];
    std::size_t k = 0;
    while (k + 1 < out.size() && out[k].cumulative <= pick) ++k;
    batch.energy[out[k].channel] += energies[out[k].target] - energies[state];
    state = out[k].target;
  }

  StochasticEstimate est;
  est.n_jumps = n_jumps;
  est.seed = seed;
  double total_time = 0.0;
  for (const Batch& b : batches) total_time += b.time;
  est.elapsed_time = total_time;
  for (int i = 0; i < kLevels; ++i) {
    double occ = 0.0;
    for (const Batch& b : batches) occ += b.occupation[i];
    est.p_hat[i] = occ / total_time;
    est.sigma_p[i] = ratio_standard_error(batches, est.p_hat[i],
                                          [i](const Batch& b) { return b.occupation[i]; });
  }
  for (int l = 0; l < kChannels; ++l) {
    double e = 0.0;
    for (const Batch& b : batches) e += b.energy[l];
    est.j_hat[l] = e / total_time;
    est.sigma_j[l] = ratio_standard_error(batches, est.j_hat[l],
                                          [l](const Batch& b) { return b.energy[l]; });
  }
  return est;
}

}  // namespace qheat

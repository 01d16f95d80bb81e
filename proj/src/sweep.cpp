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

#include "qheat/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include "qheat/errors.hpp"

namespace qheat {

namespace {

constexpr std::array<std::pair<AxisKind, std::string_view>, 9> kAxisNames{{
    {AxisKind::base_temperature, "T"},
    {AxisKind::hot_temperature, "T_H"},
    {AxisKind::temp_a, "T_a"},
    {AxisKind::temp_b, "T_b"},
    {AxisKind::temp_c, "T_c"},
    {AxisKind::flux, "phi"},
    {AxisKind::quality_factor, "Q"},
    {AxisKind::log10_q, "log10_Q"},
    {AxisKind::lambda_off, "lambda_off"},
}};

constexpr std::array<std::pair<Metric, std::string_view>, 8> kMetricNames{{
    {Metric::R_ab, "R_ab"},
    {Metric::R_ac, "R_ac"},
    {Metric::R_bc, "R_bc"},
    {Metric::R_ab_c, "R_(ab)c"},
    {Metric::R_ac_b, "R_(ac)b"},
    {Metric::R_bc_a, "R_(bc)a"},
    {Metric::C, "C"},
    {Metric::regime, "regime"},
}};

bool is_temperature_axis(AxisKind k) {
  return k == AxisKind::base_temperature || k == AxisKind::hot_temperature ||
         k == AxisKind::temp_a || k == AxisKind::temp_b || k == AxisKind::temp_c;
}

void apply_axis(AxisKind kind, double v, SystemConfig& cfg, TemperatureScenario& sc) {
  switch (kind) {
    case AxisKind::base_temperature: sc.base_temperature = v; break;
    case AxisKind::hot_temperature: sc.hot_temperature = v; break;
    case AxisKind::temp_a: sc.override_temperature[0] = v; break;
    case AxisKind::temp_b: sc.override_temperature[1] = v; break;
    case AxisKind::temp_c: sc.override_temperature[2] = v; break;
    case AxisKind::flux: cfg.circuit.phi = v; break;
    case AxisKind::quality_factor: cfg.set_quality_factor(v); break;
    case AxisKind::log10_q: cfg.set_quality_factor(std::pow(10.0, v)); break;
    case AxisKind::lambda_off: cfg.set_lambda_off(v); break;
  }
}

double evaluate_metric(Metric m, const SystemConfig& cfg, const TemperatureScenario& sc,
                       PassiveMode passive) {
  using enum Channel;
  const double t = sc.base_temperature;
  const double th = sc.hot_temperature;
  const std::optional<double> pt =
      passive == PassiveMode::mean ? std::optional<double>(mean_passive_temperature(t, th))
                                   : std::nullopt;
  switch (m) {
    case Metric::R_ab: return rectification_3t(cfg, a, b, t, th, pt);
    case Metric::R_ac: return rectification_3t(cfg, a, c, t, th, pt);
    case Metric::R_bc: return rectification_3t(cfg, b, c, t, th, pt);
    case Metric::R_ab_c: return rectification_2t(cfg, a, b, c, t, th);
    case Metric::R_ac_b: return rectification_2t(cfg, a, c, b, t, th);
    case Metric::R_bc_a: return rectification_2t(cfg, b, c, a, t, th);
    case Metric::C: return circulation(cfg, t, th);
    case Metric::regime: break;
  }
  throw InvalidArgument("regime is not a numeric metric");
}

SweepRow evaluate_point(const SweepSpec& spec, const std::vector<Metric>& numeric,
                        std::size_t row) {
  SweepRow out;
  SystemConfig cfg = spec.fixed;
  TemperatureScenario sc = spec.scenario;

  // Row-major: the last axis varies fastest.
  std::vector<std::size_t> k(spec.axes.size());
  std::size_t rem = row;
  for (std::size_t d = spec.axes.size(); d-- > 0;) {
    k[d] = rem % spec.axes[d].points;
    rem /= spec.axes[d].points;
  }
  for (std::size_t d = 0; d < spec.axes.size(); ++d) {
    const double v = spec.axes[d].value(k[d]);
    out.axis_values.push_back(v);
    apply_axis(spec.axes[d].kind, v, cfg, sc);
  }
  out.metrics.assign(numeric.size(), std::nullopt);

  try {
    const TransportReport report = evaluate(cfg, sc);
    out.p = report.steady.p;
    out.j = report.currents.j;
    out.residual = report.steady.residual;
    if (report.regime) {
      out.regime = report.regime->regime;
      if (report.regime->hybrid) out.flags.emplace_back("hybrid");
    } else {
      out.flags.emplace_back("ambiguous_regime");
    }
    out.ok = true;
  } catch (const Error& e) {
    out.flags.push_back("error:" + std::string(error_code_name(e.code())));
    return out;
  }

  for (std::size_t m = 0; m < numeric.size(); ++m) {
    try {
      out.metrics[m] = evaluate_metric(numeric[m], cfg, sc, spec.passive);
    } catch (const UndefinedCoefficient&) {
      out.flags.push_back("undefined:" + std::string(metric_name(numeric[m])));
    } catch (const Error& e) {
      out.flags.push_back("error:" + std::string(error_code_name(e.code())) + ":" +
                          std::string(metric_name(numeric[m])));
    }
  }
  return out;
}

}  // namespace

std::string_view axis_name(AxisKind kind) noexcept {
  for (const auto& [k, n] : kAxisNames) {
    if (k == kind) return n;
  }
  return "?";
}

std::optional<AxisKind> parse_axis(std::string_view name) noexcept {
  for (const auto& [k, n] : kAxisNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

double Axis::value(std::size_t k) const {
  if (k + 1 == points) return max;
  return min + (max - min) * static_cast<double>(k) / static_cast<double>(points - 1);
}

std::string_view metric_name(Metric m) noexcept {
  for (const auto& [k, n] : kMetricNames) {
    if (k == m) return n;
  }
  return "?";
}

std::optional<Metric> parse_metric(std::string_view name) noexcept {
  for (const auto& [k, n] : kMetricNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

void SweepSpec::validate() const {
  if (axes.empty() || axes.size() > 2) throw InvalidArgument("a sweep needs one or two axes");
  if (axes.size() == 2 && axes[0].kind == axes[1].kind) {
    throw InvalidArgument("sweep axes must be distinct");
  }
  for (const Axis& ax : axes) {
    const std::string name(axis_name(ax.kind));
    if (ax.points < 2) throw InvalidArgument("axis " + name + ": point count must be >= 2");
    if (!std::isfinite(ax.min) || !std::isfinite(ax.max) || !(ax.min < ax.max)) {
      throw InvalidArgument("axis " + name + ": requires finite min < max");
    }
    if (is_temperature_axis(ax.kind) && ax.min < 0.0) {
      throw InvalidArgument("axis " + name + ": temperatures must be >= 0");
    }
    if (ax.kind == AxisKind::quality_factor && !(ax.min > 0.0)) {
      throw InvalidArgument("axis Q: quality factors must be > 0");
    }
    if (ax.kind == AxisKind::lambda_off && ax.min < 0.0) {
      throw InvalidArgument("axis lambda_off: must be >= 0");
    }
  }
}

std::size_t SweepSpec::size() const {
  std::size_t n = 1;
  for (const Axis& ax : axes) n *= ax.points;
  return n;
}

bool SweepSpec::has_axis(AxisKind kind) const {
  return std::any_of(axes.begin(), axes.end(), [kind](const Axis& a) { return a.kind == kind; });
}

std::size_t SweepResult::undefined_count() const {
  std::size_t n = 0;
  for (const SweepRow& r : rows) {
    for (const std::string& f : r.flags) n += f.starts_with("undefined:") ? 1 : 0;
  }
  return n;
}

std::size_t SweepResult::error_count() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const SweepRow& r) { return !r.ok; }));
}

SweepResult run_map(const SweepSpec& spec, const SweepOptions& options) {
  spec.validate();

  SweepResult result;
  for (const Axis& ax : spec.axes) result.axes.push_back(ax.kind);
  for (Metric m : spec.metrics) {
    if (m == Metric::regime) {
      result.regime_column = true;
    } else if (std::find(result.metrics.begin(), result.metrics.end(), m) == result.metrics.end()) {
      result.metrics.push_back(m);
    }
  }

  const std::size_t n = spec.size();
  result.rows.resize(n);
  unsigned workers = options.workers ? options.workers : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1u, static_cast<unsigned>(std::max<std::size_t>(n, 1)));

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      result.rows[i] = evaluate_point(spec, result.metrics, i);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  return result;
}

SweepResult run_flux_sweep(const SweepSpec& spec, const SweepOptions& options) {
  if (!spec.has_axis(AxisKind::flux)) throw InvalidArgument("flux sweep requires a phi axis");
  return run_map(spec, options);
}

SweepResult run_q_sweep(const SweepSpec& spec, const SweepOptions& options) {
  const auto q_axis = std::find_if(spec.axes.begin(), spec.axes.end(), [](const Axis& a) {
    return a.kind == AxisKind::quality_factor || a.kind == AxisKind::log10_q;
  });
  if (q_axis == spec.axes.end()) throw InvalidArgument("Q sweep requires a Q or log10_Q axis");
  SweepResult result = run_map(spec, options);

  SystemConfig lowest = spec.fixed;
  lowest.set_quality_factor(q_axis->kind == AxisKind::log10_q ? std::pow(10.0, q_axis->min)
                                                              : q_axis->min);
  if (auto w = linewidth_advisory(lowest)) result.warnings.push_back(*w);
  return result;
}

SweepResult run_sweep(const SweepSpec& spec, const SweepOptions& options) {
  if (spec.has_axis(AxisKind::quality_factor) || spec.has_axis(AxisKind::log10_q)) {
    return run_q_sweep(spec, options);
  }
  if (spec.has_axis(AxisKind::flux)) return run_flux_sweep(spec, options);
  return run_map(spec, options);
}

std::optional<std::string> linewidth_advisory(const SystemConfig& config) {
  QutritSpectrum s;
  try {
    s = derive_spectrum(config.circuit);
  } catch (const Error&) {
    return std::nullopt;
  }
  const auto omega = config.resonator_frequencies(s);
  double widest = 0.0;
  for (int l = 0; l < kChannels; ++l) widest = std::max(widest, omega[l] / config.channels[l].q);
  const double gap = s.omega21 - s.omega32;
  if (widest <= gap) return std::nullopt;
  std::ostringstream os;
  os << "resonator linewidth " << widest << " exceeds the omega21-omega32 gap " << gap
     << "; the third excited level is no longer filtered out";
  return os.str();
}

std::string format_number(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

void write_csv(const SweepResult& result, std::ostream& out) {
  std::string line;
  auto field = [&line](std::string_view s) {
    if (!line.empty()) line += ',';
    line += s;
  };
  for (AxisKind a : result.axes) field(axis_name(a));
  for (const char* c : {"p0", "p1", "p2", "j_a", "j_b", "j_c"}) field(c);
  for (Metric m : result.metrics) field(metric_name(m));
  if (result.regime_column) field("regime");
  field("residual");
  field("flags");
  out << line << '\n';

  for (const SweepRow& r : result.rows) {
    line.clear();
    for (double v : r.axis_values) field(format_number(v));
    for (double v : r.p) field(r.ok ? format_number(v) : "");
    for (double v : r.j) field(r.ok ? format_number(v) : "");
    for (const auto& m : r.metrics) field(m ? format_number(*m) : "");
    if (result.regime_column) field(r.regime ? regime_name(*r.regime) : "");
    field(r.ok ? format_number(r.residual) : "");
    std::string flags;
    for (const std::string& f : r.flags) {
      if (!flags.empty()) flags += ';';
      flags += f;
    }
    field(flags);
    out << line << '\n';
  }
}

void write_csv(const SweepResult& result, const std::string& path) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  write_csv(result, f);
  f.flush();
  if (!f) throw IoError("failed writing '" + path + "'");
}

}  // namespace qheat

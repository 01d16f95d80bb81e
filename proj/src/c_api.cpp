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

#include "qheat/qheat.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <json.hpp>
#include <new>
#include <sstream>
#include <string>

#include "qheat/config.hpp"
#include "qheat/errors.hpp"
#include "qheat/steady_state.hpp"
#include "qheat/sweep.hpp"
#include "qheat/transport.hpp"

struct qheat_config {
  qheat::RunConfig cfg;
};

struct qheat_sweep {
  qheat::SweepResult result;
  double wall_seconds{};
};

namespace {

thread_local std::string g_last_error;

qheat_status to_status(qheat::ErrorCode code) {
  using qheat::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return QHEAT_ERR_INVALID_ARGUMENT;
    case ErrorCode::InvalidFlux: return QHEAT_ERR_INVALID_FLUX;
    case ErrorCode::NonPositiveFrequency: return QHEAT_ERR_NONPOSITIVE_FREQUENCY;
    case ErrorCode::ChannelMismatch: return QHEAT_ERR_CHANNEL_MISMATCH;
    case ErrorCode::InconsistentBath: return QHEAT_ERR_INCONSISTENT_BATH;
    case ErrorCode::ReducibleChain: return QHEAT_ERR_REDUCIBLE_CHAIN;
    case ErrorCode::UndefinedCoefficient: return QHEAT_ERR_UNDEFINED_COEFFICIENT;
    case ErrorCode::AmbiguousExtremum: return QHEAT_ERR_AMBIGUOUS_EXTREMUM;
    case ErrorCode::Config: return QHEAT_ERR_CONFIG;
    case ErrorCode::Io: return QHEAT_ERR_IO;
  }
  return QHEAT_ERR_INTERNAL;
}

// Runs fn, translating exceptions into status codes and the error message.
template <typename Fn>
qheat_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    fn();
    return QHEAT_OK;
  } catch (const qheat::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  } catch (...) {
    g_last_error = "unknown error";
  }
  return QHEAT_ERR_INTERNAL;
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw qheat::InvalidArgument(std::string(what) + " must not be NULL");
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qheat::Channel channel(char c) {
  auto ch = qheat::parse_channel(c);
  if (!ch) throw qheat::InvalidArgument(std::string("unknown channel '") + c + "'");
  return *ch;
}

int regime_code(const std::optional<qheat::RegimeResult>& r) {
  if (!r) return QHEAT_REGIME_UNDEFINED;
  return static_cast<int>(r->regime);
}

void fill_steady(const qheat::TransportReport& r, qheat_steady_report* out) {
  for (int i = 0; i < 3; ++i) {
    out->p[i] = r.steady.p[i];
    out->j[i] = r.currents.j[i];
  }
  out->scale = r.currents.scale;
  out->residual = r.steady.residual;
  out->regime = regime_code(r.regime);
  out->hybrid = (r.regime && r.regime->hybrid) ? 1 : 0;
}

}  // namespace

extern "C" {

const char* qheat_version(void) { return "0.1.0"; }

const char* qheat_status_name(qheat_status status) {
  switch (status) {
    case QHEAT_OK: return "ok";
    case QHEAT_ERR_INVALID_ARGUMENT: return "invalid argument";
    case QHEAT_ERR_INVALID_FLUX: return "invalid flux";
    case QHEAT_ERR_NONPOSITIVE_FREQUENCY: return "non-positive frequency";
    case QHEAT_ERR_CHANNEL_MISMATCH: return "channel mismatch";
    case QHEAT_ERR_INCONSISTENT_BATH: return "inconsistent bath";
    case QHEAT_ERR_REDUCIBLE_CHAIN: return "reducible chain";
    case QHEAT_ERR_UNDEFINED_COEFFICIENT: return "undefined coefficient";
    case QHEAT_ERR_AMBIGUOUS_EXTREMUM: return "ambiguous extremum";
    case QHEAT_ERR_CONFIG: return "configuration error";
    case QHEAT_ERR_IO: return "i/o error";
    case QHEAT_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* qheat_last_error(void) { return g_last_error.c_str(); }

void qheat_string_free(char* s) { std::free(s); }

const char* qheat_preset_names(void) {
  static const std::string names = [] {
    std::string s;
    for (auto n : qheat::preset_names()) {
      if (!s.empty()) s += ',';
      s += n;
    }
    return s;
  }();
  return names.c_str();
}

qheat_status qheat_config_create(qheat_config** out) {
  return guarded([&] {
    require(out, "out");
    *out = new qheat_config{};
  });
}

qheat_status qheat_config_from_json(const char* json, qheat_config** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    auto cfg = std::make_unique<qheat_config>();
    cfg->cfg = qheat::run_config_from_json(json);
    *out = cfg.release();
  });
}

qheat_status qheat_config_apply_json(qheat_config* cfg, const char* json) {
  return guarded([&] {
    require(cfg, "cfg");
    require(json, "json");
    qheat::RunConfig copy = cfg->cfg;
    qheat::apply_json(copy, json);
    cfg->cfg = std::move(copy);
  });
}

qheat_status qheat_config_to_json(const qheat_config* cfg, char** out) {
  return guarded([&] {
    require(cfg, "cfg");
    require(out, "out");
    *out = duplicate(qheat::run_config_to_json(cfg->cfg));
  });
}

qheat_status qheat_config_set_number(qheat_config* cfg, const char* key, double value) {
  return guarded([&] {
    require(cfg, "cfg");
    require(key, "key");
    nlohmann::json j;
    j[key] = value;
    qheat::RunConfig copy = cfg->cfg;
    qheat::apply_json(copy, j.dump());
    cfg->cfg = std::move(copy);
  });
}

qheat_status qheat_config_set_string(qheat_config* cfg, const char* key, const char* value) {
  return guarded([&] {
    require(cfg, "cfg");
    require(key, "key");
    require(value, "value");
    nlohmann::json j;
    j[key] = value;
    qheat::RunConfig copy = cfg->cfg;
    qheat::apply_json(copy, j.dump());
    cfg->cfg = std::move(copy);
  });
}

qheat_status qheat_config_validate(const qheat_config* cfg) {
  return guarded([&] {
    require(cfg, "cfg");
    cfg->cfg.validate();
  });
}

qheat_status qheat_config_advisories(const qheat_config* cfg, char** out) {
  return guarded([&] {
    require(cfg, "cfg");
    require(out, "out");
    std::string text;
    if (auto w = qheat::transmon_advisory(cfg->cfg.system.circuit)) text += *w + "\n";
    if (auto w = qheat::linewidth_advisory(cfg->cfg.system)) text += *w + "\n";
    *out = duplicate(text);
  });
}

void qheat_config_destroy(qheat_config* cfg) { delete cfg; }

qheat_status qheat_spectrum_compute(const qheat_config* cfg, qheat_spectrum* out) {
  return guarded([&] {
    require(cfg, "cfg");
    require(out, "out");
    const auto s = qheat::derive_spectrum(cfg->cfg.system.circuit);
    *out = qheat_spectrum{s.omega0, s.omega10, s.omega21, s.omega20, s.omega32};
  });
}

qheat_status qheat_steady(const qheat_config* cfg, qheat_steady_report* out) {
  return guarded([&] {
    require(cfg, "cfg");
    require(out, "out");
    cfg->cfg.validate();
    fill_steady(qheat::evaluate(cfg->cfg.system, cfg->cfg.temperatures), out);
  });
}

qheat_status qheat_verify(const qheat_config* cfg, qheat_steady_report* exact,
                          qheat_stochastic_report* stochastic) {
  return guarded([&] {
    require(cfg, "cfg");
    require(exact, "exact");
    require(stochastic, "stochastic");
    const qheat::RunConfig& rc = cfg->cfg;
    rc.validate();
    if (rc.jumps < qheat::kMinJumps) {
      throw qheat::InvalidArgument("jumps: at least " + std::to_string(qheat::kMinJumps) +
                                   " jumps required (got " + std::to_string(rc.jumps) + ")");
    }
    const auto report = qheat::evaluate(rc.system, rc.temperatures);
    const auto rates = qheat::assemble_rate_matrix(
        report.spectrum, rc.system.bath_channels(report.spectrum, rc.temperatures));
    const auto est = qheat::gillespie_estimate(rates, report.spectrum, rc.jumps, rc.seed);
    fill_steady(report, exact);
    for (int i = 0; i < 3; ++i) {
      stochastic->p[i] = est.p_hat[i];
      stochastic->sigma_p[i] = est.sigma_p[i];
      stochastic->j[i] = est.j_hat[i];
      stochastic->sigma_j[i] = est.sigma_j[i];
    }
    stochastic->n_jumps = est.n_jumps;
    stochastic->seed = est.seed;
  });
}

qheat_status qheat_rectification_3t(const qheat_config* cfg, char l, char l_prime, double t,
                                    double t_hot, const double* passive_temperature,
                                    double* out) {
  return guarded([&] {
    require(cfg, "cfg");
    require(out, "out");
    std::optional<double> passive;
    if (passive_temperature != nullptr) passive = *passive_temperature;
    *out = qheat::rectification_3t(cfg->cfg.system, channel(l), channel(l_prime), t, t_hot,
                                   passive);
  });
}

qheat_status qheat_rectification_2t(const qheat_config* cfg, const char* merged, char single,
                                    double t, double t_hot, double* out) {
  return guarded([&] {
    require(cfg, "cfg");
    require(merged, "merged");
    require(out, "out");
    if (std::strlen(merged) != 2) {
      throw qheat::InvalidArgument("merged must name two channels, e.g. \"bc\"");
    }
    *out = qheat::rectification_2t(cfg->cfg.system, channel(merged[0]), channel(merged[1]),
                                   channel(single), t, t_hot);
  });
}

qheat_status qheat_circulation(const qheat_config* cfg, double t, double t_hot, double* out) {
  return guarded([&] {
    require(cfg, "cfg");
    require(out, "out");
    *out = qheat::circulation(cfg->cfg.system, t, t_hot);
  });
}

qheat_status qheat_sweep_run(const qheat_config* cfg, unsigned workers, qheat_sweep** out) {
  return guarded([&] {
    require(cfg, "cfg");
    require(out, "out");
    cfg->cfg.validate();
    const qheat::SweepSpec spec = cfg->cfg.sweep_spec();
    const auto start = std::chrono::steady_clock::now();
    auto sweep = std::make_unique<qheat_sweep>();
    sweep->result = qheat::run_sweep(spec, qheat::SweepOptions{workers});
    sweep->wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    *out = sweep.release();
  });
}

qheat_status qheat_sweep_get_summary(const qheat_sweep* sweep, qheat_sweep_summary* out) {
  return guarded([&] {
    require(sweep, "sweep");
    require(out, "out");
    out->rows = sweep->result.rows.size();
    out->undefined = sweep->result.undefined_count();
    out->errors = sweep->result.error_count();
    out->wall_seconds = sweep->wall_seconds;
  });
}

qheat_status qheat_sweep_warnings(const qheat_sweep* sweep, char** out) {
  return guarded([&] {
    require(sweep, "sweep");
    require(out, "out");
    std::string text;
    for (const auto& w : sweep->result.warnings) text += w + "\n";
    *out = duplicate(text);
  });
}

qheat_status qheat_sweep_to_csv(const qheat_sweep* sweep, char** out) {
  return guarded([&] {
    require(sweep, "sweep");
    require(out, "out");
    std::ostringstream os;
    qheat::write_csv(sweep->result, os);
    *out = duplicate(os.str());
  });
}

qheat_status qheat_sweep_write_csv(const qheat_sweep* sweep, const char* path) {
  return guarded([&] {
    require(sweep, "sweep");
    require(path, "path");
    qheat::write_csv(sweep->result, std::string(path));
  });
}

void qheat_sweep_destroy(qheat_sweep* sweep) { delete sweep; }

}  // extern "C"

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

// qheat - command-line front end over the qheat C API.
//
//   qheat steady [flags]   populations, currents and regime at one point
//   qheat sweep  [flags]   parameter grid to CSV (--preset fig2 ... fig8)
//   qheat verify [flags]   exact solve versus jump simulation (z-scores)
//
// Exit codes: 0 ok, 2 configuration, 3 solver, 4 verification mismatch.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "qheat/qheat.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitConfig = 2;
constexpr int kExitSolver = 3;
constexpr int kExitMismatch = 4;

struct Options {
  std::optional<std::string> config_file;
  std::optional<double> ej, ec, flux, q, lambda_res, lambda_off, ta, tb, tc;
  std::optional<std::string> merge, preset, out;
  std::optional<std::uint64_t> seed, jumps;
  bool dump_config{false};
  bool human{false};
  unsigned workers{0};
};

struct ConfigDeleter {
  void operator()(qheat_config* c) const { qheat_config_destroy(c); }
};
struct SweepDeleter {
  void operator()(qheat_sweep* s) const { qheat_sweep_destroy(s); }
};
using ConfigPtr = std::unique_ptr<qheat_config, ConfigDeleter>;
using SweepPtr = std::unique_ptr<qheat_sweep, SweepDeleter>;

int exit_code(qheat_status s) {
  switch (s) {
    case QHEAT_OK: return kExitOk;
    case QHEAT_ERR_REDUCIBLE_CHAIN: return kExitSolver;
    case QHEAT_ERR_INTERNAL: return kExitInternal;
    default: return kExitConfig;
  }
}

int fail(qheat_status s) {
  std::cerr << "qheat: " << qheat_status_name(s) << ": " << qheat_last_error() << '\n';
  return exit_code(s);
}

std::string take(char* s) {
  std::string out = s ? s : "";
  qheat_string_free(s);
  return out;
}

std::string fmt(double v, bool human) {
  char buf[64];
  std::snprintf(buf, sizeof buf, human ? "%.6g" : "%.17g", v);
  return buf;
}

// Effective configuration: preset, then file keys, then flags.
qheat_status build_config(const Options& o, ConfigPtr& out) {
  nlohmann::json j = nlohmann::json::object();
  if (o.config_file) {
    std::ifstream f(*o.config_file);
    if (!f) {
      std::cerr << "qheat: cannot read config file '" << *o.config_file << "'\n";
      return QHEAT_ERR_CONFIG;
    }
    try {
      j = nlohmann::json::parse(f);
    } catch (const nlohmann::json::exception& e) {
      std::cerr << "qheat: " << *o.config_file << ": " << e.what() << '\n';
      return QHEAT_ERR_CONFIG;
    }
  }
  auto set = [&j](const char* key, const auto& v) {
    if (v) j[key] = *v;
  };
  set("ej", o.ej);
  set("ec", o.ec);
  set("flux", o.flux);
  set("q", o.q);
  set("lambda_res", o.lambda_res);
  set("lambda_off", o.lambda_off);
  set("ta", o.ta);
  set("tb", o.tb);
  set("tc", o.tc);
  set("merge", o.merge);
  set("preset", o.preset);
  set("out", o.out);
  set("seed", o.seed);
  set("jumps", o.jumps);

  qheat_config* raw = nullptr;
  const qheat_status s = qheat_config_from_json(j.dump().c_str(), &raw);
  out.reset(raw);
  return s;
}

void print_advisories(const qheat_config* cfg) {
  char* text = nullptr;
  if (qheat_config_advisories(cfg, &text) != QHEAT_OK) return;
  std::istringstream lines(take(text));
  for (std::string line; std::getline(lines, line);) {
    if (!line.empty()) std::cerr << "warning: " << line << '\n';
  }
}

const char* regime_label(int code) {
  switch (code) {
    case QHEAT_REGIME_R_A: return "R_a";
    case QHEAT_REGIME_R_B: return "R_b";
    case QHEAT_REGIME_R_C: return "R_c";
    case QHEAT_REGIME_P_A: return "P_a";
    case QHEAT_REGIME_P_B: return "P_b";
    case QHEAT_REGIME_P_C: return "P_c";
    case QHEAT_REGIME_UNDEFINED: return "undefined";
    default: return "none";
  }
}

int cmd_steady(const qheat_config* cfg, const Options& o) {
  qheat_spectrum sp{};
  qheat_steady_report r{};
  if (auto s = qheat_config_validate(cfg); s != QHEAT_OK) return fail(s);
  if (auto s = qheat_spectrum_compute(cfg, &sp); s != QHEAT_OK) return fail(s);
  if (auto s = qheat_steady(cfg, &r); s != QHEAT_OK) return fail(s);
  print_advisories(cfg);

  const bool h = o.human;
  std::cout << "omega10 " << fmt(sp.omega10, h) << '\n'
            << "omega21 " << fmt(sp.omega21, h) << '\n'
            << "omega20 " << fmt(sp.omega20, h) << '\n'
            << "omega32 " << fmt(sp.omega32, h) << '\n';
  for (int i = 0; i < 3; ++i) std::cout << 'p' << i << ' ' << fmt(r.p[i], h) << '\n';
  for (int l = 0; l < 3; ++l) {
    std::cout << "j_" << static_cast<char>('a' + l) << ' ' << fmt(r.j[l], h) << '\n';
  }
  std::cout << "regime " << regime_label(r.regime) << (r.hybrid ? " (hybrid)" : "") << '\n'
            << "residual " << fmt(r.residual, h) << '\n';
  return kExitOk;
}

int cmd_sweep(const qheat_config* cfg, const Options& o) {
  if (auto s = qheat_config_validate(cfg); s != QHEAT_OK) return fail(s);
  print_advisories(cfg);

  qheat_sweep* raw = nullptr;
  if (auto s = qheat_sweep_run(cfg, o.workers, &raw); s != QHEAT_OK) return fail(s);
  SweepPtr sweep(raw);

  char* json_text = nullptr;
  if (auto s = qheat_config_to_json(cfg, &json_text); s != QHEAT_OK) return fail(s);
  const std::string out = nlohmann::json::parse(take(json_text)).value("out", "");

  if (out.empty()) {
    char* csv = nullptr;
    if (auto s = qheat_sweep_to_csv(sweep.get(), &csv); s != QHEAT_OK) return fail(s);
    std::cout << take(csv);
  } else if (auto s = qheat_sweep_write_csv(sweep.get(), out.c_str()); s != QHEAT_OK) {
    return fail(s);
  }

  char* warnings = nullptr;
  if (qheat_sweep_warnings(sweep.get(), &warnings) == QHEAT_OK) {
    std::istringstream lines(take(warnings));
    for (std::string line; std::getline(lines, line);) {
      if (!line.empty()) std::cerr << "warning: " << line << '\n';
    }
  }

  qheat_sweep_summary sum{};
  qheat_sweep_get_summary(sweep.get(), &sum);
  std::ostream& log = out.empty() ? std::cerr : std::cout;
  log << "grid points " << sum.rows << '\n'
      << "undefined coefficients " << sum.undefined << '\n'
      << "failed points " << sum.errors << '\n'
      << "wall time " << fmt(sum.wall_seconds, true) << " s\n";
  if (!out.empty()) log << "wrote " << out << '\n';
  return kExitOk;
}

int cmd_verify(const qheat_config* cfg, const Options& o) {
  qheat_steady_report exact{};
  qheat_stochastic_report stoch{};
  if (auto s = qheat_verify(cfg, &exact, &stoch); s != QHEAT_OK) return fail(s);
  print_advisories(cfg);

  const bool h = o.human;
  bool agree = true;
  std::cout << "quantity exact stochastic sigma z\n";
  auto row = [&](const std::string& name, double det, double est, double sigma) {
    const double z = sigma > 0.0 ? (est - det) / sigma : (est == det ? 0.0 : INFINITY);
    if (!(std::abs(z) <= 3.0)) agree = false;
    std::cout << name << ' ' << fmt(det, h) << ' ' << fmt(est, h) << ' ' << fmt(sigma, h) << ' '
              << fmt(z, true) << '\n';
  };
  for (int i = 0; i < 3; ++i) {
    row("p" + std::to_string(i), exact.p[i], stoch.p[i], stoch.sigma_p[i]);
  }
  for (int l = 0; l < 3; ++l) {
    row(std::string("j_") + static_cast<char>('a' + l), exact.j[l], stoch.j[l], stoch.sigma_j[l]);
  }
  std::cout << "jumps " << stoch.n_jumps << " seed " << stoch.seed << '\n'
            << (agree ? "agreement within 3 sigma" : "MISMATCH beyond 3 sigma") << '\n';
  return agree ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qheat: steady-state heat transport through a three-bath qutrit"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("--config", o.config_file, "JSON configuration file");
    sub->add_option("--ej", o.ej, "Josephson energy (hbar omega_r)");
    sub->add_option("--ec", o.ec, "charging energy (hbar omega_r)");
    sub->add_option("--flux", o.flux, "reduced flux phase phi (rad)");
    sub->add_option("--q", o.q, "quality factor of all resonators");
    sub->add_option("--lambda-res", o.lambda_res, "resonant coupling weight");
    sub->add_option("--lambda-off", o.lambda_off, "off-resonant coupling weight");
    sub->add_option("--ta", o.ta, "k_B T of bath a");
    sub->add_option("--tb", o.tb, "k_B T of bath b");
    sub->add_option("--tc", o.tc, "k_B T of bath c");
    sub->add_option("--merge", o.merge, "route two resonators into one bath, e.g. b,c");
    sub->add_option("--preset", o.preset, std::string("named sweep: ") + qheat_preset_names());
    sub->add_option("--out", o.out, "CSV destination (sweep)");
    sub->add_option("--seed", o.seed, "root RNG seed");
    sub->add_option("--jumps", o.jumps, "jump count for verify");
    sub->add_option("--workers", o.workers, "sweep worker threads (0 = all cores)");
    sub->add_flag("--dump-config", o.dump_config, "print the effective configuration and exit");
    sub->add_flag("--human", o.human, "round numbers for reading");
  };

  auto* steady = app.add_subcommand("steady", "single-point steady state");
  auto* sweep = app.add_subcommand("sweep", "parameter sweep to CSV");
  auto* verify = app.add_subcommand("verify", "exact versus stochastic cross-check");
  for (auto* sub : {steady, sweep, verify}) add_common(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  ConfigPtr cfg;
  if (auto s = build_config(o, cfg); s != QHEAT_OK) {
    // File problems were already reported; library errors carry a message.
    return qheat_last_error()[0] == '\0' ? kExitConfig : fail(s);
  }

  if (o.dump_config) {
    char* text = nullptr;
    if (auto s = qheat_config_to_json(cfg.get(), &text); s != QHEAT_OK) return fail(s);
    std::cout << take(text) << '\n';
    return kExitOk;
  }

  if (steady->parsed()) return cmd_steady(cfg.get(), o);
  if (sweep->parsed()) return cmd_sweep(cfg.get(), o);
  return cmd_verify(cfg.get(), o);
}

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

#include <charconv>
#include <cmath>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "qheat/errors.hpp"
#include "qheat/sweep.hpp"

using namespace qheat;
namespace qt = qheat::testing;

namespace {

std::string csv(const SweepResult& r) {
  std::ostringstream os;
  write_csv(r, os);
  return os.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

SweepSpec small_map() {
  SweepSpec s;
  s.axes = {{AxisKind::base_temperature, 0.5, 1.5, 5}, {AxisKind::hot_temperature, 0.5, 3.0, 6}};
  s.metrics = {Metric::R_ab, Metric::C};
  s.scenario = TemperatureScenario::with_hot({Channel::a}, 1.0, 2.0);
  return s;
}

}  // namespace

TEST_CASE("axis spacing includes both endpoints") {
  const Axis ax{AxisKind::flux, 0.0, 4.5, 451};
  CHECK(ax.value(0) == 0.0);
  CHECK(ax.value(450) == 4.5);
  CHECK(ax.value(100) == doctest::Approx(1.0));
}

TEST_CASE("axis and metric names round-trip") {
  for (AxisKind k : {AxisKind::base_temperature, AxisKind::hot_temperature, AxisKind::temp_a,
                     AxisKind::temp_b, AxisKind::temp_c, AxisKind::flux, AxisKind::quality_factor,
                     AxisKind::log10_q, AxisKind::lambda_off}) {
    CHECK(parse_axis(axis_name(k)) == k);
  }
  for (Metric m : {Metric::R_ab, Metric::R_ac, Metric::R_bc, Metric::R_ab_c, Metric::R_ac_b,
                   Metric::R_bc_a, Metric::C, Metric::regime}) {
    CHECK(parse_metric(metric_name(m)) == m);
  }
  CHECK(axis_name(AxisKind::hot_temperature) == "T_H");
  CHECK(metric_name(Metric::R_bc_a) == "R_(bc)a");
  CHECK_FALSE(parse_axis("bogus").has_value());
}

TEST_CASE("sweep definition validation") {
  SweepSpec s = small_map();
  CHECK_NOTHROW(s.validate());
  CHECK(s.size() == 30);
  s.axes[1].points = 1;
  CHECK_THROWS_AS(s.validate(), InvalidArgument);
  s = small_map();
  s.axes[1].kind = AxisKind::base_temperature;
  CHECK_THROWS_AS(s.validate(), InvalidArgument);
  s = small_map();
  s.axes[0].min = -1.0;
  CHECK_THROWS_AS(s.validate(), InvalidArgument);
  s = small_map();
  s.axes.clear();
  CHECK_THROWS_AS(s.validate(), InvalidArgument);
}

TEST_CASE("rows are row-major with the last axis fastest") {
  const SweepResult r = run_map(small_map(), {1});
  REQUIRE(r.rows.size() == 30);
  CHECK(r.rows[0].axis_values == std::vector<double>{0.5, 0.5});
  CHECK(r.rows[1].axis_values == std::vector<double>{0.5, 1.0});
  CHECK(r.rows[6].axis_values == std::vector<double>{0.75, 0.5});
  CHECK(r.rows[29].axis_values == std::vector<double>{1.5, 3.0});
}

TEST_CASE("sweep points match direct evaluation") {
  SweepSpec s = small_map();
  const SweepResult r = run_map(s, {2});
  for (const SweepRow& row : r.rows) {
    const double t = row.axis_values[0], th = row.axis_values[1];
    const TransportReport rep =
        evaluate(s.fixed, TemperatureScenario::with_hot({Channel::a}, t, th));
    REQUIRE(row.ok);
    CHECK(row.p == rep.steady.p);
    CHECK(row.j == rep.currents.j);
    if (t != th) {
      REQUIRE(row.metrics[0].has_value());
      CHECK(*row.metrics[0] == rectification_3t(s.fixed, Channel::a, Channel::b, t, th));
      CHECK(*row.metrics[1] == circulation(s.fixed, t, th));
    }
  }
}

TEST_CASE("equal temperatures flag undefined coefficients") {
  const SweepResult r = run_map(small_map(), {1});
  // T == T_H at (0.5, 0.5) and (1.0, 1.0) and (1.5, 1.5).
  CHECK(r.undefined_count() == 6);
  CHECK(r.error_count() == 0);
  const std::string text = csv(r);
  CHECK(text.find("undefined:R_ab;undefined:C") != std::string::npos);
  const auto lines = split(text, '\n');
  CHECK(lines[0] == "T,T_H,p0,p1,p2,j_a,j_b,j_c,R_ab,C,residual,flags");
  const auto first = split(lines[1], ',');
  REQUIRE(first.size() == 12);
  CHECK(first[8].empty());
  CHECK(first[9].empty());
}

TEST_CASE("serial and parallel sweeps write identical CSV") {
  SweepSpec s = small_map();
  s.axes = {{AxisKind::base_temperature, 0.1, 2.0, 21}, {AxisKind::hot_temperature, 0.1, 4.0, 23}};
  const std::string serial = csv(run_map(s, {1}));
  CHECK(serial == csv(run_map(s, {3})));
  CHECK(serial == csv(run_map(s, {8})));
  CHECK(serial == csv(run_map(s, {0})));
}

TEST_CASE("invalid flux points are flagged, not fatal") {
  SweepSpec s;
  s.axes = {{AxisKind::flux, 4.0, 5.0, 3}};
  s.metrics = {Metric::C};
  s.scenario = TemperatureScenario::with_hot({Channel::a}, 0.9, 3.0);
  const SweepResult r = run_flux_sweep(s, {1});
  REQUIRE(r.rows.size() == 3);
  CHECK(r.rows[0].ok);
  CHECK_FALSE(r.rows[2].ok);
  CHECK(r.error_count() >= 1);
  CHECK(csv(r).find("error:InvalidFlux") != std::string::npos);
}

TEST_CASE("flux and Q sweeps require their axes") {
  CHECK_THROWS_AS(run_flux_sweep(small_map()), InvalidArgument);
  CHECK_THROWS_AS(run_q_sweep(small_map()), InvalidArgument);
}

TEST_CASE("low quality factors trigger the linewidth advisory") {
  SweepSpec s;
  s.axes = {{AxisKind::log10_q, 0.0, 2.0, 3}};
  s.metrics = {};
  s.scenario = TemperatureScenario::explicit_temperatures({2.0, 1.5, 1.0});
  const SweepResult r = run_q_sweep(s, {1});
  CHECK_FALSE(r.warnings.empty());
  SystemConfig sys;
  CHECK_FALSE(linewidth_advisory(sys).has_value());
  sys.set_quality_factor(5.0);
  CHECK(linewidth_advisory(sys).has_value());
}

TEST_CASE("regime column appears only when requested") {
  SweepSpec s;
  s.axes = {{AxisKind::temp_a, 2.0, 4.0, 4}};
  s.metrics = {Metric::regime};
  s.scenario = TemperatureScenario::explicit_temperatures({2.0, 1.5, 2.0});
  const std::string text = csv(run_map(s, {1}));
  CHECK(text.starts_with("T_a,p0,p1,p2,j_a,j_b,j_c,regime,residual,flags\n"));
  // T_a = 2 ties with T_c as the maximum.
  const auto lines = split(text, '\n');
  CHECK(split(lines[1], ',')[7].empty());
}

TEST_CASE("numbers are written with round-trip precision") {
  qt::Gen gen(61);
  for (int k = 0; k < 1000; ++k) {
    const double v = gen.log_uniform(1e-300, 1e300) * (gen.coin() ? 1.0 : -1.0);
    const std::string s = format_number(v);
    double back = 0.0;
    std::from_chars(s.data(), s.data() + s.size(), back);
    CHECK(back == v);
  }
  CHECK(format_number(0.5) == "0.5");
}

TEST_CASE("every preset is valid and names are listed") {
  const auto names = preset_names();
  CHECK(names.size() == 10);
  for (auto n : names) {
    const SweepSpec s = preset(n);
    CHECK_NOTHROW(s.validate());
  }
  CHECK(preset("fig7c").axes[0].points == 451);
  CHECK(preset("fig4").axes[0].points == 201);
  CHECK(preset("fig4").fixed.channels[0].lambda_off == 0.0);
  CHECK(preset("fig5").fixed.channels[0].lambda_off == 1.0);
  CHECK(preset("fig6").passive == PassiveMode::mean);
  try {
    preset("fig99");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("fig7c") != std::string::npos);
  }
}

TEST_CASE("unwritable CSV destination raises an I/O error") {
  const SweepResult r = run_map(small_map(), {1});
  try {
    write_csv(r, std::string("/nonexistent-dir/out.csv"));
    FAIL("expected IoError");
  } catch (const IoError& e) {
    CHECK(std::string(e.what()).find("/nonexistent-dir/out.csv") != std::string::npos);
  }
}

// Copyright 2026 The tripartite-gme Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "gme/cli/commands.hpp"
#include "gme/cli/matrix_file.hpp"
#include "gme/states.hpp"

namespace gme::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

double qutrit_ghz_closed_form(double x) {
  return (std::sqrt(2.0 / 9.0 * x * x + 1.0) + std::numbers::sqrt2 * x + 4.0 * x + 2.0) / 3.0;
}

TEST(Grid, ParsingAndPoints) {
  const auto g = parse_grid("0:1:11");
  const auto p = g.points();
  ASSERT_EQ(p.size(), 11u);
  EXPECT_EQ(p.front(), 0.0);
  EXPECT_EQ(p.back(), 1.0);
  for (std::size_t i = 1; i < p.size(); ++i) EXPECT_LT(p[i - 1], p[i]);
  EXPECT_THROW(parse_grid("1:0:5"), std::invalid_argument);
  EXPECT_THROW(parse_grid("0:0:5"), std::invalid_argument);
  EXPECT_THROW(parse_grid("0:1:1"), std::invalid_argument);
  EXPECT_THROW(parse_grid("0:1"), std::invalid_argument);
  EXPECT_THROW(parse_grid("a:1:3"), std::invalid_argument);
  EXPECT_THROW(parse_bracket("0.5:0.5"), std::invalid_argument);
  EXPECT_EQ(parse_bracket("0.25:0.75"), std::make_pair(0.25, 0.75));
}

TEST(Sweep, NoiseConventionsAgree) {
  EXPECT_EQ(to_visibility(SweepParameter::noise_weight, 0.25), 0.75);
  EXPECT_EQ(to_visibility(SweepParameter::visibility, 0.25), 0.25);
}

TEST(Sweep, QubitGhzNoiseWeight) {
  const auto factory = make_factory({"ghz", 2, 0, 4, std::nullopt});
  const auto res = scan(factory, {0.0, 1.0, 11}, {SweepParameter::noise_weight, CriterionId::pt_qubit});
  ASSERT_EQ(res.points.size(), 11u);
  for (const auto& p : res.points) EXPECT_NEAR(p.report.value, 2.0 - 2.0 * p.parameter, 1e-9);
  ASSERT_TRUE(res.crossover.has_value());
  EXPECT_NEAR(*res.crossover, (2.0 - std::sqrt(3.0)) / 2.0, 1e-6);
}

TEST(Sweep, CrossoverBracketsSignChange) {
  const auto factory = make_factory({"ghz", 2, 0, 4, std::nullopt});
  const SweepOptions so{SweepParameter::noise_weight, CriterionId::pt_qubit};
  const auto res = scan(factory, {0.0, 1.0, 7}, so);
  ASSERT_TRUE(res.crossover.has_value());
  const double x = *res.crossover;
  const auto at = [&](double p) {
    const auto r = evaluate(factory(1.0 - p), so.criterion, so.mode);
    return r.value - r.threshold;
  };
  EXPECT_GT(at(x - 5e-7), 0.0);
  EXPECT_LT(at(x + 5e-7), 0.0);
}

TEST(Sweep, ThreadsKeepGridOrder) {
  const auto factory = make_factory({"ghz", 3, 0, 4, std::nullopt});
  SweepOptions so{SweepParameter::visibility, CriterionId::ct_qudit, ThresholdMode::corollary, 1};
  const auto serial = scan(factory, {0.0, 1.0, 9}, so);
  so.threads = 4;
  const auto parallel = scan(factory, {0.0, 1.0, 9}, so);
  ASSERT_EQ(serial.points.size(), parallel.points.size());
  for (std::size_t i = 0; i < serial.points.size(); ++i) {
    EXPECT_EQ(serial.points[i].parameter, parallel.points[i].parameter);
    EXPECT_EQ(serial.points[i].report.value, parallel.points[i].report.value);
  }
  EXPECT_FALSE(serial.crossover.has_value());
}

TEST(Crossover, QubitGhz) {
  const auto factory = make_factory({"ghz", 2, 0, 4, std::nullopt});
  const double x = find_crossover(factory, 0.0, 1.0, {SweepParameter::noise_weight, CriterionId::pt_qubit});
  EXPECT_NEAR(x, (2.0 - std::sqrt(3.0)) / 2.0, 1e-6);
}

TEST(Crossover, MaximallyMixedHasNone) {
  const auto factory = make_factory({"mixed", 2, 0, 4, std::nullopt});
  EXPECT_THROW(find_crossover(factory, 0.0, 1.0, {}), NoCrossingError);
}

TEST(Crossover, QutritGhzCorollaryHasNone) {
  const auto factory = make_factory({"ghz", 3, 0, 4, std::nullopt});
  try {
    find_crossover(factory, 0.0, 1.0, {SweepParameter::visibility, CriterionId::ct_qudit, ThresholdMode::corollary});
    FAIL() << "expected no crossing";
  } catch (const NoCrossingError& e) {
    EXPECT_LT(e.lo_gap(), 0.0);
    EXPECT_NEAR(e.hi_gap(), qutrit_ghz_closed_form(1.0) - thresholds(3).corollary, 1e-12);
  }
}

TEST(Factory, CustomNeedsBase) {
  EXPECT_THROW(make_factory({"custom", 2, 0, 4, std::nullopt}), std::invalid_argument);
  EXPECT_THROW(make_factory({"bogus", 2, 0, 4, std::nullopt}), std::invalid_argument);
  const auto f = make_factory({"custom", 2, 0, 4, ghz(2)});
  EXPECT_EQ(f(1.0).rho(), ghz(2).rho());
  EXPECT_NEAR(f(0.0).purity(), 1.0 / 8.0, 1e-15);
}

TEST(Cli, EvaluateQubitGhz) {
  const auto r = call({"evaluate", "--state", "ghz", "--d", "2", "--visibility", "1", "--format", "machine"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["value"].get<double>(), 2.0, 1e-12);
  EXPECT_NEAR(j["threshold"].get<double>(), 1.7320508, 1e-7);
  EXPECT_EQ(j["verdict"], "GME-detected");
  EXPECT_NEAR(j["norms"]["3|12"].get<double>(), 2.0, 1e-12);
}

TEST(Cli, EvaluateQutritGhz) {
  auto r = call({"evaluate", "--d", "3", "--visibility", "0", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_NEAR(std::stod(rows[1][6]), 1.0, 1e-12);
  EXPECT_EQ(rows[1][8], "inconclusive");

  r = call({"evaluate", "--d", "3", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  rows = csv_rows(r.out);
  const double expected = (std::sqrt(11.0 / 9.0) + std::numbers::sqrt2 + 6.0) / 3.0;
  EXPECT_NEAR(std::stod(rows[1][6]), expected, 1e-12);
}

TEST(Cli, VerdictIsNotExitStatus) {
  EXPECT_EQ(call({"evaluate", "--d", "2", "--noise-weight", "0.9"}).code, 0);
  EXPECT_EQ(call({"evaluate", "--d", "2", "--noise-weight", "0.0"}).code, 0);
}

TEST(Cli, InputErrorsAreNonzero) {
  EXPECT_EQ(call({"evaluate", "--noise-weight", "0.1", "--visibility", "0.2"}).code, 2);
  EXPECT_EQ(call({"evaluate", "--d", "3", "--criterion", "pt-qubit"}).code, 2);
  EXPECT_EQ(call({"evaluate", "--d", "2", "--criterion", "ct-qudit"}).code, 2);
  EXPECT_EQ(call({"evaluate", "--state", "custom"}).code, 2);
  EXPECT_EQ(call({"scan", "--grid", "1:0:3"}).code, 2);
  EXPECT_EQ(call({"scan", "--grid", "0:1:1"}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(Cli, ScanCsvColumns) {
  const auto r = call({"scan", "--d", "2", "--sweep", "noise-weight", "--grid", "0:1:11", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 12u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"parameter", "value", "threshold", "value_minus_threshold"}));
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double x = std::stod(rows[i][0]);
    const double v = std::stod(rows[i][1]);
    EXPECT_NEAR(v, 2.0 - 2.0 * x, 1e-9);
    EXPECT_NEAR(std::stod(rows[i][2]), std::sqrt(3.0), 1e-15);
    EXPECT_NEAR(std::stod(rows[i][3]), v - std::sqrt(3.0), 1e-15);
  }
}

TEST(Cli, ScanQutritMatchesClosedForm) {
  const auto r = call({"scan", "--d", "3", "--grid", "0:1:6", "--format", "csv", "--threads", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 7u);
  for (std::size_t i = 1; i < rows.size(); ++i)
    EXPECT_NEAR(std::stod(rows[i][1]), qutrit_ghz_closed_form(std::stod(rows[i][0])), 1e-8);
}

TEST(Cli, ScanMixedIsConstant) {
  const auto r = call({"scan", "--state", "mixed", "--d", "3", "--grid", "0:1:5", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = csv_rows(r.out);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_EQ(rows[i][1], rows[1][1]);
}

TEST(Cli, CrossoverCommand) {
  auto r = call({"crossover", "--d", "2", "--sweep", "noise-weight", "--bracket", "0:1", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(std::stod(csv_rows(r.out)[1][1]), (2.0 - std::sqrt(3.0)) / 2.0, 1e-6);

  r = call({"crossover", "--state", "mixed", "--d", "2"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("no crossing"), std::string::npos);

  r = call({"crossover", "--d", "3", "--mode", "corollary"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("note:"), std::string::npos);
  EXPECT_NE(r.err.find("0.708"), std::string::npos);
}

TEST(Cli, AuditBellProbe) {
  const auto r = call({"audit", "--d", "2", "--samples", "0", "--probe", "bell", "--format", "machine"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["max_statistic"].get<double>(), 2.0, 1e-12);
  EXPECT_NEAR(j["bound"].get<double>(), std::sqrt(3.0), 1e-15);
  EXPECT_EQ(j["bound_exceeded"], true);
}

TEST(Cli, AuditMixedProbeQutrit) {
  const auto r = call({"audit", "--d", "3", "--samples", "0", "--probe", "mixed", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = csv_rows(r.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_NEAR(std::stod(rows[1][2]), 1.0, 1e-12);
}

TEST(Cli, AuditCsvIsReproducible) {
  const std::vector<std::string> args = {"audit", "--d", "2", "--samples", "25", "--seed", "9", "--format", "csv"};
  const auto a = call(args);
  const auto b = call(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(csv_rows(a.out).size(), 26u);
  EXPECT_NE(call({"audit", "--d", "2", "--samples", "25", "--seed", "10", "--format", "csv"}).out, a.out);
}

TEST(Cli, AuditRealSeparablePairIsZero) {
  const auto r = call({"audit", "--d", "2", "--samples", "20", "--real", "--separable-pair", "--format", "machine"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["max_statistic"].get<double>(), 0.0, 1e-12);
  EXPECT_EQ(j["bound_exceeded"], false);
}

TEST(Cli, GenThenEvaluateFile) {
  const auto path = std::filesystem::temp_directory_path() / "gme_cli_gen_test.json";
  auto r = call({"gen", "--state", "ghz", "--d", "2", "--noise-weight", "0.25", "--out", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto loaded = load_matrix_file(path);
  EXPECT_EQ(loaded.rho(), white_noise_mix(ghz(2), 0.75).rho());

  r = call({"evaluate", "--input", path.string(), "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(std::stod(csv_rows(r.out)[1][6]), 1.5, 1e-9);

  std::ofstream(path) << "{\"d\": 2, \"parties\": 4}";
  r = call({"evaluate", "--input", path.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("parties"), std::string::npos);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace gme::cli

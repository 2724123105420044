// Copyright 2026 The sqstat Authors
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
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cli/commands.hpp"
#include "cli/format.hpp"
#include "cli/sweep.hpp"

namespace sqstat::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, StatsTable) {
  const Outcome o = invoke({"stats", "--r", "0.5", "--alpha-mag", "1", "--x", "1"});
  EXPECT_EQ(o.code, exit_code::kOk) << o.err;
  EXPECT_NE(o.out.find("2.16958"), std::string::npos) << o.out;
}

TEST(Cli, StatsJsonShape) {
  const Outcome o = invoke({"stats", "--r", "0.5", "--alpha-mag", "1", "--x",
                            "1", "--state", "photons-in-squeezed-thermal",
                            "--format", "json"});
  ASSERT_EQ(o.code, exit_code::kOk) << o.err;
  const nlohmann::json doc = nlohmann::json::parse(o.out);
  ASSERT_TRUE(doc.contains("inputs"));
  ASSERT_TRUE(doc.contains("results"));
  EXPECT_EQ(doc["inputs"]["state"], "photons-in-squeezed-thermal");
  ASSERT_EQ(doc["results"].size(), 1u);
  EXPECT_NEAR(doc["results"][0]["mean"].get<double>(), 1.537456744862669, 1e-11);
  EXPECT_NEAR(doc["results"][0]["variance"].get<double>(), 4.447162399953099,
              1e-11);
}

TEST(Cli, PhysicalTemperatureMatchesDimensionless) {
  // x = hbar*omega/(k_B T) = 1 at T = 300 K.
  const double omega = 300.0 * 1.380649e-23 / 1.054571817e-34;
  std::ostringstream w;
  w.precision(17);
  w << omega;
  const Outcome physical = invoke({"stats", "--r", "0.3", "--temp-kelvin", "300",
                                   "--omega-rad-s", w.str(), "--format", "csv"});
  const Outcome direct = invoke({"stats", "--r", "0.3", "--x", "1", "--format", "csv"});
  ASSERT_EQ(physical.code, exit_code::kOk) << physical.err;
  const auto a = parse_csv(physical.out);
  const auto b = parse_csv(direct.out);
  ASSERT_EQ(a.size(), 2u);
  EXPECT_NEAR(std::stod(a[1][1]), std::stod(b[1][1]), 1e-10);
}

TEST(Cli, RerunsAreByteIdentical) {
  const std::vector<std::string> args = {"sweep", "--param", "r", "--start", "0",
                                         "--stop", "1", "--steps", "5", "--x",
                                         "0.7", "--alpha-mag", "0.4", "--format",
                                         "json", "--oracle"};
  const Outcome first = invoke(args);
  const Outcome second = invoke(args);
  ASSERT_EQ(first.code, exit_code::kOk) << first.err;
  EXPECT_EQ(first.out, second.out);
}

TEST(Cli, CsvRoundTripIsExact) {
  const Outcome o = invoke({"sweep", "--param", "phi", "--start", "0", "--stop",
                            "3", "--steps", "7", "--r", "0.4", "--alpha-mag",
                            "1.2", "--x", "1.3", "--format", "csv"});
  ASSERT_EQ(o.code, exit_code::kOk) << o.err;
  const auto rows = parse_csv(o.out);
  ASSERT_EQ(rows.size(), 8u);
  EXPECT_EQ(rows[0], (CsvRow{"param", "value", "mean", "variance"}));
  for (std::size_t i = 1; i < rows.size(); ++i) {
    for (std::size_t j = 1; j < rows[i].size(); ++j) {
      const double v = std::stod(rows[i][j]);
      EXPECT_EQ(format_number(v, kMachineDigits), rows[i][j]);
    }
  }
  EXPECT_EQ(render_csv(rows[0], {rows.begin() + 1, rows.end()}), o.out);
}

TEST(Cli, ThermalSweepOverTemperature) {
  const Outcome o = invoke({"sweep", "--param", "x", "--start", "0.69314718055994531",
                            "--stop", "3", "--steps", "6", "--format", "csv"});
  ASSERT_EQ(o.code, exit_code::kOk) << o.err;
  const auto rows = parse_csv(o.out);
  ASSERT_EQ(rows.size(), 7u);
  EXPECT_NEAR(std::stod(rows[1][2]), 1.0, 1e-11);
  EXPECT_NEAR(std::stod(rows[1][3]), 2.0, 1e-11);
}

TEST(Cli, MeanNonDecreasingInSqueeze) {
  const Outcome o = invoke({"sweep", "--param", "r", "--start", "0", "--stop",
                            "2", "--steps", "21", "--alpha-mag", "1.5", "--x",
                            "0.8", "--format", "csv"});
  ASSERT_EQ(o.code, exit_code::kOk) << o.err;
  const auto rows = parse_csv(o.out);
  for (std::size_t i = 2; i < rows.size(); ++i) {
    EXPECT_GE(std::stod(rows[i][2]), std::stod(rows[i - 1][2]));
  }
}

TEST(Cli, SpectralCoherentOnly) {
  const Outcome o = invoke({"spectral", "--r", "0", "--alpha-mag", "1", "--x",
                            "1", "--format", "json"});
  ASSERT_EQ(o.code, exit_code::kOk) << o.err;
  const nlohmann::json doc = nlohmann::json::parse(o.out);
  const nlohmann::json& result = doc["results"][0];
  EXPECT_NEAR(result["chemical_potential"].get<double>(), std::log(2.0), 1e-11);
  EXPECT_NEAR(result["normalization"].get<double>(), 2.0, 1e-11);
}

TEST(Cli, VerifySmallPointPasses) {
  const Outcome o = invoke({"verify", "--r", "0", "--alpha-mag", "0", "--x", "1",
                            "--format", "csv"});
  ASSERT_EQ(o.code, exit_code::kOk) << o.err;
  const auto rows = parse_csv(o.out);
  ASSERT_EQ(rows.size(), 3u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_LT(std::stod(rows[i][8]), 1e-10);
    EXPECT_LT(std::stod(rows[i][11]), 1e-10);
    EXPECT_EQ(rows[i][14], "true");
  }
}

TEST(Cli, VerifyFailureExitsOne) {
  const Outcome o = invoke({"verify", "--r", "0.8", "--phi", "1.5708",
                            "--alpha-mag", "1.5", "--alpha-phase", "1", "--x",
                            "0.5", "--rel-tol", "1e-8", "--fock-dim-max", "64",
                            "--format", "json"});
  EXPECT_EQ(o.code, exit_code::kVerificationFailed);
  const nlohmann::json doc = nlohmann::json::parse(o.out);
  EXPECT_FALSE(doc["results"][0]["pass"].get<bool>());
}

TEST(Cli, UsageErrorsExitTwo) {
  for (const std::vector<std::string>& args :
       std::vector<std::vector<std::string>>{
           {},
           {"bogus"},
           {"stats", "--x", "abc"},
           {"stats", "--x", "0"},
           {"stats", "--r", "-1", "--x", "1"},
           {"stats", "--x", "1", "--temp-kelvin", "300"},
           {"stats", "--x", "1", "--format", "xml"},
           {"verify", "--r", "5", "--x", "1"},
           {"sweep", "--param", "q", "--start", "0", "--stop", "1", "--x", "1"},
           {"sweep", "--param", "r", "--start", "0", "--stop", "1", "--steps",
            "1", "--x", "1"}}) {
    const Outcome o = invoke(args);
    EXPECT_EQ(o.code, exit_code::kUsage) << ::testing::PrintToString(args);
    EXPECT_FALSE(o.err.empty()) << ::testing::PrintToString(args);
  }
}

TEST(Cli, HelpExitsZero) {
  EXPECT_EQ(invoke({"--help"}).code, exit_code::kOk);
}

TEST(Cli, GridHas108DistinctPoints) {
  const auto grid = verification_grid();
  EXPECT_EQ(grid.size(), 108u);
}

TEST(Sweep, ValuesAreInclusive) {
  const SweepSpec spec{SweepParameter::kR, 0.0, 0.3, 4,
                       ModeParameters{SqueezeParameter(0, 0),
                                      CoherentAmplitude(0, 0),
                                      DimensionlessTemperature(1)}};
  const auto v = swept_values(spec);
  ASSERT_EQ(v.size(), 4u);
  EXPECT_EQ(v.front(), 0.0);
  EXPECT_EQ(v.back(), 0.3);
  EXPECT_EQ(parse_sweep_parameter("alpha_phase"), SweepParameter::kAlphaPhase);
  EXPECT_FALSE(parse_sweep_parameter("alpha").has_value());
}

TEST(Format, NonFiniteNumbers) {
  EXPECT_EQ(format_number(std::nan(""), 12), "nan");
  EXPECT_TRUE(json_number(INFINITY).is_null());
}

}  // namespace
}  // namespace sqstat::cli

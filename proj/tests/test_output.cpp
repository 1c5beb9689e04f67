// Copyright 2026 The qkr Authors
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

#include <algorithm>
#include <catch2/catch_amalgamated.hpp>
#include <sstream>

#include "test_support.hpp"

using namespace qkr;

namespace {

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> lines;
  std::istringstream is(s);
  std::string line;
  while (std::getline(is, line)) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("format_significant prints 12 significant digits by default") {
  CHECK(format_significant(2.0 / 3.0) == "0.666666666667");
  CHECK(format_significant(4.0 / 9.0) == "0.444444444444");
  CHECK(format_significant(0.0) == "0");
  CHECK(format_significant(1.0) == "1");
  CHECK(format_significant(0.1) == "0.1");
  CHECK(format_significant(123456789012345.0) == "1.23456789012e+14");
  CHECK(format_significant(2.0 / 3.0, 3) == "0.667");
}

TEST_CASE("decoherence sweep CSV schema") {
  const SweepResult r =
      sweep_decoherence(InitialState::ghz(), {u_opt(), u_opt(), u_opt()},
                        ChannelKind::phase_damping(), {0.0, 1.0});
  const auto lines = lines_of(sweep_p_csv(r));
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "p,channel,noise_stage,payoff_alice,payoff_bob,payoff_charlie");
  CHECK(lines[1] == "0,pd,pre,0.666666666667,0.666666666667,0.666666666667");
  CHECK(lines[2].rfind("1,pd,pre,", 0) == 0);
  // Every row has exactly 6 comma-separated fields.
  for (std::size_t i = 1; i < lines.size(); ++i)
    CHECK(std::count(lines[i].begin(), lines[i].end(), ',') == 5);
}

TEST_CASE("angle sweep CSV schema and row order") {
  const std::vector<double> thetas = {0.0, 1.0};
  const std::vector<double> phis = {0.0, 0.5, 1.0};
  const SweepResult r = sweep_state_angles(thetas, phis, {u_opt(), u_opt(), u_opt()},
                                           ChannelKind::amplitude_damping(), 0.25);
  const auto lines = lines_of(sweep_angles_csv(r));
  REQUIRE(lines.size() == 7);
  CHECK(lines[0] == "theta,phi,p,channel,payoff_alice,payoff_bob,payoff_charlie");
  // Row-major, theta outer: rows 1..3 have theta 0, rows 4..6 have theta 1.
  CHECK(lines[1].rfind("0,0,0.25,ad,", 0) == 0);
  CHECK(lines[2].rfind("0,0.5,0.25,ad,", 0) == 0);
  CHECK(lines[3].rfind("0,1,0.25,ad,", 0) == 0);
  CHECK(lines[4].rfind("1,0,0.25,ad,", 0) == 0);
  for (std::size_t i = 1; i < lines.size(); ++i)
    CHECK(std::count(lines[i].begin(), lines[i].end(), ',') == 6);
}

TEST_CASE("CSV reflects the channel code and noise stage of the sweep") {
  const SweepResult post =
      sweep_decoherence(InitialState::ghz(), {u_opt(), u_opt(), u_opt()},
                        ChannelKind::trit_phase_flip(), {0.3}, NoiseStage::kPostStrategy);
  const auto lines = lines_of(sweep_p_csv(post));
  REQUIRE(lines.size() == 2);
  CHECK(lines[1].rfind("0.3,tpf,post,", 0) == 0);
}

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

#ifndef QKR_OUTPUT_HPP
#define QKR_OUTPUT_HPP

#include <cstdio>
#include <sstream>
#include <string>

#include "qkr/engine.hpp"

namespace qkr {

/// 12 significant digits, the precision every CLI number is printed with.
inline std::string format_significant(double v, int digits = 12) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

/// CSV for decoherence sweeps. Stable header, rows in ascending grid order.
inline std::string sweep_p_csv(const SweepResult& r) {
  std::ostringstream os;
  os << "p,channel,noise_stage,payoff_alice,payoff_bob,payoff_charlie\n";
  const std::string channel = r.base.channel.code();
  const std::string stage = noise_stage_name(r.base.noise_stage);
  for (std::size_t i = 0; i < r.p_grid.size(); ++i) {
    const PayoffTriple& t = r.payoffs[i];
    os << format_significant(r.p_grid[i]) << ',' << channel << ',' << stage << ','
       << format_significant(t.alice) << ',' << format_significant(t.bob) << ','
       << format_significant(t.charlie) << '\n';
  }
  return os.str();
}

/// CSV for state-angle sweeps, row-major with theta as the outer axis.
inline std::string sweep_angles_csv(const SweepResult& r) {
  std::ostringstream os;
  os << "theta,phi,p,channel,payoff_alice,payoff_bob,payoff_charlie\n";
  const std::string channel = r.base.channel.code();
  std::size_t i = 0;
  for (double th : r.theta_grid)
    for (double ph : r.phi_grid) {
      const PayoffTriple& t = r.payoffs[i++];
      os << format_significant(th) << ',' << format_significant(ph) << ','
         << format_significant(r.base.p) << ',' << channel << ',' << format_significant(t.alice)
         << ',' << format_significant(t.bob) << ',' << format_significant(t.charlie) << '\n';
    }
  return os.str();
}

}  // namespace qkr

#endif  // QKR_OUTPUT_HPP

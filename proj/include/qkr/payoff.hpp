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

#ifndef QKR_PAYOFF_HPP
#define QKR_PAYOFF_HPP

#include <cmath>
#include <stdexcept>

#include "qkr/complex_matrix.hpp"
#include "qkr/states.hpp"

namespace qkr {

enum class Player { kAlice, kBob, kCharlie };

inline constexpr Player kAllPlayers[] = {Player::kAlice, Player::kBob, Player::kCharlie};

/// True iff the player's restaurant choice is unique among the three trits:
/// this is the winning condition, covering both the all-distinct kets and
/// the kets where the other two collide.
inline constexpr bool choice_is_unique(int a, int b, int c, Player player) {
  switch (player) {
    case Player::kAlice: return a != b && a != c;
    case Player::kBob: return b != a && b != c;
    case Player::kCharlie: return c != a && c != b;
  }
  return false;
}

/// Diagonal 0/1 projector paying the player exactly when their trit differs
/// from both others; trace 12 (6 all-distinct kets + 6 other-pair kets).
struct PayoffOperator {
  Player player = Player::kAlice;
  ComplexMatrix matrix{kTriqutritDim};
};

inline PayoffOperator payoff_operator(Player player) {
  PayoffOperator op;
  op.player = player;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        if (choice_is_unique(a, b, c, player)) {
          const int i = basis_index(a, b, c);
          op.matrix(i, i) = 1.0;
        }
  return op;
}

struct PayoffTriple {
  double alice = 0.0;
  double bob = 0.0;
  double charlie = 0.0;
};

/// Re(trace(op rho)); an imaginary residue above 1e-8 means something
/// upstream produced a non-Hermitian state and is reported as an error.
inline double expected_payoff(const DensityMatrix& rho, const PayoffOperator& op) {
  Complex t = 0.0;
  for (std::size_t i = 0; i < kTriqutritDim; ++i) t += op.matrix(i, i) * rho.matrix()(i, i);
  if (std::abs(t.imag()) > 1e-8)
    throw std::runtime_error("expected_payoff: imaginary trace residue above 1e-8");
  return t.real();
}

}  // namespace qkr

#endif  // QKR_PAYOFF_HPP

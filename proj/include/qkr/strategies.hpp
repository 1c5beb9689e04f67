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

#ifndef QKR_STRATEGIES_HPP
#define QKR_STRATEGIES_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qkr/complex_matrix.hpp"
#include "qkr/states.hpp"

namespace qkr {

/// The eight angles defining one player's SU(3) move. These theta/phi are the
/// strategy angles, unrelated to the initial-state StateAngles.
struct StrategyParams {
  double theta;   // [0, pi]
  double phi;     // [0, 2pi]
  double chi;     // [0, pi/2]
  double alpha1;  // [0, 2pi]
  double alpha2;  // [0, 2pi]
  double alpha3;  // [0, 2pi]
  double beta1;   // [0, 2pi]
  double beta2;   // [0, 2pi]

  void validate() const {
    const double pi = std::numbers::pi;
    auto in = [](double x, double lo, double hi) { return x >= lo && x <= hi; };
    if (!in(theta, 0.0, pi)) throw std::invalid_argument("StrategyParams: theta out of [0, pi]");
    if (!in(chi, 0.0, pi / 2.0)) throw std::invalid_argument("StrategyParams: chi out of [0, pi/2]");
    for (double a : {phi, alpha1, alpha2, alpha3, beta1, beta2})
      if (!in(a, 0.0, 2.0 * pi))
        throw std::invalid_argument("StrategyParams: phase angle out of [0, 2pi]");
  }
};

struct StrategyTriple {
  StrategyParams alice;
  StrategyParams bob;
  StrategyParams charlie;
};

/// The symmetric move that attains the quantum optimum 2/3 on the GHZ state.
/// Note the (theta, phi) order: theta = acos(1/sqrt 3), phi = pi/4 is the
/// assignment that actually produces the optimal unitary, the same way those
/// two angles pair up for the maximally entangled initial state.
inline StrategyParams u_opt() {
  const double pi = std::numbers::pi;
  return StrategyParams{
      .theta = std::acos(1.0 / std::sqrt(3.0)),
      .phi = pi / 4.0,
      .chi = pi / 4.0,
      .alpha1 = 5.0 * pi / 18.0,
      .alpha2 = 5.0 * pi / 18.0,
      .alpha3 = 5.0 * pi / 18.0,
      .beta1 = pi / 3.0,
      .beta2 = 11.0 * pi / 6.0,
  };
}

/// Angles for which build_unitary evaluates to the identity matrix (up to
/// double-precision trig roundoff, ~1e-16 per entry).
inline StrategyParams identity_params() {
  return StrategyParams{
      .theta = std::numbers::pi / 2.0,
      .phi = 0.0,
      .chi = std::numbers::pi / 2.0,
      .alpha1 = 0.0,
      .alpha2 = 0.0,
      .alpha3 = 0.0,
      .beta1 = 0.0,
      .beta2 = std::numbers::pi,
  };
}

/// Builds the 3x3 strategy unitary. Column 0 is the z vector, column 1 the
/// conjugated omega vector, column 2 their cross-product completion; the
/// construction is unitary for every parameter choice because z and
/// conj(omega) are orthonormal by trigonometric identity. A unitarity
/// self-check at 1e-8 guards against implementation faults.
inline ComplexMatrix build_unitary(const StrategyParams& s) {
  s.validate();
  const double st = std::sin(s.theta), ct = std::cos(s.theta);
  const double sp = std::sin(s.phi), cp = std::cos(s.phi);
  const double sx = std::sin(s.chi), cx = std::cos(s.chi);
  auto phase = [](double a) { return std::polar(1.0, a); };

  const Complex z[3] = {
      st * cp * phase(s.alpha1),
      st * sp * phase(s.alpha2),
      ct * phase(s.alpha3),
  };
  const Complex w[3] = {
      cx * ct * cp * phase(s.beta1 - s.alpha1) + sx * sp * phase(s.beta2 - s.alpha1),
      cx * ct * sp * phase(s.beta1 - s.alpha2) - sx * cp * phase(s.beta2 - s.alpha2),
      -cx * st * phase(s.beta1 - s.alpha3),
  };
  const Complex zc[3] = {std::conj(z[0]), std::conj(z[1]), std::conj(z[2])};

  ComplexMatrix u(3);
  for (int i = 0; i < 3; ++i) {
    u(i, 0) = z[i];
    u(i, 1) = std::conj(w[i]);
  }
  u(0, 2) = zc[1] * w[2] - zc[2] * w[1];
  u(1, 2) = zc[2] * w[0] - zc[0] * w[2];
  u(2, 2) = zc[0] * w[1] - zc[1] * w[0];

  if (!is_unitary(u, 1e-8))
    throw std::logic_error("build_unitary: constructed matrix is not unitary");
  return u;
}

/// Applies the three players' moves: (U_A^+ (x) U_B^+ (x) U_C^+) rho (U_A (x) U_B (x) U_C),
/// daggers on the left factor.
inline DensityMatrix apply_strategies(const DensityMatrix& rho, const StrategyTriple& moves) {
  const ComplexMatrix v = kron(kron(dagger(build_unitary(moves.alice)),
                                    dagger(build_unitary(moves.bob))),
                               dagger(build_unitary(moves.charlie)));
  return DensityMatrix::from_matrix(matmul(matmul(v, rho.matrix()), dagger(v)));
}

}  // namespace qkr

#endif  // QKR_STRATEGIES_HPP

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

#ifndef QKR_STATES_HPP
#define QKR_STATES_HPP

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>

#include "qkr/complex_matrix.hpp"

namespace qkr {

/// Hilbert-space dimension of three qutrits.
inline constexpr std::size_t kTriqutritDim = 27;

/// Basis ket |x_A x_B x_C> lives at index 9*x_A + 3*x_B + x_C
/// (Alice most significant, matching the U_A (x) U_B (x) U_C operator order).
inline constexpr std::size_t basis_index(int x_alice, int x_bob, int x_charlie) {
  return static_cast<std::size_t>(9 * x_alice + 3 * x_bob + x_charlie);
}

/// State of three qutrits: 27x27, Hermitian, PSD, unit trace.
class DensityMatrix {
 public:
  static constexpr std::size_t kDim = kTriqutritDim;

  /// Validates all invariants; throws std::invalid_argument on violation.
  static DensityMatrix from_matrix(ComplexMatrix m, double tol = kDefaultTol) {
    if (m.dim() != kDim)
      throw std::invalid_argument("DensityMatrix: dim must be 27");
    if (!m.all_finite())
      throw std::invalid_argument("DensityMatrix: entries must be finite");
    if (std::abs(trace(m) - Complex(1.0)) > tol)
      throw std::invalid_argument("DensityMatrix: trace must be 1");
    if (!is_hermitian_psd(m, tol))
      throw std::invalid_argument("DensityMatrix: must be Hermitian positive semidefinite");
    return DensityMatrix(std::move(m));
  }

  const ComplexMatrix& matrix() const { return m_; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

 private:
  explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {}
  ComplexMatrix m_;
};

/// Angles of the parameterized initial state; theta in [0,pi], phi in [0,2pi].
/// Distinct from the strategy angles of the same name.
struct StateAngles {
  double theta;
  double phi;

  StateAngles(double theta_, double phi_) : theta(theta_), phi(phi_) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi))
      throw std::invalid_argument("StateAngles: theta must lie in [0, pi]");
    if (!(phi >= 0.0 && phi <= 2.0 * std::numbers::pi))
      throw std::invalid_argument("StateAngles: phi must lie in [0, 2pi]");
  }
};

/// Degree of entanglement mixed into the identity background, f in [0,1].
struct MixingFraction {
  double f;

  explicit MixingFraction(double f_) : f(f_) {
    if (!(f >= 0.0 && f <= 1.0))
      throw std::invalid_argument("MixingFraction: f must lie in [0, 1]");
  }
};

/// Pure projector of (|000> + |111> + |222>)/sqrt(3).
inline DensityMatrix ghz3() {
  ComplexMatrix m(kTriqutritDim);
  const std::size_t idx[3] = {basis_index(0, 0, 0), basis_index(1, 1, 1), basis_index(2, 2, 2)};
  for (std::size_t r : idx)
    for (std::size_t c : idx) m(r, c) = 1.0 / 3.0;
  return DensityMatrix::from_matrix(std::move(m));
}

/// f * ghz3() + (1-f)/27 * I.
inline DensityMatrix mixed_initial(MixingFraction f) {
  ComplexMatrix m = ghz3().matrix();
  m *= f.f;
  const double bg = (1.0 - f.f) / 27.0;
  for (std::size_t i = 0; i < kTriqutritDim; ++i) m(i, i) += bg;
  return DensityMatrix::from_matrix(std::move(m));
}

/// Projector of sin(theta)cos(phi)|000> + sin(theta)sin(phi)|111> + cos(theta)|222>.
/// The three amplitudes form a unit vector for every angle pair, so the
/// result is automatically normalized.
inline DensityMatrix parameterized_initial(StateAngles angles) {
  ComplexVector v(kTriqutritDim);
  v[basis_index(0, 0, 0)] = std::sin(angles.theta) * std::cos(angles.phi);
  v[basis_index(1, 1, 1)] = std::sin(angles.theta) * std::sin(angles.phi);
  v[basis_index(2, 2, 2)] = std::cos(angles.theta);
  return DensityMatrix::from_matrix(projector(v));
}

/// Named angle presets for the parameterized state.
enum class StatePreset {
  /// (pi/4, acos(1/sqrt 3)): the angles the source figures quote. Amplitudes
  /// come out as (1/sqrt6, 1/sqrt3, 1/sqrt2) -- close to but not equal to GHZ.
  kAsPrinted,
  /// (acos(1/sqrt 3), pi/4): equal amplitudes; identical to ghz3().
  kMaximal,
};

inline StateAngles preset_angles(StatePreset preset) {
  const double acos13 = std::acos(1.0 / std::sqrt(3.0));
  switch (preset) {
    case StatePreset::kAsPrinted:
      return StateAngles(std::numbers::pi / 4.0, acos13);
    case StatePreset::kMaximal:
      return StateAngles(acos13, std::numbers::pi / 4.0);
  }
  throw std::logic_error("preset_angles: unknown preset");
}

}  // namespace qkr

#endif  // QKR_STATES_HPP

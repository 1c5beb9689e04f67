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

// Shared helpers for the test suite: seeded random draws and tolerances.

#ifndef QKR_TESTS_TEST_SUPPORT_HPP
#define QKR_TESTS_TEST_SUPPORT_HPP

#include <numbers>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "qkr/qkr.hpp"

using Catch::Approx;

namespace qkr_test {

inline qkr::StrategyParams random_params(std::mt19937_64& rng) {
  const double pi = std::numbers::pi;
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  return qkr::StrategyParams{
      u01(rng) * pi,       u01(rng) * 2 * pi, u01(rng) * pi / 2, u01(rng) * 2 * pi,
      u01(rng) * 2 * pi,   u01(rng) * 2 * pi, u01(rng) * 2 * pi, u01(rng) * 2 * pi,
  };
}

inline qkr::StrategyTriple random_triple(std::mt19937_64& rng) {
  return {random_params(rng), random_params(rng), random_params(rng)};
}

/// Random density matrix: G^+ G normalized to unit trace, so Hermitian and
/// positive semidefinite by construction.
inline qkr::DensityMatrix random_density(std::mt19937_64& rng, int dim = qkr::kTriqutritDim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  qkr::ComplexMatrix g(dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) g(r, c) = qkr::Complex(gauss(rng), gauss(rng));
  qkr::ComplexMatrix h = qkr::matmul(qkr::dagger(g), g);
  const qkr::Complex tr = qkr::trace(h);
  return qkr::DensityMatrix::from_matrix((1.0 / tr.real()) * h);
}

}  // namespace qkr_test

#endif  // QKR_TESTS_TEST_SUPPORT_HPP

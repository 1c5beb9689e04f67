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

// Umbrella header for the three-player qutrit restaurant-game simulator.

#ifndef QKR_QKR_HPP
#define QKR_QKR_HPP

#include "qkr/angle_expr.hpp"
#include "qkr/channels.hpp"
#include "qkr/complex_matrix.hpp"
#include "qkr/engine.hpp"
#include "qkr/output.hpp"
#include "qkr/payoff.hpp"
#include "qkr/states.hpp"
#include "qkr/strategies.hpp"

#endif  // QKR_QKR_HPP

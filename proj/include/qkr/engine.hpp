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

#ifndef QKR_ENGINE_HPP
#define QKR_ENGINE_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "qkr/channels.hpp"
#include "qkr/complex_matrix.hpp"
#include "qkr/payoff.hpp"
#include "qkr/states.hpp"
#include "qkr/strategies.hpp"

namespace qkr {

/// Which of the three printed initial-state families to start from.
struct InitialState {
  enum class Kind { kGhz, kMixed, kAngles, kPreset };

  Kind kind = Kind::kGhz;
  double f = 1.0;
  StateAngles state_angles{0.0, 0.0};
  StatePreset state_preset = StatePreset::kMaximal;

  static InitialState ghz() { return {}; }
  static InitialState mixed(double f) {
    InitialState s;
    s.kind = Kind::kMixed;
    s.f = f;
    return s;
  }
  static InitialState angles(StateAngles a) {
    InitialState s;
    s.kind = Kind::kAngles;
    s.state_angles = a;
    return s;
  }
  static InitialState preset(StatePreset p) {
    InitialState s;
    s.kind = Kind::kPreset;
    s.state_preset = p;
    return s;
  }

  DensityMatrix make() const {
    switch (kind) {
      case Kind::kGhz: return ghz3();
      case Kind::kMixed: return mixed_initial(MixingFraction(f));
      case Kind::kAngles: return parameterized_initial(state_angles);
      case Kind::kPreset: return parameterized_initial(preset_angles(state_preset));
    }
    throw std::logic_error("InitialState: bad kind");
  }

  std::string describe() const {
    switch (kind) {
      case Kind::kGhz: return "ghz";
      case Kind::kMixed: return "mixed(f=" + std::to_string(f) + ")";
      case Kind::kAngles:
        return "angles(theta=" + std::to_string(state_angles.theta) +
               ",phi=" + std::to_string(state_angles.phi) + ")";
      case Kind::kPreset:
        return state_preset == StatePreset::kMaximal ? "preset(maximal)" : "preset(as-printed)";
    }
    return "?";
  }
};

enum class NoiseStage { kPreStrategy, kPostStrategy };

inline std::string noise_stage_name(NoiseStage s) {
  return s == NoiseStage::kPreStrategy ? "pre" : "post";
}

/// One full game: initial state, noise placement, three moves, channel at p.
struct GameConfig {
  InitialState initial = InitialState::ghz();
  StrategyTriple moves{u_opt(), u_opt(), u_opt()};
  ChannelKind channel = ChannelKind::phase_damping();
  double p = 0.0;
  NoiseStage noise_stage = NoiseStage::kPreStrategy;
};

/// Runs the pipeline: initial state, (noise if pre), moves, (noise if post),
/// then each player's expected payoff. Every stage output passes the
/// DensityMatrix invariants by construction.
inline PayoffTriple play(const GameConfig& cfg) {
  DensityMatrix rho = cfg.initial.make();
  const QutritChannel ch = QutritChannel::make(cfg.channel, cfg.p);
  if (cfg.noise_stage == NoiseStage::kPreStrategy) rho = apply_channel(rho, ch);
  rho = apply_strategies(rho, cfg.moves);
  if (cfg.noise_stage == NoiseStage::kPostStrategy) rho = apply_channel(rho, ch);
  return PayoffTriple{
      expected_payoff(rho, payoff_operator(Player::kAlice)),
      expected_payoff(rho, payoff_operator(Player::kBob)),
      expected_payoff(rho, payoff_operator(Player::kCharlie)),
  };
}

/// Inclusive endpoints; n = 1 degenerates to {lo}.
inline std::vector<double> uniform_grid(double lo, double hi, int n) {
  if (n < 1) throw std::invalid_argument("uniform_grid: need at least one point");
  std::vector<double> g(n);
  if (n == 1) {
    g[0] = lo;
    return g;
  }
  for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
  return g;
}

/// Sweep data behind the decoherence and state-angle figures. Exactly one of
/// the two axis layouts is populated: p_grid alone, or theta_grid x phi_grid
/// with row-major payoffs (theta outer, phi inner).
struct SweepResult {
  std::vector<double> p_grid;
  std::vector<double> theta_grid;
  std::vector<double> phi_grid;
  std::vector<PayoffTriple> payoffs;
  GameConfig base;

  void validate() const {
    std::size_t expect = p_grid.empty() ? theta_grid.size() * phi_grid.size() : p_grid.size();
    if (payoffs.size() != expect)
      throw std::logic_error("SweepResult: payoff count does not match the grid");
    for (const auto& t : payoffs)
      for (double v : {t.alice, t.bob, t.charlie})
        if (!(v >= -1e-10 && v <= 1.0 + 1e-10))
          throw std::logic_error("SweepResult: payoff outside [0, 1]");
  }
};

/// One play() per grid point, ascending p order.
inline SweepResult sweep_decoherence(const InitialState& initial, const StrategyTriple& moves,
                                     ChannelKind channel, const std::vector<double>& p_grid,
                                     NoiseStage stage = NoiseStage::kPreStrategy) {
  SweepResult r;
  r.base = GameConfig{initial, moves, channel, 0.0, stage};
  r.p_grid = p_grid;
  r.payoffs.reserve(p_grid.size());
  for (double p : p_grid) {
    GameConfig cfg = r.base;
    cfg.p = p;
    r.payoffs.push_back(play(cfg));
  }
  r.validate();
  return r;
}

/// One play() per (theta, phi) point of the parameterized initial state,
/// row-major with theta as the outer axis.
inline SweepResult sweep_state_angles(const std::vector<double>& theta_grid,
                                      const std::vector<double>& phi_grid,
                                      const StrategyTriple& moves, ChannelKind channel, double p,
                                      NoiseStage stage = NoiseStage::kPreStrategy) {
  SweepResult r;
  r.base = GameConfig{InitialState::ghz(), moves, channel, p, stage};
  r.theta_grid = theta_grid;
  r.phi_grid = phi_grid;
  r.payoffs.reserve(theta_grid.size() * phi_grid.size());
  for (double th : theta_grid)
    for (double ph : phi_grid) {
      GameConfig cfg = r.base;
      cfg.initial = InitialState::angles(StateAngles{th, ph});
      r.payoffs.push_back(play(cfg));
    }
  r.validate();
  return r;
}

/// Reorders the three qutrit factors of a 27x27 matrix. perm[k] names the
/// original party (0 Alice, 1 Bob, 2 Charlie) that lands in slot k.
inline ComplexMatrix permute_parties(const ComplexMatrix& m, const std::array<int, 3>& perm) {
  if (m.dim() != kTriqutritDim)
    throw std::invalid_argument("permute_parties: need a 27x27 matrix");
  auto remap = [&perm](int old_index) {
    const int x[3] = {old_index / 9, (old_index / 3) % 3, old_index % 3};
    return 9 * x[perm[0]] + 3 * x[perm[1]] + x[perm[2]];
  };
  ComplexMatrix out(kTriqutritDim);
  for (int r = 0; r < kTriqutritDim; ++r)
    for (int c = 0; c < kTriqutritDim; ++c) out(remap(r), remap(c)) = m(r, c);
  return out;
}

/// The deviating player's payoff as a function of their own move, opponents
/// and everything else frozen from the config. Algebraically identical to
/// play() but precomputed down to a 3x3-block bilinear form, so one call
/// costs a 3x3 unitary build plus 81 fused multiplies. This is what makes
/// the best-response search affordable.
class DeviationObjective {
 public:
  DeviationObjective(const GameConfig& cfg, Player deviator) {
    // Work in a permuted frame with the deviator leftmost. The channel acts
    // per-qutrit identically and the lifted Kraus set is closed under party
    // permutation, so only the state, payoff mask, and opponent order move.
    std::array<int, 3> perm{0, 1, 2};
    StrategyParams opp1 = cfg.moves.bob, opp2 = cfg.moves.charlie;
    if (deviator == Player::kBob) {
      perm = {1, 0, 2};
      opp1 = cfg.moves.alice;
      opp2 = cfg.moves.charlie;
    } else if (deviator == Player::kCharlie) {
      perm = {2, 0, 1};
      opp1 = cfg.moves.alice;
      opp2 = cfg.moves.bob;
    }

    const QutritChannel ch = QutritChannel::make(cfg.channel, cfg.p);
    DensityMatrix rho0 = cfg.initial.make();
    ComplexMatrix sigma = cfg.noise_stage == NoiseStage::kPreStrategy
                              ? apply_channel(rho0, ch).matrix()
                              : rho0.matrix();
    sigma = permute_parties(sigma, perm);

    // Fold the two opponents in: rho~ = (I (x) K) sigma (I (x) K^+) with
    // K = U_opp1^+ (x) U_opp2^+ matching the dagger-left application.
    const ComplexMatrix k = kron(dagger(build_unitary(opp1)), dagger(build_unitary(opp2)));
    const ComplexMatrix ik = kron(ComplexMatrix::identity(3), k);
    const ComplexMatrix rt = matmul(matmul(ik, sigma), dagger(ik));

    // In the permuted frame the deviator's payoff mask is Alice's. For
    // post-strategy noise the channel moves onto the observable instead:
    // tr(P N(X)) = tr(N^+(P) X).
    ComplexMatrix w = payoff_operator(Player::kAlice).matrix;
    if (cfg.noise_stage == NoiseStage::kPostStrategy) {
      ComplexMatrix acc(kTriqutritDim);
      for (const auto& e : ch.lifted_kraus) acc = acc + matmul(dagger(e), matmul(w, e));
      w = acc;
    }

    // Payoff of move G is sum over d,e,d',e' of
    //   conj(G(d',e)) G(e',d) tr(W_de rho~_d'e')
    // with 9x9 blocks indexed by the deviator's trit, so cache the traces.
    for (int d = 0; d < 3; ++d)
      for (int e = 0; e < 3; ++e)
        for (int dp = 0; dp < 3; ++dp)
          for (int ep = 0; ep < 3; ++ep) {
            Complex s = 0.0;
            for (int r = 0; r < 9; ++r)
              for (int c = 0; c < 9; ++c)
                s += w(9 * d + r, 9 * e + c) * rt(9 * dp + c, 9 * ep + r);
            t_[d][e][dp][ep] = s;
          }
  }

  double operator()(const StrategyParams& s) const { return value(build_unitary(s)); }

  double value(const ComplexMatrix& g) const {
    Complex acc = 0.0;
    for (int d = 0; d < 3; ++d)
      for (int e = 0; e < 3; ++e)
        for (int dp = 0; dp < 3; ++dp)
          for (int ep = 0; ep < 3; ++ep)
            acc += std::conj(g(dp, e)) * g(ep, d) * t_[d][e][dp][ep];
    return acc.real();
  }

 private:
  Complex t_[3][3][3][3];
};

struct BestResponseOptions {
  std::int64_t budget = 50000;  // refinement evaluations
  int seeds_per_angle = 5;      // lattice resolution per angle
  int refine_seeds = 8;         // how many lattice leaders get refined
};

struct BestResponseReport {
  Player player = Player::kAlice;
  double baseline = 0.0;
  double best_payoff = 0.0;
  StrategyParams best_params{};
  double improvement = 0.0;  // best_payoff - baseline, never below -1e-12
  std::int64_t lattice_evaluations = 0;
  std::int64_t refine_evaluations = 0;
};

namespace detail {

struct AngleBox {
  std::array<double, 8> lo;
  std::array<double, 8> hi;
};

inline AngleBox strategy_box() {
  const double pi = std::numbers::pi;
  AngleBox b;
  b.lo.fill(0.0);
  b.hi = {pi, 2 * pi, pi / 2, 2 * pi, 2 * pi, 2 * pi, 2 * pi, 2 * pi};
  return b;
}

inline std::array<double, 8> to_array(const StrategyParams& s) {
  return {s.theta, s.phi, s.chi, s.alpha1, s.alpha2, s.alpha3, s.beta1, s.beta2};
}

inline StrategyParams to_params(const std::array<double, 8>& a) {
  return StrategyParams{a[0], a[1], a[2], a[3], a[4], a[5], a[6], a[7]};
}

}  // namespace detail

/// Maximizes the deviating player's payoff with everyone else frozen.
/// Phase 1 scores a full Cartesian lattice (seeds_per_angle points per
/// angle across its whole range). Phase 2 runs a compass pattern search
/// from the best lattice points plus the baseline move: probe +-step on
/// each coordinate, take the best improving probe, otherwise halve the
/// step; a seed's search stops once every step falls below 1e-4 rad. The
/// running best is monotone and the refinement spends at most
/// options.budget evaluations. The baseline move is always a candidate, so
/// improvement is never negative.
inline BestResponseReport best_response(const GameConfig& cfg, Player deviator,
                                        const BestResponseOptions& options = {}) {
  const DeviationObjective objective(cfg, deviator);
  const detail::AngleBox box = detail::strategy_box();

  const StrategyParams own = deviator == Player::kAlice  ? cfg.moves.alice
                             : deviator == Player::kBob ? cfg.moves.bob
                                                         : cfg.moves.charlie;
  BestResponseReport report;
  report.player = deviator;
  report.baseline = objective(own);

  using Candidate = std::pair<double, std::array<double, 8>>;
  std::vector<Candidate> leaders;

  // Phase 1: full lattice. 5 points per angle is 5^8 = 390625 evaluations
  // of the reduced objective, well under a second.
  const int n = std::max(2, options.seeds_per_angle);
  std::array<int, 8> idx{};
  std::array<double, 8> x{};
  bool done = false;
  while (!done) {
    for (int i = 0; i < 8; ++i)
      x[i] = box.lo[i] + (box.hi[i] - box.lo[i]) * idx[i] / (n - 1);
    const double v = objective(detail::to_params(x));
    ++report.lattice_evaluations;
    leaders.emplace_back(v, x);
    if (leaders.size() > static_cast<std::size_t>(4 * options.refine_seeds)) {
      std::partial_sort(leaders.begin(), leaders.begin() + options.refine_seeds, leaders.end(),
                        [](const Candidate& a, const Candidate& b) { return a.first > b.first; });
      leaders.resize(options.refine_seeds);
    }
    done = true;
    for (int i = 7; i >= 0; --i) {
      if (++idx[i] < n) {
        done = false;
        break;
      }
      idx[i] = 0;
    }
  }
  std::sort(leaders.begin(), leaders.end(),
            [](const Candidate& a, const Candidate& b) { return a.first > b.first; });
  if (leaders.size() > static_cast<std::size_t>(options.refine_seeds))
    leaders.resize(options.refine_seeds);
  leaders.emplace_back(report.baseline, detail::to_array(own));

  double best_v = report.baseline;
  std::array<double, 8> best_x = detail::to_array(own);
  for (const auto& [v, seed] : leaders)
    if (v > best_v) {
      best_v = v;
      best_x = seed;
    }

  // Phase 2: compass search per seed under the shared evaluation budget.
  const std::int64_t per_seed = std::max<std::int64_t>(1, options.budget / static_cast<std::int64_t>(leaders.size()));
  std::int64_t remaining = options.budget;
  for (const auto& [seed_v, seed_x] : leaders) {
    if (remaining <= 0) break;
    std::int64_t allowance = std::min(per_seed, remaining);
    std::array<double, 8> cur = seed_x;
    double cur_v = seed_v;
    std::array<double, 8> step;
    for (int i = 0; i < 8; ++i) step[i] = (box.hi[i] - box.lo[i]) / (2.0 * (n - 1));
    while (allowance > 0) {
      double max_step = 0.0;
      for (double s : step) max_step = std::max(max_step, s);
      if (max_step < 1e-4) break;
      double probe_best = cur_v;
      std::array<double, 8> probe_x = cur;
      for (int i = 0; i < 8 && allowance > 0; ++i) {
        for (double sign : {+1.0, -1.0}) {
          if (allowance <= 0) break;
          std::array<double, 8> y = cur;
          y[i] = std::clamp(y[i] + sign * step[i], box.lo[i], box.hi[i]);
          if (y[i] == cur[i]) continue;
          const double v = objective(detail::to_params(y));
          --allowance;
          --remaining;
          ++report.refine_evaluations;
          if (v > probe_best) {
            probe_best = v;
            probe_x = y;
          }
        }
      }
      if (probe_best > cur_v) {
        cur_v = probe_best;
        cur = probe_x;
      } else {
        for (double& s : step) s /= 2.0;
      }
    }
    if (cur_v > best_v) {
      best_v = cur_v;
      best_x = cur;
    }
  }

  report.best_payoff = best_v;
  report.best_params = detail::to_params(best_x);
  report.improvement = best_v - report.baseline;
  return report;
}

}  // namespace qkr

#endif  // QKR_ENGINE_HPP

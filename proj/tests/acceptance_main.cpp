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

// Acceptance gate: nine numbered criteria, one [PASS]/[FAIL] line each with
// the measured quantity, the pinned tolerance, and the elapsed time.
// The process exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "qkr/qkr.hpp"

namespace {

using namespace qkr;
using Clock = std::chrono::steady_clock;

constexpr double kPi = std::numbers::pi;

int g_failures = 0;

struct Timer {
  Clock::time_point start = Clock::now();
  double seconds() const {
    return std::chrono::duration<double>(Clock::now() - start).count();
  }
};

void report(int id, bool pass, double seconds, double limit_seconds,
            const std::string& detail, const std::vector<std::string>& notes = {}) {
  const bool in_time = seconds <= limit_seconds;
  const bool ok = pass && in_time;
  if (!ok) ++g_failures;
  std::printf("[%s] criterion %d (%.2f s, limit %g s): %s%s\n", ok ? "PASS" : "FAIL", id,
              seconds, limit_seconds, detail.c_str(),
              in_time ? "" : " [time limit exceeded]");
  for (const std::string& n : notes) std::printf("        %s\n", n.c_str());
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

StrategyTriple opt_triple() { return {u_opt(), u_opt(), u_opt()}; }

const std::vector<ChannelKind>& default_kinds() {
  static const std::vector<ChannelKind> kinds = {
      ChannelKind::amplitude_damping(), ChannelKind::phase_damping(),
      ChannelKind::depolarizing(),      ChannelKind::phase_flip(),
      ChannelKind::trit_phase_flip(),
  };
  return kinds;
}

StrategyParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  return StrategyParams{u01(rng) * kPi,     u01(rng) * 2 * kPi, u01(rng) * kPi / 2,
                        u01(rng) * 2 * kPi, u01(rng) * 2 * kPi, u01(rng) * 2 * kPi,
                        u01(rng) * 2 * kPi, u01(rng) * 2 * kPi};
}

// Criterion 1: the optimal symmetric profile on the maximally entangled
// state pays everyone 2/3 under every channel at p = 0, within 1e-9.
void criterion_1() {
  Timer t;
  double worst = 0.0;
  for (ChannelKind kind : default_kinds()) {
    GameConfig cfg;
    cfg.moves = opt_triple();
    cfg.channel = kind;
    cfg.p = 0.0;
    const PayoffTriple v = play(cfg);
    for (double x : {v.alice, v.bob, v.charlie})
      worst = std::max(worst, std::abs(x - 2.0 / 3.0));
  }
  report(1, worst <= 1e-9, t.seconds(), 1.0,
         "noiseless optimum: max |payoff - 2/3| = " + fmt(worst) + " over 5 channels (tol 1e-9)");
}

// Criterion 2: the uniform mixture pays 4/9 for all players under 100
// random strategy profiles at p = 0, within 1e-10.
void criterion_2() {
  Timer t;
  std::mt19937_64 rng(20260825);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    GameConfig cfg;
    cfg.initial = InitialState::mixed(0.0);
    cfg.moves = {random_params(rng), random_params(rng), random_params(rng)};
    cfg.channel = ChannelKind::phase_damping();
    cfg.p = 0.0;
    const PayoffTriple v = play(cfg);
    for (double x : {v.alice, v.bob, v.charlie}) worst = std::max(worst, std::abs(x - 4.0 / 9.0));
  }
  report(2, worst <= 1e-10, t.seconds(), 5.0,
         "uniform state: max |payoff - 4/9| = " + fmt(worst) + " over 100 random profiles (tol 1e-10)");
}

// Criterion 3: Kraus completeness at 1e-10 for the five default channels,
// single and lifted, p in {0, 0.1, ..., 1}; the as-printed trit phase flip
// is rejected with its (1 + p/3) I defect reported.
void criterion_3() {
  Timer t;
  double worst = 0.0;
  bool ok = true;
  for (ChannelKind kind : default_kinds()) {
    for (int i = 0; i <= 10; ++i) {
      const double p = i / 10.0;
      const auto single = single_qutrit_kraus(kind, p);
      const auto lifted = lift_to_three(single);
      const double d1 =
          max_abs_diff(completeness_sum(single), ComplexMatrix::identity(3));
      const double d3 =
          max_abs_diff(completeness_sum(lifted), ComplexMatrix::identity(kTriqutritDim));
      worst = std::max({worst, d1, d3});
    }
  }
  ok = ok && worst <= 1e-10;

  double defect_err = 0.0;
  bool rejected = true;
  const ChannelKind bad = ChannelKind::trit_phase_flip(TritPhaseFlipVariant::kAsPrinted);
  for (int i = 1; i <= 10; ++i) {
    const double p = i / 10.0;
    const auto raw = single_qutrit_kraus_unchecked(bad, p);
    defect_err = std::max(
        defect_err, max_abs_diff(completeness_sum(raw),
                                 Complex(1.0 + p / 3.0) * ComplexMatrix::identity(3)));
    try {
      single_qutrit_kraus(bad, p);
      rejected = false;
    } catch (const ChannelCompletenessError&) {
    }
  }
  ok = ok && rejected && defect_err <= 1e-12;
  report(3, ok, t.seconds(), 5.0,
         "completeness: max deviation " + fmt(worst) +
             " over 5 channels x 11 p (tol 1e-10); as-printed trit flip " +
             (rejected ? "rejected" : "NOT rejected") + ", sum matches (1+p/3) I to " +
             fmt(defect_err));
}

// Criterion 4: full phase damping leaves the optimal-profile payoff equal
// to the noiseless payoff across a 20x20 initial-angle grid, within 1e-9.
void criterion_4() {
  Timer t;
  const auto thetas = uniform_grid(0.0, kPi, 20);
  const auto phis = uniform_grid(0.0, 2.0 * kPi, 20);
  const SweepResult clean =
      sweep_state_angles(thetas, phis, opt_triple(), ChannelKind::phase_damping(), 0.0);
  const SweepResult noisy =
      sweep_state_angles(thetas, phis, opt_triple(), ChannelKind::phase_damping(), 1.0);
  double worst = 0.0;
  for (std::size_t i = 0; i < clean.payoffs.size(); ++i) {
    worst = std::max(worst, std::abs(noisy.payoffs[i].alice - clean.payoffs[i].alice));
    worst = std::max(worst, std::abs(noisy.payoffs[i].bob - clean.payoffs[i].bob));
    worst = std::max(worst, std::abs(noisy.payoffs[i].charlie - clean.payoffs[i].charlie));
  }
  report(4, worst <= 1e-9, t.seconds(), 30.0,
         "full dephasing vs none on a 20x20 angle grid: max |diff| = " + fmt(worst) +
             " (tol 1e-9)");
}

// Criterion 5: phase-damping payoffs are symmetric about p = 1/2 for the
// optimal profile, |payoff(p) - payoff(1-p)| <= 1e-6, p in {0, 0.05, ..., 0.5}.
void criterion_5() {
  Timer t;
  double worst = 0.0;
  for (int i = 0; i <= 10; ++i) {
    const double p = 0.05 * i;
    GameConfig a, b;
    a.moves = b.moves = opt_triple();
    a.channel = b.channel = ChannelKind::phase_damping();
    a.p = p;
    b.p = 1.0 - p;
    const PayoffTriple va = play(a), vb = play(b);
    worst = std::max({worst, std::abs(va.alice - vb.alice), std::abs(va.bob - vb.bob),
                      std::abs(va.charlie - vb.charlie)});
  }
  report(5, worst <= 1e-6, t.seconds(), 5.0,
         "dephasing symmetry p vs 1-p: max |diff| = " + fmt(worst) + " (tol 1e-6)");
}

// Criterion 6: full amplitude damping sends every initial state to the
// ground ket (1e-10) and flattens the 20x20 angle-grid payoffs (1e-9).
void criterion_6() {
  Timer t;
  const QutritChannel ch = QutritChannel::make(ChannelKind::amplitude_damping(), 1.0);
  ComplexMatrix ground(kTriqutritDim);
  ground(0, 0) = 1.0;
  double collapse = max_abs_diff(apply_channel(ghz3(), ch).matrix(), ground);
  collapse = std::max(collapse,
                      max_abs_diff(apply_channel(mixed_initial(MixingFraction(0.3)), ch).matrix(),
                                   ground));
  collapse = std::max(
      collapse,
      max_abs_diff(apply_channel(parameterized_initial(StateAngles(1.1, 2.2)), ch).matrix(),
                   ground));

  const SweepResult grid =
      sweep_state_angles(uniform_grid(0.0, kPi, 20), uniform_grid(0.0, 2.0 * kPi, 20),
                         opt_triple(), ChannelKind::amplitude_damping(), 1.0);
  double flat = 0.0;
  for (const PayoffTriple& v : grid.payoffs) {
    flat = std::max(flat, std::abs(v.alice - grid.payoffs[0].alice));
    flat = std::max(flat, std::abs(v.bob - grid.payoffs[0].bob));
    flat = std::max(flat, std::abs(v.charlie - grid.payoffs[0].charlie));
  }
  report(6, collapse <= 1e-10 && flat <= 1e-9, t.seconds(), 10.0,
         "full damping: collapse to ground ket within " + fmt(collapse) +
             " (tol 1e-10); angle-grid payoff spread " + fmt(flat) + " (tol 1e-9)");
}

// Criterion 7: no player can improve by more than 1e-3 by deviating alone
// from the optimal profile, for the five channels at p in {0, 0.3, 0.7},
// search budget 50000. This is run with the engine's default pre-strategy
// noise placement and reported exactly as measured.
void criterion_7() {
  Timer t;
  double worst = 0.0;
  std::vector<std::string> notes;
  std::vector<GameConfig> unstable;
  for (ChannelKind kind : default_kinds()) {
    for (double p : {0.0, 0.3, 0.7}) {
      GameConfig cfg;
      cfg.moves = opt_triple();
      cfg.channel = kind;
      cfg.p = p;
      for (Player who : kAllPlayers) {
        const BestResponseReport r = best_response(cfg, who);
        worst = std::max(worst, r.improvement);
        if (r.improvement > 1e-3) {
          const char* names[] = {"alice", "bob", "charlie"};
          notes.push_back("unstable: channel " + kind.code() + " p=" + fmt(p) + " player " +
                          names[static_cast<int>(who)] + ": improvement " + fmt(r.improvement) +
                          " (baseline " + fmt(r.baseline) + ", best " + fmt(r.best_payoff) + ")");
          if (who == Player::kAlice) unstable.push_back(cfg);
        }
      }
    }
  }
  // Diagnostic for the failing cells: the same search with the channel
  // placed after the moves. Dephasing commutes with the payoff basis there,
  // so the profile stays exactly stable; before the moves it genuinely
  // opens a profitable deviation at intermediate p.
  for (const GameConfig& cfg : unstable) {
    GameConfig post = cfg;
    post.noise_stage = NoiseStage::kPostStrategy;
    const BestResponseReport r = best_response(post, Player::kAlice);
    notes.push_back("note: channel " + cfg.channel.code() + " p=" + fmt(cfg.p) +
                    " with post-strategy placement: improvement " + fmt(r.improvement));
  }
  report(7, worst <= 1e-3, t.seconds(), 600.0,
         "unilateral deviations, 5 channels x {0, 0.3, 0.7} x 3 players, budget 50000: "
         "max improvement " + fmt(worst) + " (tol 1e-3)",
         notes);
}

// Criterion 8: payoffs are affine in the mixing fraction: for 20 random
// configurations and f in {0.2, 0.5, 1}, play(mixed(f)) matches
// f play(entangled) + (1-f) play(uniform) within 1e-10.
void criterion_8() {
  Timer t;
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const ChannelKind kind = default_kinds()[static_cast<std::size_t>(i) % 5];
    const double p = u01(rng);
    const StrategyTriple moves = {random_params(rng), random_params(rng), random_params(rng)};
    GameConfig ghz_cfg, uni_cfg;
    ghz_cfg.initial = InitialState::mixed(1.0);
    uni_cfg.initial = InitialState::mixed(0.0);
    for (GameConfig* c : {&ghz_cfg, &uni_cfg}) {
      c->moves = moves;
      c->channel = kind;
      c->p = p;
    }
    const PayoffTriple v1 = play(ghz_cfg), v0 = play(uni_cfg);
    for (double f : {0.2, 0.5, 1.0}) {
      GameConfig cfg = ghz_cfg;
      cfg.initial = InitialState::mixed(f);
      const PayoffTriple vf = play(cfg);
      worst = std::max({worst, std::abs(vf.alice - (f * v1.alice + (1 - f) * v0.alice)),
                        std::abs(vf.bob - (f * v1.bob + (1 - f) * v0.bob)),
                        std::abs(vf.charlie - (f * v1.charlie + (1 - f) * v0.charlie))});
    }
  }
  report(8, worst <= 1e-10, t.seconds(), 30.0,
         "mixing-fraction linearity over 20 random configs: max |diff| = " + fmt(worst) +
             " (tol 1e-10)");
}

// Criterion 9: structural properties. 1000 random moves stay unitary at
// 1e-9; channels preserve trace/Hermiticity/positivity; every family but
// amplitude damping fixes the uniform state at 1e-10; payoff operators have
// trace 12; a shared random move keeps the three payoffs equal at 1e-10.
void criterion_9() {
  Timer t;
  std::mt19937_64 rng(99);
  bool ok = true;
  std::vector<std::string> notes;

  double unit_dev = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const ComplexMatrix u = build_unitary(random_params(rng));
    const ComplexMatrix resid =
        matmul(dagger(u), u) - ComplexMatrix::identity(3);
    unit_dev = std::max(unit_dev, max_abs(resid));
  }
  ok = ok && unit_dev <= 1e-9;
  notes.push_back("unitarity over 1000 draws: max |U^+U - I| = " + fmt(unit_dev) + " (tol 1e-9)");

  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix g(kTriqutritDim);
  for (std::size_t r = 0; r < kTriqutritDim; ++r)
    for (std::size_t c = 0; c < kTriqutritDim; ++c) g(r, c) = Complex(gauss(rng), gauss(rng));
  ComplexMatrix h = matmul(dagger(g), g);
  const DensityMatrix rho = DensityMatrix::from_matrix((1.0 / trace(h).real()) * h);
  double trace_dev = 0.0, herm_dev = 0.0;
  bool psd_ok = true;
  for (ChannelKind kind : default_kinds()) {
    const DensityMatrix out = apply_channel(rho, QutritChannel::make(kind, 0.65));
    trace_dev = std::max(trace_dev, std::abs(trace(out.matrix()).real() - 1.0));
    herm_dev = std::max(herm_dev, max_abs_diff(out.matrix(), dagger(out.matrix())));
    psd_ok = psd_ok && is_hermitian_psd(out.matrix(), 1e-9);
  }
  ok = ok && trace_dev <= 1e-10 && herm_dev <= 1e-10 && psd_ok;
  notes.push_back("channel outputs: max trace deviation " + fmt(trace_dev) +
                  ", max Hermiticity deviation " + fmt(herm_dev) + ", PSD " +
                  (psd_ok ? "yes" : "NO") + " (tol 1e-10)");

  const DensityMatrix uniform = mixed_initial(MixingFraction(0.0));
  double unital_dev = 0.0;
  for (ChannelKind kind : default_kinds()) {
    if (kind.family == ChannelFamily::kAmplitudeDamping) continue;
    unital_dev = std::max(unital_dev,
                          max_abs_diff(apply_channel(uniform, QutritChannel::make(kind, 0.5)).matrix(),
                                       uniform.matrix()));
  }
  ok = ok && unital_dev <= 1e-10;
  notes.push_back("unitality (all but amplitude damping): max deviation " + fmt(unital_dev) +
                  " (tol 1e-10)");

  double trace12_dev = 0.0;
  for (Player who : kAllPlayers) {
    double tr = 0.0;
    for (std::size_t i = 0; i < kTriqutritDim; ++i)
      tr += payoff_operator(who).matrix(i, i).real();
    trace12_dev = std::max(trace12_dev, std::abs(tr - 12.0));
  }
  ok = ok && trace12_dev == 0.0;
  notes.push_back("payoff operator traces: max |trace - 12| = " + fmt(trace12_dev));

  double sym_dev = 0.0;
  for (int i = 0; i < 5; ++i) {
    const StrategyParams shared = random_params(rng);
    GameConfig cfg;
    cfg.moves = {shared, shared, shared};
    cfg.channel = default_kinds()[static_cast<std::size_t>(i)];
    cfg.p = 0.4;
    const PayoffTriple v = play(cfg);
    sym_dev = std::max({sym_dev, std::abs(v.alice - v.bob), std::abs(v.alice - v.charlie)});
  }
  ok = ok && sym_dev <= 1e-10;
  notes.push_back("symmetric-profile payoff equality: max spread " + fmt(sym_dev) +
                  " (tol 1e-10)");

  report(9, ok, t.seconds(), 120.0, "structural property suite", notes);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  if (g_failures == 0) {
    std::printf("all 9 criteria hold\n");
    return 0;
  }
  std::printf("%d of 9 criteria failed\n", g_failures);
  return 1;
}

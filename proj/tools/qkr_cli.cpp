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

// Command-line front end for the three-player qutrit restaurant game.
// Subcommands: simulate, sweep-p, sweep-angles, nash-check,
// validate-channels. Exit codes: 0 success, 2 argument/domain errors,
// 3 channel completeness failure.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qkr/qkr.hpp"

namespace {

using nlohmann::json;

// Every flag value is held as a string (angle flags take expressions) and
// converted after the config-file merge, so a JSON config key and a command
// line flag go down the same path with the flag winning.
struct Options {
  std::string state = "ghz";
  std::string f = "1";
  std::string theta;
  std::string phi;
  std::string preset = "maximal";
  std::string moves = "opt";
  std::map<std::string, std::string> move_angle;  // "alice-theta" -> expr
  std::string channel = "pd";
  std::string pf_variant = "standard";
  std::string tpf_variant = "renormalized";
  std::string p = "0";
  std::string noise_stage = "pre";
  int grid = 101;
  int theta_grid = 50;
  int phi_grid = 50;
  std::string player;
  std::int64_t budget = 50000;
  std::string out;
  std::string format = "csv";
  std::string config_path;
  std::string tol;
};

constexpr const char* kPlayers[] = {"alice", "bob", "charlie"};
constexpr const char* kAngles[] = {"theta", "phi",   "chi",   "alpha1",
                                   "alpha2", "alpha3", "beta1", "beta2"};

// Tracks which CLI option objects feed each config key, across subcommands,
// so the merge can tell "flag given" from "default".
struct Registry {
  std::map<std::string, std::vector<CLI::Option*>> options;
  std::map<std::string, std::function<void(const json&)>> setters;

  void add(const std::string& key, CLI::Option* opt, std::function<void(const json&)> set) {
    options[key].push_back(opt);
    setters[key] = std::move(set);
  }

  bool given(const std::string& key) const {
    auto it = options.find(key);
    if (it == options.end()) return false;
    for (const CLI::Option* o : it->second)
      if (o->count() > 0) return true;
    return false;
  }
};

std::string json_to_string(const json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

// Returns the keys the config actually supplied (flags still win).
std::set<std::string> merge_config(const Options& opts, Registry& reg) {
  std::set<std::string> applied;
  if (opts.config_path.empty()) return applied;
  std::ifstream in(opts.config_path);
  if (!in) throw std::invalid_argument("cannot open config file: " + opts.config_path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument("config file " + opts.config_path + ": " + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config file must hold a JSON object");
  for (const auto& [key, value] : j.items()) {
    auto it = reg.setters.find(key);
    if (it == reg.setters.end()) throw std::invalid_argument("config: unknown key \"" + key + "\"");
    if (!reg.given(key)) {
      it->second(value);
      applied.insert(key);
    }
  }
  return applied;
}

double parse_real(const std::string& text, const std::string& what) {
  try {
    return qkr::parse_angle(text);  // accepts plain reals and expressions
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad value for " + what + ": \"" + text + "\"");
  }
}

qkr::ChannelKind channel_from(const Options& o) {
  const auto pf = [&] {
    if (o.pf_variant == "standard") return qkr::PhaseFlipVariant::kStandard;
    if (o.pf_variant == "as-printed") return qkr::PhaseFlipVariant::kAsPrinted;
    throw std::invalid_argument("--pf-variant must be standard or as-printed");
  };
  const auto tpf = [&] {
    if (o.tpf_variant == "renormalized") return qkr::TritPhaseFlipVariant::kRenormalized;
    if (o.tpf_variant == "as-printed") return qkr::TritPhaseFlipVariant::kAsPrinted;
    throw std::invalid_argument("--tpf-variant must be renormalized or as-printed");
  };
  if (o.channel == "ad") return qkr::ChannelKind::amplitude_damping();
  if (o.channel == "pd") return qkr::ChannelKind::phase_damping();
  if (o.channel == "dep") return qkr::ChannelKind::depolarizing();
  if (o.channel == "pf") return qkr::ChannelKind::phase_flip(pf());
  if (o.channel == "tpf") return qkr::ChannelKind::trit_phase_flip(tpf());
  throw std::invalid_argument("--channel must be one of ad, pd, dep, pf, tpf");
}

qkr::InitialState initial_from(const Options& o) {
  if (o.state == "ghz") return qkr::InitialState::ghz();
  if (o.state == "mixed") return qkr::InitialState::mixed(parse_real(o.f, "--f"));
  if (o.state == "angles") {
    if (o.theta.empty() || o.phi.empty())
      throw std::invalid_argument("--state angles needs --theta and --phi");
    return qkr::InitialState::angles(
        qkr::StateAngles(parse_real(o.theta, "--theta"), parse_real(o.phi, "--phi")));
  }
  if (o.state == "preset") {
    if (o.preset == "maximal") return qkr::InitialState::preset(qkr::StatePreset::kMaximal);
    if (o.preset == "as-printed") return qkr::InitialState::preset(qkr::StatePreset::kAsPrinted);
    throw std::invalid_argument("--preset must be maximal or as-printed");
  }
  throw std::invalid_argument("--state must be one of ghz, mixed, angles, preset");
}

qkr::StrategyTriple moves_from(const Options& o) {
  if (o.moves == "opt") return {qkr::u_opt(), qkr::u_opt(), qkr::u_opt()};
  if (o.moves == "identity")
    return {qkr::identity_params(), qkr::identity_params(), qkr::identity_params()};
  if (o.moves != "custom")
    throw std::invalid_argument("--moves must be one of opt, identity, custom");
  // Custom moves start from the optimal profile; per-player flags override
  // single angles, e.g. --bob-theta pi/3.
  qkr::StrategyTriple triple{qkr::u_opt(), qkr::u_opt(), qkr::u_opt()};
  qkr::StrategyParams* params[] = {&triple.alice, &triple.bob, &triple.charlie};
  for (int pl = 0; pl < 3; ++pl) {
    double* fields[] = {&params[pl]->theta,  &params[pl]->phi,    &params[pl]->chi,
                        &params[pl]->alpha1, &params[pl]->alpha2, &params[pl]->alpha3,
                        &params[pl]->beta1,  &params[pl]->beta2};
    for (int a = 0; a < 8; ++a) {
      const std::string key = std::string(kPlayers[pl]) + "-" + kAngles[a];
      auto it = o.move_angle.find(key);
      if (it != o.move_angle.end() && !it->second.empty())
        *fields[a] = parse_real(it->second, "--" + key);
    }
    params[pl]->validate();
  }
  return triple;
}

qkr::NoiseStage stage_from(const Options& o) {
  if (o.noise_stage == "pre") return qkr::NoiseStage::kPreStrategy;
  if (o.noise_stage == "post") return qkr::NoiseStage::kPostStrategy;
  throw std::invalid_argument("--noise-stage must be pre or post");
}

qkr::GameConfig game_config_from(const Options& o) {
  qkr::GameConfig cfg;
  cfg.initial = initial_from(o);
  cfg.moves = moves_from(o);
  cfg.channel = channel_from(o);
  cfg.p = parse_real(o.p, "--p");
  cfg.noise_stage = stage_from(o);
  return cfg;
}

void write_output(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw std::invalid_argument("cannot open output path: " + o.out);
  f << text;
  if (!f.good()) throw std::invalid_argument("failed writing output path: " + o.out);
}

json payoff_json(const qkr::PayoffTriple& t) {
  return json{{"payoff_alice", t.alice}, {"payoff_bob", t.bob}, {"payoff_charlie", t.charlie}};
}

int run_simulate(const Options& o) {
  const qkr::GameConfig cfg = game_config_from(o);
  const qkr::PayoffTriple t = qkr::play(cfg);
  if (o.format == "json") {
    json j = payoff_json(t);
    j["state"] = cfg.initial.describe();
    j["channel"] = cfg.channel.code();
    j["p"] = cfg.p;
    j["noise_stage"] = qkr::noise_stage_name(cfg.noise_stage);
    write_output(o, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "p,channel,noise_stage,payoff_alice,payoff_bob,payoff_charlie\n"
       << qkr::format_significant(cfg.p) << ',' << cfg.channel.code() << ','
       << qkr::noise_stage_name(cfg.noise_stage) << ',' << qkr::format_significant(t.alice) << ','
       << qkr::format_significant(t.bob) << ',' << qkr::format_significant(t.charlie) << '\n';
    write_output(o, os.str());
  }
  return 0;
}

int run_sweep_p(const Options& o) {
  const qkr::GameConfig cfg = game_config_from(o);
  const qkr::SweepResult r = qkr::sweep_decoherence(cfg.initial, cfg.moves, cfg.channel,
                                                    qkr::uniform_grid(0.0, 1.0, o.grid),
                                                    cfg.noise_stage);
  if (o.format == "json") {
    json rows = json::array();
    for (std::size_t i = 0; i < r.p_grid.size(); ++i) {
      json row = payoff_json(r.payoffs[i]);
      row["p"] = r.p_grid[i];
      row["channel"] = r.base.channel.code();
      row["noise_stage"] = qkr::noise_stage_name(r.base.noise_stage);
      rows.push_back(std::move(row));
    }
    write_output(o, rows.dump(2) + "\n");
  } else {
    write_output(o, qkr::sweep_p_csv(r));
  }
  return 0;
}

int run_sweep_angles(const Options& o) {
  const qkr::GameConfig cfg = game_config_from(o);
  const double pi = std::numbers::pi;
  const qkr::SweepResult r = qkr::sweep_state_angles(
      qkr::uniform_grid(0.0, pi, o.theta_grid), qkr::uniform_grid(0.0, 2 * pi, o.phi_grid),
      cfg.moves, cfg.channel, cfg.p, cfg.noise_stage);
  if (o.format == "json") {
    json rows = json::array();
    std::size_t i = 0;
    for (double th : r.theta_grid)
      for (double ph : r.phi_grid) {
        json row = payoff_json(r.payoffs[i++]);
        row["theta"] = th;
        row["phi"] = ph;
        row["p"] = r.base.p;
        row["channel"] = r.base.channel.code();
        rows.push_back(std::move(row));
      }
    write_output(o, rows.dump(2) + "\n");
  } else {
    write_output(o, qkr::sweep_angles_csv(r));
  }
  return 0;
}

int run_nash_check(const Options& o) {
  const qkr::GameConfig cfg = game_config_from(o);
  const double tol = o.tol.empty() ? 1e-3 : parse_real(o.tol, "--tol");
  std::vector<qkr::Player> players;
  if (o.player.empty() || o.player == "all") {
    players = {qkr::Player::kAlice, qkr::Player::kBob, qkr::Player::kCharlie};
  } else if (o.player == "alice") {
    players = {qkr::Player::kAlice};
  } else if (o.player == "bob") {
    players = {qkr::Player::kBob};
  } else if (o.player == "charlie") {
    players = {qkr::Player::kCharlie};
  } else {
    throw std::invalid_argument("--player must be alice, bob, or charlie");
  }

  qkr::BestResponseOptions bro;
  bro.budget = o.budget;
  json jrows = json::array();
  std::ostringstream csv;
  csv << "player,baseline,best,improvement,stable,theta,phi,chi,alpha1,alpha2,alpha3,beta1,"
         "beta2\n";
  for (qkr::Player pl : players) {
    const qkr::BestResponseReport r = qkr::best_response(cfg, pl, bro);
    const char* name = kPlayers[static_cast<int>(pl)];
    const bool stable = r.improvement <= tol;
    const qkr::StrategyParams& b = r.best_params;
    if (o.format == "json") {
      jrows.push_back(json{{"player", name},
                           {"baseline", r.baseline},
                           {"best", r.best_payoff},
                           {"improvement", r.improvement},
                           {"stable", stable},
                           {"tolerance", tol},
                           {"lattice_evaluations", r.lattice_evaluations},
                           {"refine_evaluations", r.refine_evaluations},
                           {"best_params",
                            {{"theta", b.theta},
                             {"phi", b.phi},
                             {"chi", b.chi},
                             {"alpha1", b.alpha1},
                             {"alpha2", b.alpha2},
                             {"alpha3", b.alpha3},
                             {"beta1", b.beta1},
                             {"beta2", b.beta2}}}});
    } else {
      csv << name << ',' << qkr::format_significant(r.baseline) << ','
          << qkr::format_significant(r.best_payoff) << ','
          << qkr::format_significant(r.improvement) << ',' << (stable ? "yes" : "no");
      for (double v : {b.theta, b.phi, b.chi, b.alpha1, b.alpha2, b.alpha3, b.beta1, b.beta2})
        csv << ',' << qkr::format_significant(v);
      csv << '\n';
    }
  }
  write_output(o, o.format == "json" ? jrows.dump(2) + "\n" : csv.str());
  return 0;
}

int run_validate_channels(const Options& o, bool channel_given, bool p_given) {
  const double tol = o.tol.empty() ? qkr::kDefaultTol : parse_real(o.tol, "--tol");
  std::vector<qkr::ChannelKind> kinds;
  if (channel_given) {
    kinds.push_back(channel_from(o));
  } else {
    kinds = {qkr::ChannelKind::amplitude_damping(), qkr::ChannelKind::phase_damping(),
             qkr::ChannelKind::depolarizing(), qkr::ChannelKind::phase_flip(),
             qkr::ChannelKind::trit_phase_flip()};
  }
  std::vector<double> ps = p_given ? std::vector<double>{parse_real(o.p, "--p")}
                                   : qkr::uniform_grid(0.0, 1.0, 11);

  bool all_ok = true;
  std::ostringstream os;
  for (const qkr::ChannelKind& kind : kinds)
    for (double p : ps) {
      const auto single = qkr::single_qutrit_kraus_unchecked(kind, p);
      const auto lifted = qkr::lift_to_three(single);
      const qkr::ComplexMatrix s1 = qkr::completeness_sum(single);
      const qkr::ComplexMatrix s3 = qkr::completeness_sum(lifted);
      const double d1 = qkr::max_abs_diff(s1, qkr::ComplexMatrix::identity(3));
      const double d3 = qkr::max_abs_diff(s3, qkr::ComplexMatrix::identity(qkr::kTriqutritDim));
      const bool ok = d1 <= tol && d3 <= tol;
      os << "channel " << kind.code() << " p=" << qkr::format_significant(p)
         << ": single deviation " << qkr::format_significant(d1) << ", lifted deviation "
         << qkr::format_significant(d3) << (ok ? " [complete]" : " [INCOMPLETE]") << '\n';
      if (!ok) {
        all_ok = false;
        os << "  sum(E^+ E) diagonal = [";
        for (int i = 0; i < 3; ++i) os << (i ? ", " : "") << qkr::format_significant(s1(i, i).real());
        os << "] (identity expected)\n";
      }
    }
  write_output(o, os.str());
  if (!all_ok) {
    std::cerr << "validate-channels: completeness violated\n";
    return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Three-player qutrit restaurant game simulator"};
  app.require_subcommand(1);

  Options o;
  Registry reg;

  CLI::App* simulate = app.add_subcommand("simulate", "Play one game and print the payoffs");
  CLI::App* sweep_p = app.add_subcommand("sweep-p", "Sweep the decoherence parameter over [0, 1]");
  CLI::App* sweep_angles =
      app.add_subcommand("sweep-angles", "Sweep the initial-state angles at fixed p");
  CLI::App* nash_check =
      app.add_subcommand("nash-check", "Search for profitable unilateral deviations");
  CLI::App* validate =
      app.add_subcommand("validate-channels", "Check Kraus completeness of the noise channels");

  auto add_str = [&reg](CLI::App* cmd, const std::string& key, std::string& var,
                        const std::string& help) {
    CLI::Option* opt = cmd->add_option("--" + key, var, help);
    reg.add(key, opt, [&var](const json& v) { var = json_to_string(v); });
  };
  auto add_int = [&reg](CLI::App* cmd, const std::string& key, auto& var,
                        const std::string& help) {
    CLI::Option* opt = cmd->add_option("--" + key, var, help);
    reg.add(key, opt, [&var](const json& v) {
      var = v.is_string() ? std::stoll(v.get<std::string>())
                          : v.get<std::int64_t>();
    });
  };

  auto add_state_flags = [&](CLI::App* cmd) {
    add_str(cmd, "state", o.state, "Initial state: ghz, mixed, angles, preset");
    add_str(cmd, "f", o.f, "Mixing fraction for --state mixed");
    add_str(cmd, "theta", o.theta, "Initial-state theta (expression) for --state angles");
    add_str(cmd, "phi", o.phi, "Initial-state phi (expression) for --state angles");
    add_str(cmd, "preset", o.preset, "Named state: maximal or as-printed");
  };
  auto add_move_flags = [&](CLI::App* cmd) {
    add_str(cmd, "moves", o.moves, "Strategy profile: opt, identity, custom");
    for (const char* pl : kPlayers)
      for (const char* ang : kAngles) {
        const std::string key = std::string(pl) + "-" + ang;
        std::string& var = o.move_angle[key];
        add_str(cmd, key, var, "Custom move angle (expression) for " + std::string(pl));
      }
  };
  auto add_channel_flags = [&](CLI::App* cmd) {
    add_str(cmd, "channel", o.channel, "Noise channel: ad, pd, dep, pf, tpf");
    add_str(cmd, "pf-variant", o.pf_variant, "Phase flip variant: standard or as-printed");
    add_str(cmd, "tpf-variant", o.tpf_variant,
            "Trit-phase flip variant: renormalized or as-printed");
    add_str(cmd, "p", o.p, "Decoherence parameter in [0, 1]");
    add_str(cmd, "noise-stage", o.noise_stage, "Channel placement: pre or post strategy");
  };
  auto add_output_flags = [&](CLI::App* cmd) {
    add_str(cmd, "out", o.out, "Output path (stdout when omitted)");
    add_str(cmd, "format", o.format, "Output format: csv or json");
    add_str(cmd, "config", o.config_path, "JSON config file, keys mirroring flag names");
  };

  for (CLI::App* cmd : {simulate, sweep_p, sweep_angles, nash_check}) {
    add_state_flags(cmd);
    add_move_flags(cmd);
    add_channel_flags(cmd);
    add_output_flags(cmd);
  }
  add_channel_flags(validate);
  add_output_flags(validate);
  add_str(validate, "tol", o.tol, "Completeness tolerance (default 1e-10)");

  add_int(sweep_p, "grid", o.grid, "Number of p grid points (default 101)");
  add_int(sweep_angles, "theta-grid", o.theta_grid, "Number of theta grid points (default 50)");
  add_int(sweep_angles, "phi-grid", o.phi_grid, "Number of phi grid points (default 50)");
  add_str(nash_check, "player", o.player, "Deviating player: alice, bob, charlie (default all)");
  add_int(nash_check, "budget", o.budget, "Refinement evaluation budget (default 50000)");
  add_str(nash_check, "tol", o.tol, "Stability tolerance on improvement (default 1e-3)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return 2;
  }

  try {
    const std::set<std::string> from_config = merge_config(o, reg);
    const auto specified = [&](const std::string& key) {
      return reg.given(key) || from_config.count(key) > 0;
    };
    if (simulate->parsed()) return run_simulate(o);
    if (sweep_p->parsed()) return run_sweep_p(o);
    if (sweep_angles->parsed()) return run_sweep_angles(o);
    if (nash_check->parsed()) return run_nash_check(o);
    if (validate->parsed())
      return run_validate_channels(o, specified("channel"), specified("p"));
    std::cerr << "no subcommand\n";
    return 2;
  } catch (const qkr::ChannelCompletenessError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
}

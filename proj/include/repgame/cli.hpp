#pragma once

// Command-line front end. run_cli() is the whole program minus main(), so
// tests drive it in-process with string streams.
//
// Exit codes: 0 success, 2 usage or input error, 3 strategy fault.

#include "repgame/classifier.hpp"
#include "repgame/engine.hpp"
#include "repgame/oracle.hpp"
#include "repgame/strategies.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace repgame {

struct UsageError : Error {
  using Error::Error;
};

namespace cli {

inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kFault = 3;

inline std::uint64_t parse_count(const std::string& text, const char* what) {
  std::uint64_t v = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size())
    throw UsageError(std::string(what) + ": expected a non-negative integer, got '" + text + "'");
  return v;
}

inline OracleFamily load_oracle(const std::string& source) {
  if (source == "builtin") return OracleFamily::builtin();
  const std::string prefix = "registry:";
  if (source.rfind(prefix, 0) == 0) return OracleFamily::registry(load_registry(source.substr(prefix.size())));
  throw UsageError("--godel: expected 'builtin' or 'registry:<path>', got '" + source + "'");
}

inline PayoffPoint parse_point(const std::string& x, const std::string& y) {
  auto px = try_parse_rational(x);
  auto py = try_parse_rational(y);
  if (!px || !py) throw UsageError("target: expected two rationals (p or p/q), got '" + x + "' '" + y + "'");
  return {*px, *py};
}

inline PayoffPoint parse_point(const std::string& xy) {
  auto comma = xy.find(',');
  if (comma == std::string::npos) throw UsageError("expected '<x>,<y>', got '" + xy + "'");
  return parse_point(xy.substr(0, comma), xy.substr(comma + 1));
}

inline Schedule schedule_for(const Game& g, const PayoffPoint& target) {
  auto w = decompose_feasible(g, target);
  if (!w) throw UsageError("target (" + to_string(target) + ") is not a feasible payoff profile");
  return schedule_from_weights(*w);
}

struct ActionOverrides {
  std::string c1, d1, c2, d2;
};

/// Everything a strategy specifier may draw on.
struct SpecContext {
  const Game& game;
  OracleFamily oracle;
  FuelPolicy fuel;
  ActionOverrides overrides;

  DistinguishedActions apply(DistinguishedActions d) const {
    auto pick = [&](const std::string& name, Player p, ActionIndex& slot) {
      if (name.empty()) return;
      auto a = game.find_action(p, name);
      if (!a) throw UsageError("unknown " + std::string(player_name(p)) + " action '" + name + "'");
      slot = *a;
    };
    pick(overrides.c1, Player::P1, d.c1);
    pick(overrides.d1, Player::P1, d.d1);
    pick(overrides.c2, Player::P2, d.c2);
    pick(overrides.d2, Player::P2, d.d2);
    return d;
  }

  DistinguishedActions sigma_actions() const { return apply(DistinguishedActions::derive_sigma(game)); }
  DistinguishedActions pair_actions() const { return apply(DistinguishedActions::derive_pair(game)); }
};

inline bool is_pair_spec(const std::string& spec) {
  return spec == "ne-pair" || spec == "spe-pair" || spec.rfind("ne-pair:", 0) == 0 ||
         spec.rfind("spe-pair:", 0) == 0;
}

inline Strategy build_strategy(const SpecContext& ctx, const std::string& spec, Player seat) {
  const Game& g = ctx.game;
  auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  const bool has_arg = colon != std::string::npos;
  auto only = [&](Player p) {
    if (seat != p) throw UsageError("'" + head + "' is a " + player_name(p) + " strategy");
  };
  auto no_arg = [&] {
    if (has_arg) throw UsageError("'" + head + "' takes no argument");
  };

  if (head == "const") {
    auto a = g.find_action(seat, arg);
    if (!a) throw UsageError("unknown " + std::string(player_name(seat)) + " action '" + arg + "'");
    return constant_strategy(seat, *a, spec);
  }
  if (head == "sigma-d2") {
    no_arg();
    only(Player::P2);
    return make_sigma_d2(g, ctx.sigma_actions());
  }
  if (head == "sigma-d-cycle") {
    only(Player::P1);
    return make_sigma_d_cycle(g, ctx.sigma_actions(), parse_count(arg, "sigma-d-cycle"));
  }
  if (head == "sigma-e1") {
    no_arg();
    only(Player::P1);
    return make_sigma_e1(g, ctx.sigma_actions(), ctx.oracle, ctx.fuel);
  }
  if (head == "sigma-e2") {
    no_arg();
    only(Player::P2);
    return make_sigma_e2(g, ctx.sigma_actions(), ctx.oracle);
  }
  if (head == "folk-ne") return make_folk_ne(g, schedule_for(g, parse_point(arg)), seat);
  if (head == "folk-spe") return make_folk_spe(g, schedule_for(g, parse_point(arg)), seat);
  if (head == "ne-pair" || head == "spe-pair") {
    const bool spe = head == "spe-pair";
    PayoffPoint target;
    if (has_arg) {
      target = parse_point(arg);
    } else {
      auto eq = check_equilibrium_condition(g);
      if (!eq.holds) throw UsageError("'" + head + "': the game has no strictly individually rational target for P1");
      target = *eq.witness;
    }
    Schedule s = schedule_for(g, target);
    auto pair = spe ? make_spe_pair(g, make_folk_pair(g, s, true), s, ctx.pair_actions(), ctx.oracle, ctx.fuel)
                    : make_ne_pair(g, make_folk_pair(g, s, false), s, ctx.pair_actions(), ctx.oracle, ctx.fuel);
    return seat == Player::P1 ? pair.first : pair.second;
  }
  if (head == "myopic") {
    if (!has_arg) throw UsageError("'myopic' needs an inner strategy: myopic:<spec>");
    return make_myopic_best_response(g, build_strategy(ctx, arg, other(seat)), seat);
  }
  throw UsageError("unknown strategy specifier '" + spec + "'");
}

inline const char* ir_label(const Rational& v, const Rational& minmax) {
  if (v > minmax) return "strict";
  if (v == minmax) return "weak";
  return "violated";
}

// ---------------------------------------------------------------------------
// Commands.

inline int cmd_classify(const std::string& path, std::ostream& out) {
  out << format_report(classify(load_game(path)));
  return kOk;
}

struct SimulateConfig {
  std::string game_path;
  std::string p1, p2;
  std::string stages;
  std::string burn_in;
  std::string fuel = "1000";
  std::string godel = "builtin";
  std::string trace_path;
  ActionOverrides overrides;
};

inline int cmd_simulate(const SimulateConfig& c, std::ostream& out) {
  const Game g = load_game(c.game_path);
  const std::uint64_t horizon = parse_count(c.stages, "--stages");
  if (horizon < 1) throw UsageError("--stages must be at least 1");
  const std::uint64_t burn_in = c.burn_in.empty() ? horizon / 2 : parse_count(c.burn_in, "--burn-in");
  if (burn_in >= horizon) throw UsageError("--burn-in must be below --stages");
  const std::uint64_t fuel = parse_count(c.fuel, "--fuel");
  if (fuel < 1) throw UsageError("--fuel must be at least 1");

  std::string spec1 = c.p1, spec2 = c.p2;
  if (spec1.empty() && is_pair_spec(spec2)) spec1 = spec2;
  if (spec2.empty() && is_pair_spec(spec1)) spec2 = spec1;
  if (spec1.empty() || spec2.empty()) throw UsageError("both seats need a strategy (--p1 and --p2)");

  SpecContext ctx{g, load_oracle(c.godel), FuelPolicy(fuel), c.overrides};
  const Strategy s1 = build_strategy(ctx, spec1, Player::P1);
  const Strategy s2 = build_strategy(ctx, spec2, Player::P2);
  const PathTrace trace = run(g, s1, s2, horizon);

  if (!c.trace_path.empty()) {
    std::ofstream csv(c.trace_path);
    if (!csv) throw UsageError("cannot write trace file '" + c.trace_path + "'");
    write_trace_csv(csv, g, trace);
  }

  std::uint64_t punish1 = 0, punish2 = 0;
  for (const auto& r : trace.stages()) {
    punish1 += r.punishing1;
    punish2 += r.punishing2;
  }
  const StageRecord& last = trace.at(horizon);
  out << "p1: " << spec1 << '\n' << "p2: " << spec2 << '\n';
  out << "stages: " << horizon << '\n' << "burn_in: " << burn_in << '\n';
  for (Player p : {Player::P1, Player::P2}) {
    const std::string n = p == Player::P1 ? "1" : "2";
    const Rational est = liminf_estimate(trace, p, burn_in);
    out << "final_avg" << n << ": " << to_string(last.average(p)) << " (" << format_decimal(last.average(p)) << ")\n";
    out << "liminf_est" << n << ": " << to_string(est) << " (" << format_decimal(est) << ")\n";
  }
  out << "punishment_stages_p1: " << punish1 << '\n' << "punishment_stages_p2: " << punish2 << '\n';
  return kOk;
}

inline int cmd_synthesize(const std::string& path, const std::vector<std::string>& target, std::ostream& out,
                          std::ostream& err) {
  const Game g = load_game(path);
  if (target.size() != 2) throw UsageError("--target needs exactly two values");
  const PayoffPoint t = parse_point(target[0], target[1]);
  auto w = decompose_feasible(g, t);
  if (!w) throw UsageError("target (" + to_string(t) + ") is not feasible: it lies outside the convex hull of payoffs");
  const Schedule s = schedule_from_weights(*w);
  const char* ir1 = ir_label(t.x, pure_minmax(g, Player::P1).value);
  const char* ir2 = ir_label(t.y, pure_minmax(g, Player::P2).value);
  out << "target: " << to_string(t) << '\n' << "gamma: " << s.period() << '\n';
  for (const auto& e : s.entries())
    out << "entry: " << g.action_name(Player::P1, e.profile.a1) << ' ' << g.action_name(Player::P2, e.profile.a2)
        << ' ' << e.repetitions << '\n';
  out << "ir_p1: " << ir1 << '\n' << "ir_p2: " << ir2 << '\n';
  if (std::string(ir1) == "violated" || std::string(ir2) == "violated")
    err << "warning: target is not individually rational; the schedule is not an equilibrium path\n";
  return kOk;
}

inline int cmd_oracle(const std::string& n_text, const std::string& godel, const std::string& fuel_text,
                      std::ostream& out) {
  const std::uint64_t n = parse_count(n_text, "--n");
  if (n < 1) throw UsageError("--n must be at least 1");
  const std::uint64_t fuel = parse_count(fuel_text, "--fuel");
  if (fuel < 1) throw UsageError("--fuel must be at least 1");
  const OracleFamily oracle = load_oracle(godel);
  const MembershipTable table(oracle, n);
  out << "i A_n B_n detect\n";
  for (std::uint64_t i = 1; i <= n; ++i) {
    auto d = oracle.detect(i, std::max(fuel, n));
    out << i << ' ' << (table.in_A_n(i, n) ? 1 : 0) << ' ' << (table.in_B_n(i, n) ? 1 : 0) << ' '
        << (d ? std::to_string(d->level) + (d->set == OracleSet::A ? "A" : "B") : std::string("-")) << '\n';
  }
  return kOk;
}

/// Runs a command body, mapping exceptions onto the exit-code contract:
/// strategy faults exit 3, every other error exits 2.
inline int guarded(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const StrategyFault& e) {
    err << "error: " << e.what() << '\n';
    return kFault;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace cli

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Repeated games with computable strategies: classify, simulate, synthesize, inspect oracles"};
  app.name("repgame");
  app.require_subcommand(1);

  std::string game_path;
  auto* classify_cmd = app.add_subcommand("classify", "Triviality and equilibrium-condition report");
  classify_cmd->add_option("game", game_path, "Game file")->required();

  cli::SimulateConfig sim;
  auto* sim_cmd = app.add_subcommand("simulate", "Run two strategies and summarize the path of play");
  sim_cmd->add_option("game", sim.game_path, "Game file")->required();
  sim_cmd->add_option("--p1", sim.p1, "P1 strategy specifier");
  sim_cmd->add_option("--p2", sim.p2, "P2 strategy specifier");
  sim_cmd->add_option("--stages", sim.stages, "Horizon")->required();
  sim_cmd->add_option("--burn-in", sim.burn_in, "Stages excluded from the liminf estimate (default: stages/2)");
  sim_cmd->add_option("--fuel", sim.fuel, "Level cap for oracle searches inside strategies");
  sim_cmd->add_option("--godel", sim.godel, "builtin | registry:<path>");
  sim_cmd->add_option("--trace", sim.trace_path, "Write the path of play as CSV");
  sim_cmd->add_option("--c1", sim.overrides.c1, "Override distinguished action c1");
  sim_cmd->add_option("--d1", sim.overrides.d1, "Override distinguished action d1");
  sim_cmd->add_option("--c2", sim.overrides.c2, "Override distinguished action c2");
  sim_cmd->add_option("--d2", sim.overrides.d2, "Override distinguished action d2");

  std::string synth_game;
  std::vector<std::string> target;
  auto* synth_cmd = app.add_subcommand("synthesize", "Periodic schedule realizing a target payoff profile");
  synth_cmd->add_option("game", synth_game, "Game file")->required();
  synth_cmd->add_option("--target", target, "Target payoffs x y (rationals)")->required()->expected(2);

  std::string oracle_n, oracle_godel = "builtin", oracle_fuel = "1000";
  auto* oracle_cmd = app.add_subcommand("oracle", "Table of A_n / B_n memberships and detect levels");
  oracle_cmd->add_option("--n", oracle_n, "Largest index and level")->required();
  oracle_cmd->add_option("--godel", oracle_godel, "builtin | registry:<path>");
  oracle_cmd->add_option("--fuel", oracle_fuel, "Level cap for the detect column");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return cli::kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return cli::kUsage;
  }

  return cli::guarded(
      [&] {
        if (*classify_cmd) return cli::cmd_classify(game_path, out);
        if (*sim_cmd) return cli::cmd_simulate(sim, out);
        if (*synth_cmd) return cli::cmd_synthesize(synth_game, target, out, err);
        if (*oracle_cmd) return cli::cmd_oracle(oracle_n, oracle_godel, oracle_fuel, out);
        return cli::kUsage;
      },
      err);
}

}  // namespace repgame

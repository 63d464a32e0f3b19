#pragma once

// Two-player normal-form games with exact payoffs, and the stage-level
// queries the repeated-game constructions are built from.

#include "repgame/errors.hpp"
#include "repgame/rational.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace repgame {

using ActionIndex = std::size_t;

struct ActionProfile {
  ActionIndex a1 = 0;
  ActionIndex a2 = 0;

  ActionIndex of(Player p) const { return p == Player::P1 ? a1 : a2; }
  friend auto operator<=>(const ActionProfile&, const ActionProfile&) = default;
};

struct PayoffPair {
  Rational u1;
  Rational u2;

  const Rational& of(Player p) const { return p == Player::P1 ? u1 : u2; }
  friend bool operator==(const PayoffPair&, const PayoffPair&) = default;
};

/// Value of a best reply (or of a minmax) together with the lowest-index
/// action attaining it.
struct ValuedAction {
  Rational value;
  ActionIndex action = 0;
};

class Game {
 public:
  /// `payoffs` is row-major: entry (a1, a2) at a1 * |A2| + a2.
  Game(std::vector<std::string> actions1, std::vector<std::string> actions2, std::vector<PayoffPair> payoffs)
      : actions1_(std::move(actions1)), actions2_(std::move(actions2)), payoffs_(std::move(payoffs)) {
    check_names(actions1_, "actions1");
    check_names(actions2_, "actions2");
    if (payoffs_.size() != actions1_.size() * actions2_.size())
      throw std::invalid_argument("payoff matrix must have an entry for every action profile");
  }

  std::size_t num_actions(Player p) const { return actions(p).size(); }
  const std::vector<std::string>& actions(Player p) const { return p == Player::P1 ? actions1_ : actions2_; }
  const std::string& action_name(Player p, ActionIndex a) const { return actions(p).at(a); }

  std::optional<ActionIndex> find_action(Player p, std::string_view name) const {
    const auto& names = actions(p);
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) return std::nullopt;
    return static_cast<ActionIndex>(it - names.begin());
  }

  bool valid(const ActionProfile& a) const { return a.a1 < actions1_.size() && a.a2 < actions2_.size(); }

  const PayoffPair& payoff(const ActionProfile& a) const {
    if (!valid(a))
      throw InvalidProfile("action profile (" + std::to_string(a.a1) + ", " + std::to_string(a.a2) +
                           ") out of range");
    return payoffs_[a.a1 * actions2_.size() + a.a2];
  }
  const Rational& payoff(Player p, const ActionProfile& a) const { return payoff(a).of(p); }

  /// Profiles in the fixed global (row-major) order.
  std::size_t profile_count() const { return payoffs_.size(); }
  ActionProfile profile_at(std::size_t k) const { return {k / actions2_.size(), k % actions2_.size()}; }
  std::size_t index_of(const ActionProfile& a) const { return a.a1 * actions2_.size() + a.a2; }

  std::string describe(const ActionProfile& a) const {
    return "(" + action_name(Player::P1, a.a1) + "," + action_name(Player::P2, a.a2) + ")";
  }

  friend bool operator==(const Game&, const Game&) = default;

 private:
  static void check_names(const std::vector<std::string>& names, const char* what) {
    if (names.empty()) throw std::invalid_argument(std::string(what) + " must be non-empty");
    std::set<std::string> seen;
    for (const auto& n : names) {
      if (n.empty()) throw std::invalid_argument(std::string(what) + ": empty action name");
      if (!seen.insert(n).second) throw std::invalid_argument(std::string(what) + ": duplicate action '" + n + "'");
    }
  }

  std::vector<std::string> actions1_;
  std::vector<std::string> actions2_;
  std::vector<PayoffPair> payoffs_;
};

inline ActionProfile make_profile(Player p, ActionIndex own, ActionIndex opp) {
  return p == Player::P1 ? ActionProfile{own, opp} : ActionProfile{opp, own};
}

inline PayoffPair stage_payoff(const Game& g, const ActionProfile& a) { return g.payoff(a); }

/// M_i(a_{-i}) and the lowest-index action attaining it.
inline ValuedAction best_payoff_vs(const Game& g, Player p, ActionIndex opp_action) {
  if (opp_action >= g.num_actions(other(p)))
    throw InvalidProfile("opponent action " + std::to_string(opp_action) + " out of range");
  ValuedAction best{g.payoff(p, make_profile(p, 0, opp_action)), 0};
  for (ActionIndex a = 1; a < g.num_actions(p); ++a) {
    const Rational& u = g.payoff(p, make_profile(p, a, opp_action));
    if (u > best.value) best = {u, a};
  }
  return best;
}

inline Rational max_payoff(const Game& g, Player p) {
  Rational m = g.payoff(p, g.profile_at(0));
  for (std::size_t k = 1; k < g.profile_count(); ++k) m = std::max(m, g.payoff(p, g.profile_at(k)));
  return m;
}

/// min over opponent actions of M_p(a_{-p}); `action` is the lowest-index
/// minimizing opponent action (the punishment action against p).
inline ValuedAction pure_minmax(const Game& g, Player p) {
  ValuedAction best{best_payoff_vs(g, p, 0).value, 0};
  for (ActionIndex b = 1; b < g.num_actions(other(p)); ++b) {
    Rational v = best_payoff_vs(g, p, b).value;
    if (v < best.value) best = {std::move(v), b};
  }
  return best;
}

inline bool is_trivial_for(const Game& g, Player p) { return max_payoff(g, p) == pure_minmax(g, p).value; }

inline bool pareto_dominates(const Game& g, const ActionProfile& a, const ActionProfile& b, bool strict) {
  const PayoffPair& pa = g.payoff(a);
  const PayoffPair& pb = g.payoff(b);
  if (strict) return pa.u1 > pb.u1 && pa.u2 > pb.u2;
  return pa.u1 >= pb.u1 && pa.u2 >= pb.u2 && (pa.u1 > pb.u1 || pa.u2 > pb.u2);
}

// ---------------------------------------------------------------------------
// Text format
//
//   actions1: C D
//   actions2: C D
//   payoff C C = 3 3
//   ...
//
// '#' starts a comment. Every profile needs exactly one payoff line.

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

}  // namespace detail

inline Game parse_game(std::istream& in) {
  std::optional<std::vector<std::string>> names[2];
  std::map<std::pair<ActionIndex, ActionIndex>, PayoffPair> entries;
  int line_no = 0;
  int last_line = 0;

  auto lookup = [&](int which, const std::string& name, int line) {
    const auto& list = *names[which];
    auto it = std::find(list.begin(), list.end(), name);
    if (it == list.end())
      throw ParseError(line, "unknown action '" + name + "' for player " + std::to_string(which + 1));
    return static_cast<ActionIndex>(it - list.begin());
  };

  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto toks = detail::split_ws(raw);
    if (toks.empty()) continue;
    last_line = line_no;
    const std::string& key = toks[0];
    if (key == "actions1:" || key == "actions2:") {
      int which = key == "actions1:" ? 0 : 1;
      if (names[which]) throw ParseError(line_no, "duplicate '" + key + "' line");
      if (!entries.empty()) throw ParseError(line_no, "action lists must precede payoff lines");
      std::vector<std::string> list(toks.begin() + 1, toks.end());
      if (list.empty()) throw ParseError(line_no, "player " + std::to_string(which + 1) + " has no actions");
      std::set<std::string> seen;
      for (const auto& n : list)
        if (!seen.insert(n).second) throw ParseError(line_no, "duplicate action name '" + n + "'");
      names[which] = std::move(list);
    } else if (key.rfind("actions", 0) == 0) {
      throw ParseError(line_no, "only two-player games are supported ('" + key + "')");
    } else if (key == "payoff") {
      if (!names[0] || !names[1]) throw ParseError(line_no, "payoff line before both action lists");
      if (toks.size() != 6 || toks[3] != "=")
        throw ParseError(line_no, "expected 'payoff <a1> <a2> = <u1> <u2>'");
      ActionIndex a1 = lookup(0, toks[1], line_no);
      ActionIndex a2 = lookup(1, toks[2], line_no);
      auto u1 = try_parse_rational(toks[4]);
      auto u2 = try_parse_rational(toks[5]);
      if (!u1) throw ParseError(line_no, "bad rational '" + toks[4] + "'");
      if (!u2) throw ParseError(line_no, "bad rational '" + toks[5] + "'");
      if (!entries.emplace(std::pair{a1, a2}, PayoffPair{*u1, *u2}).second)
        throw ParseError(line_no, "duplicate payoff for (" + toks[1] + ", " + toks[2] + ")");
    } else {
      throw ParseError(line_no, "unrecognised line starting with '" + key + "'");
    }
  }
  if (!names[0]) throw ParseError(last_line, "missing 'actions1:' line");
  if (!names[1]) throw ParseError(last_line, "missing 'actions2:' line");

  std::vector<PayoffPair> payoffs;
  for (ActionIndex a1 = 0; a1 < names[0]->size(); ++a1) {
    for (ActionIndex a2 = 0; a2 < names[1]->size(); ++a2) {
      auto it = entries.find({a1, a2});
      if (it == entries.end())
        throw ParseError(last_line, "missing payoff for (" + (*names[0])[a1] + ", " + (*names[1])[a2] + ")");
      payoffs.push_back(it->second);
    }
  }
  return Game(std::move(*names[0]), std::move(*names[1]), std::move(payoffs));
}

inline Game parse_game(const std::string& text) {
  std::istringstream in(text);
  return parse_game(in);
}

inline Game load_game(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open game file '" + path + "'");
  return parse_game(in);
}

inline std::string format_game(const Game& g) {
  std::ostringstream out;
  for (Player p : {Player::P1, Player::P2}) {
    out << (p == Player::P1 ? "actions1:" : "actions2:");
    for (const auto& n : g.actions(p)) out << ' ' << n;
    out << '\n';
  }
  for (std::size_t k = 0; k < g.profile_count(); ++k) {
    ActionProfile a = g.profile_at(k);
    const PayoffPair& u = g.payoff(a);
    out << "payoff " << g.action_name(Player::P1, a.a1) << ' ' << g.action_name(Player::P2, a.a2) << " = "
        << to_string(u.u1) << ' ' << to_string(u.u2) << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Standard games.

namespace games {

inline Game from_integers(std::vector<std::string> a1, std::vector<std::string> a2,
                          std::initializer_list<std::pair<long, long>> cells) {
  std::vector<PayoffPair> payoffs;
  for (auto [x, y] : cells) payoffs.push_back({Rational(x), Rational(y)});
  return Game(std::move(a1), std::move(a2), std::move(payoffs));
}

/// Prisoner's dilemma with c > a > d > b.
inline Game prisoners_dilemma(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  return Game({"C", "D"}, {"C", "D"}, {{a, a}, {b, c}, {c, b}, {d, d}});
}

inline Game prisoners_dilemma() { return prisoners_dilemma(3, 0, 5, 1); }

inline Game rock_paper_scissors() {
  return from_integers({"Rock", "Paper", "Scissors"}, {"Rock", "Paper", "Scissors"},
                       {{0, 0}, {-1, 1}, {1, -1}, {1, -1}, {0, 0}, {-1, 1}, {-1, 1}, {1, -1}, {0, 0}});
}

inline Game deadlock() { return from_integers({"C", "D"}, {"C", "D"}, {{1, 1}, {0, 3}, {3, 0}, {2, 2}}); }

inline Game stag_hunt() {
  return from_integers({"Stag", "Hare"}, {"Stag", "Hare"}, {{3, 3}, {0, 2}, {2, 0}, {1, 1}});
}

}  // namespace games

}  // namespace repgame

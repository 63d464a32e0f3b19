#pragma once

// Decision procedures on the stage game: whether P1 faces a strategy with no
// (computable) best response, and whether some Nash equilibrium of the
// repeated game is strictly individually rational for P1. Also realizes
// feasible payoff profiles as periodic schedules.

#include "repgame/game.hpp"
#include "repgame/geometry.hpp"
#include "repgame/schedule.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace repgame {

inline std::vector<PayoffPoint> payoff_points(const Game& g) {
  std::vector<PayoffPoint> pts;
  pts.reserve(g.profile_count());
  for (std::size_t k = 0; k < g.profile_count(); ++k) {
    const PayoffPair& u = g.payoff(g.profile_at(k));
    pts.push_back({u.u1, u.u2});
  }
  return pts;
}

/// A single bit answers all of: some computable P2 strategy lacks a best
/// response; some computable P2 strategy lacks a computable best response;
/// the game is non-trivial for P1.
inline bool check_nontrivial(const Game& g) { return !is_trivial_for(g, Player::P1); }

/// Feasible payoffs clipped to the individually rational quadrant.
inline ConvexRegion ir_region(const Game& g) {
  return clip_to_rational_quadrant(convex_hull(payoff_points(g)), pure_minmax(g, Player::P1).value,
                                   pure_minmax(g, Player::P2).value);
}

struct EquilibriumCheck {
  bool holds = false;
  std::optional<PayoffPoint> witness;  // a region vertex with x > minmax_1
};

/// The region's vertices are rational, so a strictly-above-minmax point for
/// P1 exists iff some vertex has one. The witness is the vertex with the
/// largest x, ties broken by the largest y.
inline EquilibriumCheck check_equilibrium_condition(const Game& g) {
  if (g.num_actions(Player::P1) < 2) return {};
  const ConvexRegion r = ir_region(g);
  const Rational mm1 = pure_minmax(g, Player::P1).value;
  std::optional<PayoffPoint> best;
  for (const auto& v : r.vertices)
    if (v.x > mm1 && (!best || v.x > best->x || (v.x == best->x && v.y > best->y))) best = v;
  return {best.has_value(), best};
}

using Weights = std::vector<std::pair<ActionProfile, Rational>>;

/// Convex weights on at most three profiles reproducing `target` exactly;
/// nullopt when the target lies outside the feasible set. Supports are
/// tried by size, then in lexicographic order of profile indices.
inline std::optional<Weights> decompose_feasible(const Game& g, const PayoffPoint& target) {
  const auto pts = payoff_points(g);
  const std::size_t n = pts.size();
  auto at = [&](std::size_t k) { return g.profile_at(k); };

  for (std::size_t i = 0; i < n; ++i)
    if (pts[i] == target) return Weights{{at(i), Rational(1)}};

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const PayoffPoint &p = pts[i], &q = pts[j];
      if (p == q || cross(q, p, target) != 0) continue;
      // target = l*p + (1-l)*q, l from the projection onto p - q.
      Rational dx = p.x - q.x, dy = p.y - q.y;
      Rational l = ((target.x - q.x) * dx + (target.y - q.y) * dy) / (dx * dx + dy * dy);
      if (l > 0 && l < 1) return Weights{{at(i), l}, {at(j), 1 - l}};
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const PayoffPoint &a = pts[i], &b = pts[j], &c = pts[k];
        Rational area = cross(a, b, c);
        if (area == 0) continue;
        Rational la = cross(target, b, c) / area;
        Rational lb = cross(a, target, c) / area;
        Rational lc = 1 - la - lb;
        if (la > 0 && lb > 0 && lc > 0) return Weights{{at(i), la}, {at(j), lb}, {at(k), lc}};
      }
    }
  }
  return std::nullopt;
}

/// gamma = lcm of the weight denominators, beta = weight * gamma, entries in
/// row-major profile order.
inline Schedule schedule_from_weights(Weights weights) {
  if (weights.empty()) throw std::invalid_argument("schedule_from_weights: no weights");
  Rational total = 0;
  BigInt gamma = 1;
  for (const auto& [a, w] : weights) {
    if (w < 0) throw std::invalid_argument("schedule_from_weights: negative weight");
    total += w;
    gamma = lcm(gamma, denominator_of(w));  // boost::multiprecision via ADL
  }
  if (total != 1) throw std::invalid_argument("schedule_from_weights: weights sum to " + to_string(total));
  if (gamma > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("schedule period overflows");
  std::sort(weights.begin(), weights.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<ScheduleEntry> entries;
  for (const auto& [a, w] : weights) {
    Rational beta = w * Rational(gamma);
    entries.push_back({a, static_cast<std::uint64_t>(numerator_of(beta))});
  }
  return Schedule(std::move(entries));
}

// ---------------------------------------------------------------------------
// Full report.

struct ClassificationReport {
  std::size_t actions1 = 0, actions2 = 0;
  Rational max_payoff1, max_payoff2;
  Rational minmax1, minmax2;
  bool trivial_for_p1 = false;
  bool trivial_for_p2 = false;
  bool nontrivial_strategy_exists = false;
  bool equilibrium_condition = false;
  std::optional<PayoffPoint> witness;
  ConvexRegion region;
};

inline ClassificationReport classify(const Game& g) {
  ClassificationReport r;
  r.actions1 = g.num_actions(Player::P1);
  r.actions2 = g.num_actions(Player::P2);
  r.max_payoff1 = max_payoff(g, Player::P1);
  r.max_payoff2 = max_payoff(g, Player::P2);
  r.minmax1 = pure_minmax(g, Player::P1).value;
  r.minmax2 = pure_minmax(g, Player::P2).value;
  r.trivial_for_p1 = is_trivial_for(g, Player::P1);
  r.trivial_for_p2 = is_trivial_for(g, Player::P2);
  r.nontrivial_strategy_exists = check_nontrivial(g);
  EquilibriumCheck eq = check_equilibrium_condition(g);
  r.equilibrium_condition = eq.holds;
  r.witness = eq.witness;
  r.region = ir_region(g);
  return r;
}

inline std::string format_report(const ClassificationReport& r) {
  auto yn = [](bool b) { return b ? "true" : "false"; };
  std::ostringstream out;
  out << "actions: " << r.actions1 << ' ' << r.actions2 << '\n'
      << "max_payoff: " << to_string(r.max_payoff1) << ' ' << to_string(r.max_payoff2) << '\n'
      << "minmax: " << to_string(r.minmax1) << ' ' << to_string(r.minmax2) << '\n'
      << "trivial_for_p1: " << yn(r.trivial_for_p1) << '\n'
      << "trivial_for_p2: " << yn(r.trivial_for_p2) << '\n'
      << "nontrivial_strategy_exists: " << yn(r.nontrivial_strategy_exists) << '\n'
      << "equilibrium_condition: " << yn(r.equilibrium_condition) << '\n'
      << "witness: " << (r.witness ? to_string(*r.witness) : "none") << '\n'
      << "region: " << region_kind_name(r.region.kind) << '\n';
  for (const auto& v : r.region.vertices) out << "region_vertex: " << to_string(v) << '\n';
  return out.str();
}

}  // namespace repgame

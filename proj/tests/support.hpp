#pragma once

// Shared test scaffolding: seeded generators and reference implementations
// written directly from the definitions, kept independent of the library's
// incremental machinery so the two can be compared.

#include "repgame/repgame.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#ifndef REPGAME_FIXTURES_DIR
#error "REPGAME_FIXTURES_DIR must point at the fixtures/ directory"
#endif

namespace repgame::check {

inline std::string fixture(const std::string& name) { return std::string(REPGAME_FIXTURES_DIR) + "/" + name; }

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, static_cast<std::int64_t>(n) - 1)); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(std::int64_t lo, std::int64_t hi, std::int64_t max_den) {
    std::int64_t den = integer(1, max_den);
    return Rational(integer(lo * den, hi * den), den);
  }

  Game game(std::size_t n1, std::size_t n2, std::int64_t lo, std::int64_t hi) {
    std::vector<std::string> a1, a2;
    for (std::size_t i = 0; i < n1; ++i) a1.push_back("r" + std::to_string(i));
    for (std::size_t j = 0; j < n2; ++j) a2.push_back("c" + std::to_string(j));
    std::vector<PayoffPair> u;
    for (std::size_t k = 0; k < n1 * n2; ++k) u.push_back({Rational(integer(lo, hi)), Rational(integer(lo, hi))});
    return Game(a1, a2, u);
  }

  tm::MachineProgram program(std::uint32_t max_states) {
    auto k = static_cast<std::uint32_t>(integer(1, max_states));
    std::vector<tm::Transition> table;
    for (std::uint32_t i = 0; i < k * tm::kSymbols; ++i) {
      auto next = static_cast<std::uint32_t>(integer(0, k));  // k means halt
      table.push_back({next == k ? tm::kHalt : next, static_cast<tm::Symbol>(integer(0, 2)),
                       coin() ? tm::Move::Right : tm::Move::Left});
    }
    return tm::MachineProgram(k, std::move(table));
  }

  /// Indices in [1, max_index]; a mix of short halting machines (both
  /// outputs), random programs and explicit divergers.
  Registry registry(std::size_t count, std::uint64_t max_index) {
    Registry reg;
    while (reg.size() < count) {
      auto i = static_cast<std::uint64_t>(integer(1, static_cast<std::int64_t>(max_index)));
      switch (integer(0, 3)) {
        case 0:
        case 1: reg.insert_or_assign(i, tm::halting_after(static_cast<std::uint32_t>(integer(8, 40)), coin())); break;
        case 2: reg.insert_or_assign(i, program(3)); break;
        default: reg.insert_or_assign(i, tm::canonical_diverging()); break;
      }
    }
    return reg;
  }

  History history(const Game& g, std::size_t length) {
    History h;
    for (std::size_t t = 0; t < length; ++t)
      h.push_back({index(g.num_actions(Player::P1)), index(g.num_actions(Player::P2))});
    return h;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// ---------------------------------------------------------------------------
// Reference oracle: one fresh bounded simulation per query.

inline bool naive_in(const OracleFamily& o, std::uint64_t i, std::uint64_t n, OracleSet s) {
  if (i == 0 || i > n) return false;
  auto program = o.machine(i);
  if (!program) return false;
  auto out = tm::simulate_bounded(*program, i, n - i);
  return out.halted() && ((out.output == 0) == (s == OracleSet::A));
}

// ---------------------------------------------------------------------------
// Reference strategies evaluated on whole histories, straight from the
// definitions. Stage numbers are 1-based; h[k-1] is stage k.

inline ActionIndex ref_sigma_d2(const DistinguishedActions& d, HistoryView h) {
  const std::uint64_t T = h.size();
  for (std::uint64_t t = 1; t <= T; ++t)
    if (h[t - 1].a1 == d.c1) return (T + 1) % (t + 1) == 0 ? d.d2 : d.c2;
  return d.d2;
}

inline ActionIndex ref_sigma_e2(const DistinguishedActions& d, std::uint64_t kr, const OracleFamily& o,
                                HistoryView h) {
  const std::uint64_t T = h.size();
  for (std::uint64_t t = 1; kr * t < T; ++t) {
    ActionIndex a = h[kr * t].a1;  // stage K_r t + 1
    if ((a != d.c1 && naive_in(o, t, T, OracleSet::A)) || (a != d.d1 && naive_in(o, t, T, OracleSet::B)))
      return d.d2;
  }
  return d.c2;
}

/// The ideal sigma-e1 restricted to a registry: membership in B decided by
/// the registry program's true behaviour (halting within `horizon` steps is
/// enough for every machine used with it).
inline ActionIndex ref_sigma_e1(const DistinguishedActions& d, std::uint64_t kr, const OracleFamily& o,
                                std::uint64_t horizon, HistoryView h) {
  const std::uint64_t T = h.size();
  if (T == 0 || T % kr != 0) return d.c1;
  const std::uint64_t t = T / kr;
  auto program = o.machine(t);
  if (!program) return d.c1;
  auto out = tm::simulate_bounded(*program, t, horizon);
  return out.halted() && out.output != 0 ? d.d1 : d.c1;
}

/// The modified pair's P2 trigger at level T = h.size().
inline bool ref_pair_trigger(const DistinguishedActions& d, const OracleFamily& o, bool spe, HistoryView h) {
  const std::uint64_t T = h.size();
  for (std::uint64_t t = 1; t < 64 && (std::uint64_t{1} << t) <= T; ++t) {
    ActionIndex a = h[(std::uint64_t{1} << t) - 1].a1;
    if (spe) {
      // detect(t) > sqrt(T)  <=>  t not in A_m u B_m for every m with m^2 <= T
      bool early = false;
      for (std::uint64_t m = 1; m * m <= T; ++m)
        early = early || naive_in(o, t, m, OracleSet::A) || naive_in(o, t, m, OracleSet::B);
      if (early) continue;
    }
    if ((a != d.c1 && naive_in(o, t, T, OracleSet::A)) || (a != d.d1 && naive_in(o, t, T, OracleSet::B)))
      return true;
  }
  return false;
}

/// fix(h) as used by the modified pair: the reference path replaces test
/// stages and stages at which the trigger was active.
inline History ref_fix(const DistinguishedActions& d, const OracleFamily& o, bool spe, const History& reference,
                       HistoryView h) {
  History f(h.begin(), h.end());
  for (std::uint64_t s = 1; s <= h.size(); ++s) {
    const bool test = s >= 2 && std::has_single_bit(s);
    if (test || ref_pair_trigger(d, o, spe, h.first(s - 1))) f[s - 1] = reference.at(s - 1);
  }
  return f;
}

inline ActionIndex ref_pair_p2(const DistinguishedActions& d, const OracleFamily& o, bool spe, const Strategy& base2,
                               const History& reference, HistoryView h) {
  if (ref_pair_trigger(d, o, spe, h)) return d.d2;
  return base2(ref_fix(d, o, spe, reference, h));
}

// ---------------------------------------------------------------------------
// Reference geometry: membership in the convex hull of a point set by
// Carathéodory enumeration (some point, segment or triangle of the set
// contains the query).

inline bool in_segment(const PayoffPoint& a, const PayoffPoint& b, const PayoffPoint& p) {
  if (cross(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

inline bool in_triangle(const PayoffPoint& a, const PayoffPoint& b, const PayoffPoint& c, const PayoffPoint& p) {
  Rational d1 = cross(a, b, p), d2 = cross(b, c, p), d3 = cross(c, a, p);
  bool neg = d1 < 0 || d2 < 0 || d3 < 0;
  bool pos = d1 > 0 || d2 > 0 || d3 > 0;
  return !(neg && pos);
}

inline bool naive_in_hull(const std::vector<PayoffPoint>& pts, const PayoffPoint& p) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i] == p) return true;
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (in_segment(pts[i], pts[j], p)) return true;
      for (std::size_t k = j + 1; k < pts.size(); ++k)
        if (cross(pts[i], pts[j], pts[k]) != 0 && in_triangle(pts[i], pts[j], pts[k], p)) return true;
    }
  }
  return false;
}

/// Independent decision of the equilibrium condition: does some convex
/// combination of at most three payoff points satisfy x > m1 and y >= m2?
/// The maximum of x over hull ∩ quadrant is attained at a payoff point, at a
/// crossing of a segment between two payoff points with x = m1 or y = m2, or
/// at the corner (m1, m2); enumerate all of those candidates.
inline bool caratheodory_condition(const Game& g) {
  if (g.num_actions(Player::P1) < 2) return false;
  const Rational m1 = pure_minmax(g, Player::P1).value;
  const Rational m2 = pure_minmax(g, Player::P2).value;
  std::vector<PayoffPoint> pts;
  for (std::size_t k = 0; k < g.profile_count(); ++k) {
    const PayoffPair& u = g.payoff(g.profile_at(k));
    pts.push_back({u.u1, u.u2});
  }
  auto good = [&](const PayoffPoint& p) { return p.x > m1 && p.y >= m2; };
  for (const auto& p : pts)
    if (good(p)) return true;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const PayoffPoint &a = pts[i], &b = pts[j];
      if (a.y != b.y) {
        Rational l = (m2 - b.y) / (a.y - b.y);  // a*l + b*(1-l) has y = m2
        if (l >= 0 && l <= 1 && good({a.x * l + b.x * (1 - l), m2})) return true;
      }
      if (a.x != b.x) {
        Rational l = (m1 - b.x) / (a.x - b.x);
        if (l >= 0 && l <= 1 && good({m1, a.y * l + b.y * (1 - l)})) return true;
      }
    }
  }
  // The corner itself has x = m1, never > m1: it cannot be a witness, and
  // any region through it that reaches x > m1 has a vertex found above.
  return false;
}

}  // namespace repgame::check

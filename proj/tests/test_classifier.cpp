#include "support.hpp"

#include <gtest/gtest.h>

using namespace repgame;

namespace {

constexpr ActionIndex C = 0, D = 1;

PayoffPoint combine(const Game& g, const Weights& w) {
  PayoffPoint p{0, 0};
  for (const auto& [a, l] : w) {
    p.x += g.payoff(Player::P1, a) * l;
    p.y += g.payoff(Player::P2, a) * l;
  }
  return p;
}

void expect_valid_decomposition(const Game& g, const PayoffPoint& target, const Weights& w) {
  Rational total = 0;
  for (const auto& [a, l] : w) {
    EXPECT_TRUE(g.valid(a));
    EXPECT_GE(l, 0);
    total += l;
  }
  EXPECT_EQ(total, 1);
  EXPECT_LE(w.size(), 3u);
  EXPECT_EQ(combine(g, w), target);
}

}  // namespace

TEST(Classify, FixtureGames) {
  const ClassificationReport rps = classify(load_game(check::fixture("rps.game")));
  EXPECT_TRUE(rps.trivial_for_p1);
  EXPECT_FALSE(rps.nontrivial_strategy_exists);
  EXPECT_FALSE(rps.equilibrium_condition);
  EXPECT_EQ(rps.region.kind, RegionKind::Empty);

  const ClassificationReport dl = classify(load_game(check::fixture("deadlock.game")));
  EXPECT_FALSE(dl.trivial_for_p1);
  EXPECT_TRUE(dl.nontrivial_strategy_exists);
  EXPECT_FALSE(dl.equilibrium_condition);
  EXPECT_FALSE(dl.witness.has_value());
  EXPECT_EQ(dl.region, (ConvexRegion{RegionKind::Point, {{2, 2}}}));

  const ClassificationReport sh = classify(load_game(check::fixture("staghunt.game")));
  EXPECT_TRUE(sh.nontrivial_strategy_exists);
  EXPECT_TRUE(sh.equilibrium_condition);
  ASSERT_TRUE(sh.witness.has_value());
  EXPECT_EQ(sh.witness->x, 3);
}

TEST(Classify, PrisonersDilemmaWitnessIsTheRightmostVertex) {
  const EquilibriumCheck eq = check_equilibrium_condition(games::prisoners_dilemma());
  ASSERT_TRUE(eq.holds);
  EXPECT_EQ(*eq.witness, (PayoffPoint{Rational(13, 3), 1}));
}

TEST(Classify, ReportText) {
  EXPECT_EQ(format_report(classify(games::stag_hunt())),
            "actions: 2 2\n"
            "max_payoff: 3 3\n"
            "minmax: 1 1\n"
            "trivial_for_p1: false\n"
            "trivial_for_p2: false\n"
            "nontrivial_strategy_exists: true\n"
            "equilibrium_condition: true\n"
            "witness: 3 3\n"
            "region: polygon\n"
            "region_vertex: 1 1\n"
            "region_vertex: 7/3 1\n"
            "region_vertex: 3 3\n"
            "region_vertex: 1 7/3\n");
  EXPECT_EQ(format_report(classify(games::rock_paper_scissors())),
            "actions: 3 3\n"
            "max_payoff: 1 1\n"
            "minmax: 1 1\n"
            "trivial_for_p1: true\n"
            "trivial_for_p2: true\n"
            "nontrivial_strategy_exists: false\n"
            "equilibrium_condition: false\n"
            "witness: none\n"
            "region: empty\n");
}

TEST(Classify, DegenerateGames) {
  // One P1 action: false whatever the geometry says.
  const Game row = games::from_integers({"a"}, {"x", "y"}, {{1, 0}, {2, 5}});
  EXPECT_FALSE(check_equilibrium_condition(row).holds);
  EXPECT_FALSE(classify(row).equilibrium_condition);
  const Game col = games::from_integers({"a", "b"}, {"x"}, {{1, 1}, {3, 2}});
  EXPECT_FALSE(check_equilibrium_condition(col).holds);
  EXPECT_TRUE(classify(col).trivial_for_p1);
  const Game one = games::from_integers({"a"}, {"x"}, {{0, 0}});
  EXPECT_EQ(ir_region(one), (ConvexRegion{RegionKind::Point, {{0, 0}}}));
  EXPECT_FALSE(check_equilibrium_condition(one).holds);
}

TEST(Classify, NontrivialityIsTheNegatedTrivialityBit) {
  check::Gen gen(113);
  for (int k = 0; k < 200; ++k) {
    const Game g = gen.game(1 + gen.index(4), 1 + gen.index(4), -3, 3);
    const ClassificationReport r = classify(g);
    EXPECT_EQ(r.nontrivial_strategy_exists, !r.trivial_for_p1);
    EXPECT_EQ(r.trivial_for_p1, pure_minmax(g, Player::P1).value == max_payoff(g, Player::P1));
  }
}

TEST(EquilibriumCondition, AgreesWithCaratheodoryEnumeration) {
  check::Gen gen(127);
  for (int k = 0; k < 300; ++k) {
    const Game g = gen.game(2, 2, -4, 4);
    ASSERT_EQ(check_equilibrium_condition(g).holds, check::caratheodory_condition(g)) << format_game(g);
  }
  for (int k = 0; k < 100; ++k) {
    const Game g = gen.game(3, 3, -4, 4);
    ASSERT_EQ(check_equilibrium_condition(g).holds, check::caratheodory_condition(g)) << format_game(g);
  }
}

TEST(EquilibriumCondition, WitnessesAreFeasibleAndIndividuallyRational) {
  check::Gen gen(131);
  int seen = 0;
  for (int k = 0; k < 300; ++k) {
    const Game g = gen.game(2 + gen.index(2), 2 + gen.index(2), -4, 4);
    const EquilibriumCheck eq = check_equilibrium_condition(g);
    EXPECT_EQ(eq.holds, eq.witness.has_value());
    if (!eq.holds) continue;
    ++seen;
    const PayoffPoint& w = *eq.witness;
    EXPECT_GT(w.x, pure_minmax(g, Player::P1).value);
    EXPECT_GE(w.y, pure_minmax(g, Player::P2).value);
    const auto dec = decompose_feasible(g, w);
    ASSERT_TRUE(dec.has_value()) << to_string(w);
    expect_valid_decomposition(g, w, *dec);
    const auto& verts = ir_region(g).vertices;
    EXPECT_NE(std::find(verts.begin(), verts.end(), w), verts.end());
  }
  EXPECT_GT(seen, 50);
}

TEST(DecomposeFeasible, Examples) {
  const Game pd = games::prisoners_dilemma();
  EXPECT_EQ(decompose_feasible(pd, {2, 2}), (Weights{{{C, C}, Rational(1, 2)}, {{D, D}, Rational(1, 2)}}));
  EXPECT_EQ(decompose_feasible(pd, {5, 0}), (Weights{{{D, C}, 1}}));
  EXPECT_FALSE(decompose_feasible(pd, {10, 10}).has_value());
  EXPECT_FALSE(decompose_feasible(pd, {0, 0}).has_value());
  // Interior point needing three profiles.
  const auto w = decompose_feasible(pd, {2, Rational(5, 2)});
  ASSERT_TRUE(w.has_value());
  expect_valid_decomposition(pd, {2, Rational(5, 2)}, *w);
}

TEST(DecomposeFeasible, ExactOnRandomTargets) {
  check::Gen gen(137);
  for (int k = 0; k < 150; ++k) {
    const Game g = gen.game(2 + gen.index(2), 2 + gen.index(2), -4, 4);
    const auto pts = payoff_points(g);
    for (int s = 0; s < 20; ++s) {
      // A random convex combination of up to four profiles.
      Weights mix;
      Rational rest = 1;
      for (int j = 0; j < 3; ++j) {
        Rational l = rest * gen.rational(0, 1, 5);
        mix.push_back({g.profile_at(gen.index(g.profile_count())), l});
        rest -= l;
      }
      mix.push_back({g.profile_at(gen.index(g.profile_count())), rest});
      const PayoffPoint inside = combine(g, mix);
      const auto dec = decompose_feasible(g, inside);
      ASSERT_TRUE(dec.has_value()) << to_string(inside);
      expect_valid_decomposition(g, inside, *dec);

      const PayoffPoint any{gen.rational(-5, 5, 3), gen.rational(-5, 5, 3)};
      EXPECT_EQ(decompose_feasible(g, any).has_value(), check::naive_in_hull(pts, any)) << to_string(any);
    }
  }
}

TEST(ScheduleFromWeights, Examples) {
  const Schedule half = schedule_from_weights({{{C, C}, Rational(1, 2)}, {{D, D}, Rational(1, 2)}});
  EXPECT_EQ(half.period(), 2u);
  EXPECT_EQ(half, Schedule({{{C, C}, 1}, {{D, D}, 1}}));

  EXPECT_EQ(schedule_from_weights({{{D, C}, 1}}).period(), 1u);

  // Entries come out in profile order whatever the input order.
  const Schedule thirds = schedule_from_weights({{{D, D}, Rational(1, 3)}, {{C, D}, Rational(2, 3)}});
  EXPECT_EQ(thirds, Schedule({{{C, D}, 2}, {{D, D}, 1}}));
  EXPECT_EQ(thirds.period(), 3u);

  EXPECT_EQ(schedule_from_weights({{{C, C}, Rational(1, 4)}, {{D, D}, Rational(1, 6)}, {{D, C}, Rational(7, 12)}})
                .period(),
            12u);
  EXPECT_THROW(schedule_from_weights({}), std::invalid_argument);
  EXPECT_THROW(schedule_from_weights({{{C, C}, Rational(1, 2)}}), std::invalid_argument);
  EXPECT_THROW(schedule_from_weights({{{C, C}, Rational(3, 2)}, {{D, D}, Rational(-1, 2)}}), std::invalid_argument);
}

TEST(ScheduleFromWeights, AverageReproducesTheTarget) {
  check::Gen gen(139);
  for (int k = 0; k < 100; ++k) {
    const Game g = gen.game(3, 3, -4, 4);
    const PayoffPoint target = {gen.rational(-4, 4, 4), gen.rational(-4, 4, 4)};
    const auto dec = decompose_feasible(g, target);
    if (!dec) continue;
    const Schedule s = schedule_from_weights(*dec);
    const PayoffPair avg = s.average_payoff(g);
    EXPECT_EQ((PayoffPoint{avg.u1, avg.u2}), target);
    // The schedule's path average over one period is exact as well.
    const auto [f1, f2] = make_folk_pair(g, s, false);
    const PathTrace tr = run(g, f1, f2, s.period());
    EXPECT_EQ(running_average(tr, Player::P1, s.period()), target.x);
  }
}

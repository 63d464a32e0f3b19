#pragma once

// The named strategies of the repeated game: the sigma family built on the
// distinguished actions and the oracle sets, the constructive folk-theorem
// strategies, myopic best responses, and the oracle-modified equilibrium
// pairs.
//
// Every strategy is a pure map from histories to actions. Cursors carry
// only what a left fold over the history computes, so replaying any
// injected history reproduces the same decision.

#include "repgame/engine.hpp"
#include "repgame/oracle.hpp"
#include "repgame/schedule.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

namespace repgame {

struct FuelPolicy {
  std::uint64_t fuel_cap = 1000;

  explicit FuelPolicy(std::uint64_t cap = 1000) : fuel_cap(cap) {
    if (cap < 1) throw std::invalid_argument("fuel cap must be at least 1");
  }
};

struct DistinguishedActions {
  ActionIndex c1 = 0, d1 = 0;
  ActionIndex c2 = 0, d2 = 0;

  /// Lowest-index witnesses for the sigma strategies: (c1, c2) is the first
  /// profile in row-major order giving P1 its maximum payoff, d2 the first
  /// P2 action holding P1's best reply below that maximum, d1 the first best
  /// reply to d2.
  static DistinguishedActions derive_sigma(const Game& g) {
    if (is_trivial_for(g, Player::P1)) throw NotNonTrivial("game is trivial for P1");
    const Rational m1 = max_payoff(g, Player::P1);
    DistinguishedActions d;
    for (std::size_t k = 0; k < g.profile_count(); ++k) {
      ActionProfile a = g.profile_at(k);
      if (g.payoff(Player::P1, a) == m1) {
        d.c1 = a.a1;
        d.c2 = a.a2;
        break;
      }
    }
    for (ActionIndex b = 0; b < g.num_actions(Player::P2); ++b) {
      ValuedAction r = best_payoff_vs(g, Player::P1, b);
      if (r.value < m1) {
        d.d2 = b;
        d.d1 = r.action;
        break;
      }
    }
    return d;
  }

  /// Witnesses for the equilibrium pairs: d2 is the first minmax action
  /// against P1, d1 the first best reply to it, c1 the first action != d1.
  /// c2 plays no role there and is set to d2.
  static DistinguishedActions derive_pair(const Game& g) {
    if (g.num_actions(Player::P1) < 2) throw PreconditionViolated("P1 needs at least two actions");
    DistinguishedActions d;
    d.d2 = pure_minmax(g, Player::P1).action;
    d.c2 = d.d2;
    d.d1 = best_payoff_vs(g, Player::P1, d.d2).action;
    d.c1 = d.d1 == 0 ? 1 : 0;
    return d;
  }

  void validate_sigma(const Game& g) const {
    check_ranges(g);
    const Rational m1 = max_payoff(g, Player::P1);
    if (g.payoff(Player::P1, {c1, c2}) != m1) throw PreconditionViolated("u1(c1, c2) must equal P1's maximum payoff");
    ValuedAction r = best_payoff_vs(g, Player::P1, d2);
    if (g.payoff(Player::P1, {d1, d2}) != r.value) throw PreconditionViolated("d1 must be a best reply to d2");
    if (!(r.value < m1)) throw PreconditionViolated("u1(d1, d2) must be below P1's maximum payoff");
  }

  void validate_pair(const Game& g) const {
    check_ranges(g);
    if (c1 == d1) throw PreconditionViolated("c1 and d1 must differ");
    if (best_payoff_vs(g, Player::P1, d2).value != pure_minmax(g, Player::P1).value)
      throw PreconditionViolated("d2 must be a minmax action against P1");
  }

  friend bool operator==(const DistinguishedActions&, const DistinguishedActions&) = default;

 private:
  void check_ranges(const Game& g) const {
    if (c1 >= g.num_actions(Player::P1) || d1 >= g.num_actions(Player::P1) || c2 >= g.num_actions(Player::P2) ||
        d2 >= g.num_actions(Player::P2))
      throw InvalidProfile("distinguished action out of range");
  }
};

/// Least K >= 1 with (u1(d1,c2) + K*M1) / (K+1) > u1(d1,d2).
inline std::uint64_t compute_Kr(const Game& g, const DistinguishedActions& d) {
  const Rational x = g.payoff(Player::P1, {d.d1, d.c2});
  const Rational u = g.payoff(Player::P1, {d.d1, d.d2});
  const Rational m1 = max_payoff(g, Player::P1);
  // The inequality rearranges to K * (M1 - u) > u - x.
  if (m1 > u) {
    BigInt k = floor_of((u - x) / (m1 - u)) + 1;
    if (k < 1) k = 1;
    if (k > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("K_r does not fit 64 bits");
    return static_cast<std::uint64_t>(k);
  }
  if (x > u) return 1;
  throw NotNonTrivial("no K >= 1 satisfies the reward inequality; the game is trivial for P1");
}

/// detect(i) revealed as the approximation level grows: answers "is i
/// detected at a level <= n" for non-decreasing n with logarithmically many
/// oracle round trips.
class DetectionWatch {
 public:
  DetectionWatch(OracleFamily oracle, std::uint64_t i) : oracle_(std::move(oracle)), i_(i), clear_through_(i) {
    if (oracle_.never_detected(i_)) clear_through_ = kNever;
  }

  std::optional<Detection> upto(std::uint64_t level) {
    if (!found_ && level > clear_through_) {
      std::uint64_t cap = std::max(level, clear_through_ > kNever / 2 ? kNever : 2 * clear_through_);
      found_ = oracle_.detect(i_, cap);
      if (!found_) clear_through_ = cap;
    }
    if (found_ && found_->level <= level) return found_;
    return std::nullopt;
  }

  bool never() const { return !found_ && clear_through_ == kNever; }
  bool found() const { return found_.has_value(); }
  /// No detection at any level <= clear_through().
  std::uint64_t clear_through() const { return found_ ? found_->level - 1 : clear_through_; }
  std::uint64_t index() const { return i_; }

 private:
  static constexpr std::uint64_t kNever = std::numeric_limits<std::uint64_t>::max();
  OracleFamily oracle_;
  std::uint64_t i_;
  std::uint64_t clear_through_;
  std::optional<Detection> found_;
};

// ---------------------------------------------------------------------------
// Sigma strategies.

namespace detail {

struct SigmaParams {
  Game game;
  DistinguishedActions dist;
  std::uint64_t kr = 1;
  std::optional<OracleFamily> oracle;
  std::uint64_t fuel_cap = 1;
};

class SigmaD2Cursor final : public Cursor {
 public:
  explicit SigmaD2Cursor(std::shared_ptr<const SigmaParams> p) : p_(std::move(p)) {}
  ActionIndex next() const override {
    if (first_c1_ == 0) return p_->dist.d2;
    return (stage_ + 1) % (first_c1_ + 1) == 0 ? p_->dist.d2 : p_->dist.c2;
  }
  void advance(const ActionProfile& a) override {
    ++stage_;
    if (first_c1_ == 0 && a.a1 == p_->dist.c1) first_c1_ = stage_;
  }

 private:
  std::shared_ptr<const SigmaParams> p_;
  std::uint64_t stage_ = 0;
  std::uint64_t first_c1_ = 0;  // 0: c1 not yet played
};

class SigmaDCycleCursor final : public Cursor {
 public:
  SigmaDCycleCursor(std::shared_ptr<const SigmaParams> p, std::uint64_t t, ActionIndex filler)
      : p_(std::move(p)), t_(t), filler_(filler) {}
  ActionIndex next() const override {
    const std::uint64_t s = stage_ + 1;
    if (s < t_) return filler_;
    if (s == t_) return p_->dist.c1;
    return s % (t_ + 1) == 0 ? p_->dist.d1 : p_->dist.c1;
  }
  void advance(const ActionProfile&) override { ++stage_; }

 private:
  std::shared_ptr<const SigmaParams> p_;
  std::uint64_t t_;
  ActionIndex filler_;
  std::uint64_t stage_ = 0;
};

class SigmaE1Cursor final : public Cursor {
 public:
  explicit SigmaE1Cursor(std::shared_ptr<const SigmaParams> p) : p_(std::move(p)) {}
  ActionIndex next() const override {
    if (stage_ > 0 && stage_ % p_->kr == 0) {
      auto d = p_->oracle->detect(stage_ / p_->kr, p_->fuel_cap);
      if (d && d->set == OracleSet::B) return p_->dist.d1;
    }
    return p_->dist.c1;
  }
  void advance(const ActionProfile&) override { ++stage_; }

 private:
  std::shared_ptr<const SigmaParams> p_;
  std::uint64_t stage_ = 0;
};

// Pending test indices sit in a min-heap keyed by the first level at which
// their detection status can change; at level T only entries keyed <= T are
// touched.
class SigmaE2Cursor final : public Cursor {
 public:
  explicit SigmaE2Cursor(std::shared_ptr<const SigmaParams> p) : p_(std::move(p)) {}

  ActionIndex next() const override { return triggered_ ? p_->dist.d2 : p_->dist.c2; }
  bool punishing() const override { return triggered_; }

  void advance(const ActionProfile& a) override {
    ++stage_;
    if (triggered_) return;
    // h[K_r t + 1] enters the history exactly when K_r t < T.
    const std::uint64_t kr = p_->kr;
    if (stage_ > kr && (stage_ - 1) % kr == 0) {
      Pending e{0, (stage_ - 1) / kr, a.a1 != p_->dist.c1, a.a1 != p_->dist.d1, std::nullopt};
      if (e.off_c1 || e.off_d1) {
        e.watch.emplace(*p_->oracle, e.t);
        if (!e.watch->never()) push(std::move(e));
      }
    }
    while (!heap_.empty() && heap_.front().next_level <= stage_) {
      std::pop_heap(heap_.begin(), heap_.end(), later);
      Pending e = std::move(heap_.back());
      heap_.pop_back();
      if (auto d = e.watch->upto(stage_)) {
        if ((d->set == OracleSet::A && e.off_c1) || (d->set == OracleSet::B && e.off_d1)) {
          triggered_ = true;
          heap_.clear();
          return;
        }
      } else if (!e.watch->never()) {
        push(std::move(e));
      }
    }
  }

 private:
  struct Pending {
    std::uint64_t next_level;
    std::uint64_t t;
    bool off_c1;
    bool off_d1;
    std::optional<DetectionWatch> watch;
  };

  static bool later(const Pending& x, const Pending& y) { return x.next_level > y.next_level; }

  void push(Pending e) {
    e.next_level = e.watch->clear_through() + 1;
    heap_.push_back(std::move(e));
    std::push_heap(heap_.begin(), heap_.end(), later);
  }

  std::shared_ptr<const SigmaParams> p_;
  std::uint64_t stage_ = 0;
  bool triggered_ = false;
  std::vector<Pending> heap_;
};

}  // namespace detail

inline Strategy make_sigma_d2(const Game& g, const DistinguishedActions& d) {
  d.validate_sigma(g);
  auto p = std::make_shared<const detail::SigmaParams>(detail::SigmaParams{g, d, 1, std::nullopt, 1});
  return Strategy("sigma-d2", Player::P2, [p] { return std::make_unique<detail::SigmaD2Cursor>(p); });
}

/// P1's cycle strategy s^(t) against sigma-d2: the first c1 comes at stage t
/// (earlier stages play the lowest-index action other than c1), afterwards
/// d1 at stages divisible by t+1 and c1 elsewhere. Its limit-of-means payoff
/// is (M1(d2) + t*M1) / (t+1).
inline Strategy make_sigma_d_cycle(const Game& g, const DistinguishedActions& d, std::uint64_t t) {
  d.validate_sigma(g);
  if (t < 1) throw std::invalid_argument("cycle index t must be at least 1");
  ActionIndex filler = d.c1 == 0 ? 1 : 0;
  if (t > 1 && filler >= g.num_actions(Player::P1))
    throw PreconditionViolated("delaying c1 needs a second P1 action");
  auto p = std::make_shared<const detail::SigmaParams>(detail::SigmaParams{g, d, 1, std::nullopt, 1});
  return Strategy("sigma-d-cycle:" + std::to_string(t), Player::P1,
                  [p, t, filler] { return std::make_unique<detail::SigmaDCycleCursor>(p, t, filler); });
}

inline Strategy make_sigma_e2(const Game& g, const DistinguishedActions& d, const OracleFamily& oracle) {
  d.validate_sigma(g);
  auto p = std::make_shared<const detail::SigmaParams>(detail::SigmaParams{g, d, compute_Kr(g, d), oracle, 1});
  return Strategy("sigma-e2", Player::P2, [p] { return std::make_unique<detail::SigmaE2Cursor>(p); });
}

inline Strategy make_sigma_e1(const Game& g, const DistinguishedActions& d, const OracleFamily& oracle,
                              FuelPolicy fuel) {
  d.validate_sigma(g);
  auto p = std::make_shared<const detail::SigmaParams>(
      detail::SigmaParams{g, d, compute_Kr(g, d), oracle, fuel.fuel_cap});
  return Strategy("sigma-e1", Player::P1, [p] { return std::make_unique<detail::SigmaE1Cursor>(p); });
}

// ---------------------------------------------------------------------------
// Folk-theorem strategies.

namespace detail {

struct FolkParams {
  Game game;
  Schedule schedule;
  bool finite_punishment = false;
  ActionProfile punish_p1;  // expected profile while P1 is punished
  ActionProfile punish_p2;
};

/// The prescribed-play automaton both seats run. A unilateral deviation by
/// Pj from the expected profile starts a punishment of Pj: the opponent
/// plays its minmax action against Pj and Pj is expected to best-reply.
/// Simultaneous deviations by both players change nothing.
class FolkReferee {
 public:
  explicit FolkReferee(std::shared_ptr<const FolkParams> p) : p_(std::move(p)) {}

  ActionProfile expected() const {
    if (target_) return *target_ == Player::P1 ? p_->punish_p1 : p_->punish_p2;
    return p_->schedule.at_stage(stage_ + 1);
  }
  std::optional<Player> punished() const { return target_; }

  void observe(const ActionProfile& a) {
    const ActionProfile e = expected();
    ++stage_;
    if (target_ && stage_ >= until_) target_.reset();
    const bool dev1 = a.a1 != e.a1;
    const bool dev2 = a.a2 != e.a2;
    if (dev1 == dev2) return;
    const Player j = dev1 ? Player::P1 : Player::P2;
    if (!p_->finite_punishment) {
      if (!target_) {
        target_ = j;
        until_ = std::numeric_limits<std::uint64_t>::max();
      }
      return;
    }
    // Stages stage+1 .. stage^2; nothing to punish after a stage-1 deviation.
    const std::uint64_t end = stage_ > std::numeric_limits<std::uint32_t>::max()
                                  ? std::numeric_limits<std::uint64_t>::max()
                                  : stage_ * stage_;
    if (end > stage_) {
      target_ = j;
      until_ = end;
    }
  }

 private:
  std::shared_ptr<const FolkParams> p_;
  std::uint64_t stage_ = 0;
  std::optional<Player> target_;
  std::uint64_t until_ = 0;  // last punishment stage, inclusive
};

class FolkCursor final : public Cursor {
 public:
  FolkCursor(std::shared_ptr<const FolkParams> p, Player owner) : referee_(std::move(p)), owner_(owner) {}
  ActionIndex next() const override { return referee_.expected().of(owner_); }
  bool punishing() const override {
    auto t = referee_.punished();
    return t && *t != owner_;
  }
  void advance(const ActionProfile& a) override { referee_.observe(a); }

 private:
  FolkReferee referee_;
  Player owner_;
};

inline std::shared_ptr<const FolkParams> folk_params(const Game& g, const Schedule& s, bool finite) {
  s.validate(g);
  auto punish = [&](Player j) {
    ActionIndex hit = pure_minmax(g, j).action;
    ActionIndex reply = best_payoff_vs(g, j, hit).action;
    return make_profile(j, reply, hit);
  };
  return std::make_shared<const FolkParams>(FolkParams{g, s, finite, punish(Player::P1), punish(Player::P2)});
}

}  // namespace detail

/// Follows the schedule; after the opponent's first unilateral deviation,
/// plays the minmax action against it forever.
inline Strategy make_folk_ne(const Game& g, const Schedule& s, Player owner) {
  auto p = detail::folk_params(g, s, false);
  return Strategy("folk-ne", owner, [p, owner] { return std::make_unique<detail::FolkCursor>(p, owner); });
}

/// Follows the schedule; a unilateral deviation at stage T is punished over
/// stages T+1 .. T^2, the latest deviation restarting the window. The
/// schedule then resumes at the position of the current stage.
inline Strategy make_folk_spe(const Game& g, const Schedule& s, Player owner) {
  auto p = detail::folk_params(g, s, true);
  return Strategy("folk-spe", owner, [p, owner] { return std::make_unique<detail::FolkCursor>(p, owner); });
}

inline std::pair<Strategy, Strategy> make_folk_pair(const Game& g, const Schedule& s, bool subgame_perfect) {
  if (subgame_perfect) return {make_folk_spe(g, s, Player::P1), make_folk_spe(g, s, Player::P2)};
  return {make_folk_ne(g, s, Player::P1), make_folk_ne(g, s, Player::P2)};
}

// ---------------------------------------------------------------------------
// Myopic best response.

namespace detail {

class MyopicCursor final : public Cursor {
 public:
  MyopicCursor(std::shared_ptr<const Game> g, std::unique_ptr<Cursor> opp, Player owner)
      : g_(std::move(g)), opp_(std::move(opp)), owner_(owner) {}
  ActionIndex next() const override {
    ActionIndex b = opp_->next();
    if (b >= g_->num_actions(other(owner_)))
      throw StrategyFault(stage_ + 1, other(owner_), "action index " + std::to_string(b) + " out of range");
    return best_payoff_vs(*g_, owner_, b).action;
  }
  void advance(const ActionProfile& a) override {
    opp_->advance(a);
    ++stage_;
  }

 private:
  std::shared_ptr<const Game> g_;
  std::unique_ptr<Cursor> opp_;
  Player owner_;
  std::uint64_t stage_ = 0;
};

}  // namespace detail

/// Each stage, predicts the opponent's action by running `opp` on the
/// history so far and plays the lowest-index best reply to it.
inline Strategy make_myopic_best_response(const Game& g, const Strategy& opp, Player owner) {
  if (opp.owner() == owner) throw std::invalid_argument("myopic: the modelled strategy must belong to the opponent");
  auto game = std::make_shared<const Game>(g);
  return Strategy("myopic:" + opp.name(), owner,
                  [game, opp, owner] { return std::make_unique<detail::MyopicCursor>(game, opp.start(), owner); });
}

// ---------------------------------------------------------------------------
// Oracle-modified equilibrium pairs.

/// Path of play of a strategy pair from the empty history, extended on
/// demand. Safe to share between threads; answers never change.
class ReferencePath {
 public:
  ReferencePath(const Game& g, const Strategy& s1, const Strategy& s2)
      : game_(g), c1_(s1.start()), c2_(s2.start()) {}

  ActionProfile at(std::uint64_t stage) {
    if (stage == 0) throw std::out_of_range("stages are 1-based");
    std::lock_guard lock(mutex_);
    while (path_.size() < stage) {
      ActionProfile a{c1_->next(), c2_->next()};
      const std::uint64_t t = path_.size() + 1;
      if (a.a1 >= game_.num_actions(Player::P1)) throw StrategyFault(t, Player::P1, "reference path out of range");
      if (a.a2 >= game_.num_actions(Player::P2)) throw StrategyFault(t, Player::P2, "reference path out of range");
      path_.push_back(a);
      c1_->advance(a);
      c2_->advance(a);
    }
    return path_[stage - 1];
  }

 private:
  Game game_;
  std::mutex mutex_;
  std::unique_ptr<Cursor> c1_, c2_;
  std::vector<ActionProfile> path_;
};

/// Test stages are 2^t for t >= 1; returns t, or 0 for other stages.
inline std::uint64_t test_index(std::uint64_t stage) {
  return stage >= 2 && std::has_single_bit(stage) ? static_cast<std::uint64_t>(std::countr_zero(stage)) : 0;
}

namespace detail {

struct PairParams {
  DistinguishedActions dist;
  OracleFamily oracle;
  std::uint64_t fuel_cap;
  bool finite_punishment;
  Strategy base1, base2;
  std::shared_ptr<ReferencePath> reference;
};

// Both seats run the same monitor. The base strategy is fed fix(h): the
// reference path replaces the played profile at test stages and at stages
// where P2's trigger was active, so neither the test actions nor P2's
// punishment register as deviations with the base pair.
class PairCursor final : public Cursor {
 public:
  PairCursor(std::shared_ptr<const PairParams> p, Player owner)
      : p_(std::move(p)), owner_(owner), base_(owner == Player::P1 ? p_->base1.start() : p_->base2.start()) {}

  ActionIndex next() const override {
    if (owner_ == Player::P2) return trigger_ ? p_->dist.d2 : base_->next();
    if (std::uint64_t t = test_index(stage_ + 1)) {
      if (auto d = p_->oracle.detect(t, p_->fuel_cap)) return d->set == OracleSet::B ? p_->dist.d1 : p_->dist.c1;
    }
    return base_->next();
  }

  // The oracle trigger, or the base pair's own punishment outside test stages.
  bool punishing() const override {
    if (owner_ == Player::P2) return trigger_ || base_->punishing();
    return test_index(stage_ + 1) == 0 && base_->punishing();
  }

  void advance(const ActionProfile& a) override {
    ++stage_;
    const std::uint64_t t = test_index(stage_);
    base_->advance(t != 0 || trigger_ ? p_->reference->at(stage_) : a);
    if (t != 0) tests_.push_back({a.a1, DetectionWatch(p_->oracle, t)});
    trigger_ = evaluate();
  }

 private:
  struct TestRecord {
    ActionIndex played;
    DetectionWatch watch;
  };

  bool evaluate() {
    if (trigger_ && !p_->finite_punishment) return true;
    for (auto& r : tests_) {
      auto d = r.watch.upto(stage_);
      if (!d) continue;
      if (p_->finite_punishment &&
          static_cast<unsigned __int128>(d->level) * d->level <= static_cast<unsigned __int128>(stage_))
        continue;
      if ((d->set == OracleSet::A && r.played != p_->dist.c1) || (d->set == OracleSet::B && r.played != p_->dist.d1))
        return true;
    }
    return false;
  }

  std::shared_ptr<const PairParams> p_;
  Player owner_;
  std::unique_ptr<Cursor> base_;
  std::uint64_t stage_ = 0;
  bool trigger_ = false;  // P2 plays d2 at stage_ + 1
  std::vector<TestRecord> tests_;
};

inline std::pair<Strategy, Strategy> make_modified_pair(const Game& g, const Strategy& s1, const Strategy& s2,
                                                        const Schedule& schedule, const DistinguishedActions& d,
                                                        const OracleFamily& oracle, FuelPolicy fuel, bool spe) {
  if (s1.owner() != Player::P1 || s2.owner() != Player::P2)
    throw std::invalid_argument("base pair must be seated as (P1, P2)");
  d.validate_pair(g);
  schedule.validate(g);
  const Rational v1 = schedule.average_payoff(g).u1;
  const Rational mm1 = pure_minmax(g, Player::P1).value;
  if (!(v1 > mm1))
    throw PreconditionViolated("base payoff for P1 (" + to_string(v1) + ") must exceed P1's minmax (" +
                               to_string(mm1) + ")");
  auto p = std::make_shared<const PairParams>(
      PairParams{d, oracle, fuel.fuel_cap, spe, s1, s2, std::make_shared<ReferencePath>(g, s1, s2)});
  const std::string tag = spe ? "spe-pair" : "ne-pair";
  return {Strategy(tag, Player::P1, [p] { return std::make_unique<PairCursor>(p, Player::P1); }),
          Strategy(tag, Player::P2, [p] { return std::make_unique<PairCursor>(p, Player::P2); })};
}

}  // namespace detail

/// Grim variant: P2 plays d2 forever once a test-stage deviation is
/// certified at the current approximation level.
inline std::pair<Strategy, Strategy> make_ne_pair(const Game& g, const std::pair<Strategy, Strategy>& base,
                                                  const Schedule& schedule, const DistinguishedActions& d,
                                                  const OracleFamily& oracle, FuelPolicy fuel) {
  return detail::make_modified_pair(g, base.first, base.second, schedule, d, oracle, fuel, false);
}

/// Finite variant: a deviation at test stage 2^t only counts while
/// detect(t)^2 > T, so detection at T_D yields d2 over T_D+1 .. detect(t)^2.
inline std::pair<Strategy, Strategy> make_spe_pair(const Game& g, const std::pair<Strategy, Strategy>& base,
                                                   const Schedule& schedule, const DistinguishedActions& d,
                                                   const OracleFamily& oracle, FuelPolicy fuel) {
  return detail::make_modified_pair(g, base.first, base.second, schedule, d, oracle, fuel, true);
}

}  // namespace repgame

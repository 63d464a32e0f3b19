#pragma once

// Repeated play of a stage game: strategies, paths of play, and running
// (limit-of-means) averages.
//
// A Strategy is a pure map from finite histories to the owner's next action.
// It is realized through a Cursor, which folds the history one stage at a
// time; the pure map is "start a cursor, feed it the history, ask next()".
// Cursors only ever see histories by appending, so any state they keep is a
// function of the history fed so far.

#include "repgame/errors.hpp"
#include "repgame/game.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace repgame {

using History = std::vector<ActionProfile>;
using HistoryView = std::span<const ActionProfile>;

class Cursor {
 public:
  virtual ~Cursor() = default;
  /// Action for the stage after the history fed so far.
  virtual ActionIndex next() const = 0;
  virtual void advance(const ActionProfile& played) = 0;
  /// Whether next() is the output of a punishment or trigger rule.
  virtual bool punishing() const { return false; }
};

class Strategy {
 public:
  using Factory = std::function<std::unique_ptr<Cursor>()>;

  Strategy(std::string name, Player owner, Factory factory)
      : name_(std::move(name)), owner_(owner), factory_(std::move(factory)) {}

  const std::string& name() const { return name_; }
  Player owner() const { return owner_; }

  std::unique_ptr<Cursor> start() const { return factory_(); }

  std::unique_ptr<Cursor> replay(HistoryView h) const {
    auto c = start();
    for (const auto& p : h) c->advance(p);
    return c;
  }

  ActionIndex operator()(HistoryView h) const { return replay(h)->next(); }

 private:
  std::string name_;
  Player owner_;
  Factory factory_;
};

// ---------------------------------------------------------------------------
// Elementary strategies.

namespace detail {

class ConstantCursor final : public Cursor {
 public:
  explicit ConstantCursor(ActionIndex a) : a_(a) {}
  ActionIndex next() const override { return a_; }
  void advance(const ActionProfile&) override {}

 private:
  ActionIndex a_;
};

class HistoryCursor final : public Cursor {
 public:
  using Rule = std::function<ActionIndex(HistoryView)>;
  explicit HistoryCursor(std::shared_ptr<const Rule> rule) : rule_(std::move(rule)) {}
  ActionIndex next() const override { return (*rule_)(history_); }
  void advance(const ActionProfile& p) override { history_.push_back(p); }

 private:
  std::shared_ptr<const Rule> rule_;
  History history_;
};

class OverrideCursor final : public Cursor {
 public:
  OverrideCursor(std::unique_ptr<Cursor> inner, std::shared_ptr<const std::map<std::uint64_t, ActionIndex>> forced)
      : inner_(std::move(inner)), forced_(std::move(forced)) {}
  ActionIndex next() const override {
    auto it = forced_->find(stage_ + 1);
    return it != forced_->end() ? it->second : inner_->next();
  }
  bool punishing() const override { return !forced_->contains(stage_ + 1) && inner_->punishing(); }
  void advance(const ActionProfile& p) override {
    inner_->advance(p);
    ++stage_;
  }

 private:
  std::unique_ptr<Cursor> inner_;
  std::shared_ptr<const std::map<std::uint64_t, ActionIndex>> forced_;
  std::uint64_t stage_ = 0;
};

}  // namespace detail

inline Strategy constant_strategy(Player owner, ActionIndex a, std::string name = {}) {
  if (name.empty()) name = "const:" + std::to_string(a);
  return Strategy(std::move(name), owner, [a] { return std::make_unique<detail::ConstantCursor>(a); });
}

/// Strategy given directly as a function of the full history. Re-evaluates
/// the function every stage, so it is quadratic over a run; meant for tests
/// and small adversaries.
inline Strategy history_strategy(Player owner, std::string name, std::function<ActionIndex(HistoryView)> rule) {
  auto shared = std::make_shared<const detail::HistoryCursor::Rule>(std::move(rule));
  return Strategy(std::move(name), owner, [shared] { return std::make_unique<detail::HistoryCursor>(shared); });
}

/// Plays `inner` except at the listed stages (1-based), where the given
/// action is forced. The inner strategy still observes the real history.
inline Strategy with_forced_actions(const Strategy& inner, std::map<std::uint64_t, ActionIndex> forced) {
  auto table = std::make_shared<const std::map<std::uint64_t, ActionIndex>>(std::move(forced));
  return Strategy(inner.name() + "+forced", inner.owner(),
                  [inner, table] { return std::make_unique<detail::OverrideCursor>(inner.start(), table); });
}

// ---------------------------------------------------------------------------
// Paths of play.

struct StageRecord {
  std::uint64_t stage = 0;  // 1-based
  ActionProfile profile;
  Rational u1, u2;
  Rational avg1, avg2;  // running averages over stages 1..stage
  bool punishing1 = false;
  bool punishing2 = false;

  const Rational& payoff(Player p) const { return p == Player::P1 ? u1 : u2; }
  const Rational& average(Player p) const { return p == Player::P1 ? avg1 : avg2; }
  bool punishing(Player p) const { return p == Player::P1 ? punishing1 : punishing2; }
};

class PathTrace {
 public:
  explicit PathTrace(std::vector<StageRecord> stages) : stages_(std::move(stages)) {}

  std::uint64_t horizon() const { return stages_.size(); }
  const StageRecord& at(std::uint64_t t) const {
    if (t < 1 || t > stages_.size()) throw std::out_of_range("stage " + std::to_string(t) + " outside trace");
    return stages_[t - 1];
  }
  const std::vector<StageRecord>& stages() const { return stages_; }

  History history() const {
    History h;
    h.reserve(stages_.size());
    for (const auto& r : stages_) h.push_back(r.profile);
    return h;
  }

 private:
  std::vector<StageRecord> stages_;
};

inline PathTrace run(const Game& game, const Strategy& s1, const Strategy& s2, std::uint64_t horizon) {
  if (horizon < 1) throw std::invalid_argument("horizon must be at least 1");
  if (s1.owner() != Player::P1 || s2.owner() != Player::P2)
    throw std::invalid_argument("run: strategies must be seated as (P1, P2)");
  auto c1 = s1.start();
  auto c2 = s2.start();
  std::vector<StageRecord> out;
  out.reserve(horizon);
  Rational sum1 = 0, sum2 = 0;
  for (std::uint64_t t = 1; t <= horizon; ++t) {
    ActionProfile a{c1->next(), c2->next()};
    if (a.a1 >= game.num_actions(Player::P1))
      throw StrategyFault(t, Player::P1, "action index " + std::to_string(a.a1) + " out of range");
    if (a.a2 >= game.num_actions(Player::P2))
      throw StrategyFault(t, Player::P2, "action index " + std::to_string(a.a2) + " out of range");
    StageRecord r;
    r.stage = t;
    r.profile = a;
    r.punishing1 = c1->punishing();
    r.punishing2 = c2->punishing();
    const PayoffPair& u = game.payoff(a);
    r.u1 = u.u1;
    r.u2 = u.u2;
    sum1 += u.u1;
    sum2 += u.u2;
    r.avg1 = sum1 / t;
    r.avg2 = sum2 / t;
    out.push_back(std::move(r));
    c1->advance(a);
    c2->advance(a);
  }
  return PathTrace(std::move(out));
}

inline Rational running_average(const PathTrace& trace, Player p, std::uint64_t t) { return trace.at(t).average(p); }

/// min over t in (burn_in, horizon] of the running average: a finite,
/// pessimistic stand-in for the liminf that ignores the first burn_in stages
/// as candidate minima.
inline Rational liminf_estimate(const PathTrace& trace, Player p, std::uint64_t burn_in) {
  if (burn_in >= trace.horizon())
    throw std::invalid_argument("burn-in " + std::to_string(burn_in) + " must be below the horizon " +
                                std::to_string(trace.horizon()));
  Rational m = trace.at(burn_in + 1).average(p);
  for (std::uint64_t t = burn_in + 2; t <= trace.horizon(); ++t) m = std::min(m, trace.at(t).average(p));
  return m;
}

/// Average payoff over stages (from, to], both 0 <= from < to <= horizon.
inline Rational window_average(const PathTrace& trace, Player p, std::uint64_t from, std::uint64_t to) {
  if (from >= to || to > trace.horizon()) throw std::invalid_argument("window_average: bad window");
  Rational total = trace.at(to).average(p) * to;
  if (from > 0) total -= trace.at(from).average(p) * from;
  return total / (to - from);
}

inline void write_trace_csv(std::ostream& out, const Game& game, const PathTrace& trace) {
  out << "stage,a1,a2,u1,u2,avg1,avg2,u1_dec,u2_dec,avg1_dec,avg2_dec\n";
  for (const auto& r : trace.stages()) {
    out << r.stage << ',' << game.action_name(Player::P1, r.profile.a1) << ','
        << game.action_name(Player::P2, r.profile.a2) << ',' << to_string(r.u1) << ',' << to_string(r.u2) << ','
        << to_string(r.avg1) << ',' << to_string(r.avg2) << ',' << format_decimal(r.u1) << ','
        << format_decimal(r.u2) << ',' << format_decimal(r.avg1) << ',' << format_decimal(r.avg2) << '\n';
  }
}

}  // namespace repgame

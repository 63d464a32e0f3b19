#pragma once

// Periodic action plans: within each period of length gamma, play entry k's
// profile for its repetition count, entries in list order.

#include "repgame/game.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace repgame {

struct ScheduleEntry {
  ActionProfile profile;
  std::uint64_t repetitions = 0;

  friend bool operator==(const ScheduleEntry&, const ScheduleEntry&) = default;
};

class Schedule {
 public:
  /// Zero-repetition entries are kept (they carry a weight of 0) but never
  /// played.
  explicit Schedule(std::vector<ScheduleEntry> entries) : entries_(std::move(entries)) {
    for (const auto& e : entries_) period_ += e.repetitions;
    if (period_ == 0) throw std::invalid_argument("schedule period must be positive");
  }

  static Schedule constant(ActionProfile a) { return Schedule({{a, 1}}); }

  std::uint64_t period() const { return period_; }
  const std::vector<ScheduleEntry>& entries() const { return entries_; }

  /// Profile prescribed at 1-based stage s.
  ActionProfile at_stage(std::uint64_t s) const {
    if (s == 0) throw std::out_of_range("stages are 1-based");
    std::uint64_t pos = (s - 1) % period_;
    for (const auto& e : entries_) {
      if (pos < e.repetitions) return e.profile;
      pos -= e.repetitions;
    }
    throw std::logic_error("schedule positions exhausted");  // unreachable
  }

  void validate(const Game& g) const {
    for (const auto& e : entries_)
      if (!g.valid(e.profile)) throw InvalidProfile("schedule entry outside the game's action sets");
  }

  /// Per-period average payoff, i.e. the limit-of-means payoff of following
  /// the schedule forever.
  PayoffPair average_payoff(const Game& g) const {
    Rational u1 = 0, u2 = 0;
    for (const auto& e : entries_) {
      const PayoffPair& u = g.payoff(e.profile);
      u1 += u.u1 * e.repetitions;
      u2 += u.u2 * e.repetitions;
    }
    return {u1 / period_, u2 / period_};
  }

  friend bool operator==(const Schedule&, const Schedule&) = default;

 private:
  std::vector<ScheduleEntry> entries_;
  std::uint64_t period_ = 0;
};

}  // namespace repgame

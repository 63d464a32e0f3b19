#pragma once

// Decidable approximations of the recursively inseparable pair
//
//   A = { i : machine i halts on input i with output 0 }
//   B = { i : machine i halts on input i with output != 0 }
//
// A_n (resp. B_n) holds the i <= n whose machine halts within n - i steps on
// input i with output 0 (resp. != 0). detect(i) is the least n with i in
// A_n or B_n, i.e. i + (halting step count). Every query is bounded; the
// true sets are never enumerated.

#include "repgame/errors.hpp"
#include "repgame/turing.hpp"

#include <cstdint>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace repgame {

enum class OracleSet { A, B };

struct Detection {
  std::uint64_t level = 0;  // least n with i in A_n or B_n
  OracleSet set = OracleSet::A;

  friend bool operator==(const Detection&, const Detection&) = default;
};

/// Finite explicit numbering: listed indices run their program, every other
/// index diverges.
using Registry = std::map<std::uint64_t, tm::MachineProgram>;

class OracleFamily {
 public:
  static OracleFamily builtin() { return OracleFamily(std::nullopt); }
  static OracleFamily registry(Registry machines) { return OracleFamily(std::move(machines)); }

  bool is_registry() const { return impl_->registry.has_value(); }
  const Registry& registry_machines() const {
    if (!impl_->registry) throw std::logic_error("builtin numbering has no registry");
    return *impl_->registry;
  }

  /// The program behind index i, or nullopt when i diverges by declaration
  /// (registry miss, or i == 0).
  std::optional<tm::MachineProgram> machine(std::uint64_t i) const {
    if (i == 0) return std::nullopt;
    if (impl_->registry) {
      auto it = impl_->registry->find(i);
      if (it == impl_->registry->end()) return std::nullopt;
      return it->second;
    }
    return tm::decode(i);
  }

  bool in_A_n(std::uint64_t i, std::uint64_t n) const { return member(i, n, OracleSet::A); }
  bool in_B_n(std::uint64_t i, std::uint64_t n) const { return member(i, n, OracleSet::B); }

  /// Least m <= cap with i in A_m or B_m; nullopt if none.
  std::optional<Detection> detect(std::uint64_t i, std::uint64_t cap) const {
    if (i == 0 || cap <= i) return std::nullopt;
    auto h = halting(i, cap - i);
    if (!h) return std::nullopt;
    return Detection{i + h->steps, h->zero_output ? OracleSet::A : OracleSet::B};
  }

  /// True when index i can be shown never to enter A or B.
  bool never_detected(std::uint64_t i) const {
    std::lock_guard lock(impl_->mutex);
    return probe(i).never;
  }

 private:
  struct Halt {
    std::uint64_t steps;
    bool zero_output;
  };

  struct Probe {
    std::optional<tm::Simulator> sim;
    bool never = false;
    std::optional<Halt> result;
  };

  struct Impl {
    std::optional<Registry> registry;
    mutable std::mutex mutex;
    std::map<std::uint64_t, Probe> probes;
  };

  explicit OracleFamily(std::optional<Registry> reg) : impl_(std::make_shared<Impl>()) {
    impl_->registry = std::move(reg);
  }

  bool member(std::uint64_t i, std::uint64_t n, OracleSet s) const {
    if (i == 0 || i > n) return false;
    auto h = halting(i, n - i);
    return h && (h->zero_output == (s == OracleSet::A));
  }

  Probe& probe(std::uint64_t i) const {
    auto [it, fresh] = impl_->probes.try_emplace(i);
    Probe& p = it->second;
    if (fresh) {
      auto program = machine(i);
      if (!program || !tm::can_halt(*program))
        p.never = true;
      else
        p.sim.emplace(std::move(*program), i);
    }
    return p;
  }

  // Halting record of machine i on input i if it halts within `budget` steps.
  std::optional<Halt> halting(std::uint64_t i, std::uint64_t budget) const {
    std::lock_guard lock(impl_->mutex);
    Probe& p = probe(i);
    if (p.never) return std::nullopt;
    if (!p.result) {
      p.sim->run_until(budget);
      if (p.sim->halted()) {
        p.result = Halt{p.sim->steps(), p.sim->output() == 0};
        p.sim.reset();
      }
    }
    if (p.result && p.result->steps <= budget) return p.result;
    return std::nullopt;
  }

  std::shared_ptr<Impl> impl_;
};

/// All memberships for 1 <= i <= n_max and n <= n_max, computed with one
/// simulation per index rather than one per (i, n) query.
class MembershipTable {
 public:
  MembershipTable(const OracleFamily& oracle, std::uint64_t n_max) : n_max_(n_max), rows_(n_max + 1) {
    for (std::uint64_t i = 1; i <= n_max; ++i) {
      auto program = oracle.machine(i);
      if (!program) continue;
      auto out = tm::simulate_bounded(*program, i, n_max - i);
      if (out.halted()) rows_[i] = Detection{i + out.steps_used, out.output == 0 ? OracleSet::A : OracleSet::B};
    }
  }

  std::uint64_t n_max() const { return n_max_; }
  const std::optional<Detection>& row(std::uint64_t i) const { return rows_.at(i); }

  bool in_A_n(std::uint64_t i, std::uint64_t n) const { return in(i, n, OracleSet::A); }
  bool in_B_n(std::uint64_t i, std::uint64_t n) const { return in(i, n, OracleSet::B); }

 private:
  bool in(std::uint64_t i, std::uint64_t n, OracleSet s) const {
    if (i == 0 || i > n_max_ || n > n_max_) throw std::out_of_range("membership table query out of range");
    const auto& r = rows_[i];
    return r && r->set == s && r->level <= n;
  }

  std::uint64_t n_max_;
  std::vector<std::optional<Detection>> rows_;
};

// ---------------------------------------------------------------------------
// Registry file format (see docs/registry-format.md):
//
//   # comment
//   default: diverge
//   <index>: <bit string as produced by tm::to_bits>

inline Registry parse_registry(std::istream& in) {
  Registry reg;
  int line_no = 0;
  bool saw_default = false;
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    std::string key, value, extra;
    if (!(fields >> key)) continue;
    if (!(fields >> value) || (fields >> extra)) throw ParseError(line_no, "expected '<index>: <literal>'");
    if (key.size() < 2 || key.back() != ':') throw ParseError(line_no, "missing ':' after '" + key + "'");
    key.pop_back();
    if (key == "default") {
      if (saw_default) throw ParseError(line_no, "duplicate 'default' line");
      if (value != "diverge") throw ParseError(line_no, "unsupported default '" + value + "' (only 'diverge')");
      saw_default = true;
      continue;
    }
    std::uint64_t index = 0;
    try {
      std::size_t used = 0;
      if (key.empty() || key[0] == '-' || key[0] == '+') throw std::invalid_argument(key);
      index = std::stoull(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw ParseError(line_no, "bad machine index '" + key + "'");
    }
    if (index == 0) throw ParseError(line_no, "machine indices start at 1");
    auto program = tm::from_bits(value);
    if (!program) throw ParseError(line_no, "invalid transition-table literal for index " + key);
    if (!reg.emplace(index, std::move(*program)).second)
      throw ParseError(line_no, "duplicate machine index " + key);
  }
  return reg;
}

inline Registry load_registry(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open registry file '" + path + "'");
  return parse_registry(in);
}

inline std::string format_registry(const Registry& reg) {
  std::ostringstream out;
  out << "default: diverge\n";
  for (const auto& [index, program] : reg) out << index << ": " << tm::to_bits(program) << '\n';
  return out.str();
}

/// The registry used throughout the test suites and shipped as
/// fixtures/test_registry.txt: machine 1 halts in 3 steps with output 0
/// (detect 4, in A), machine 2 halts in 1 step with non-zero output
/// (detect 3, in B), machine 3 is listed but diverges, everything else
/// diverges by default.
inline Registry standard_test_registry() {
  return Registry{
      {1, tm::halting_after(3, true)}, {2, tm::halting_after(1, false)}, {3, tm::canonical_diverging()}};
}

}  // namespace repgame

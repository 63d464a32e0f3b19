#pragma once

// Single-tape Turing machines over {0, 1, blank}, a fixed Gödel numbering,
// and step-bounded simulation.
//
// Numbering: a program with k states serializes to the bit string
//
//   1^k 0                         state count in unary
//   then for each state s = 0..k-1 and symbol 0, 1, blank:
//     next   bit_width(k) bits, MSB first; value k means HALT
//     write  2 bits: 00 -> 0, 01 -> 1, 10 -> blank
//     move   1 bit:  0 -> L, 1 -> R
//
// and the bit string w maps to the natural whose binary numeral is "1" w,
// i.e. bit strings in length-lexicographic order starting from 1 for the
// empty string. Any natural whose string is not exactly of that shape
// decodes to canonical_diverging().
//
// I/O convention: the input n is written as its binary numeral (0 is "0")
// with the head on the most significant bit and blanks elsewhere. After
// halting, the output is the binary numeral read from the leftmost non-blank
// cell up to the next blank; an all-blank tape reads as 0.

#include "repgame/rational.hpp"

#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace repgame::tm {

enum class Symbol : std::uint8_t { Zero = 0, One = 1, Blank = 2 };
enum class Move : std::uint8_t { Left = 0, Right = 1 };

inline constexpr std::uint32_t kHalt = std::numeric_limits<std::uint32_t>::max();
inline constexpr int kSymbols = 3;

struct Transition {
  std::uint32_t next = kHalt;
  Symbol write = Symbol::Blank;
  Move move = Move::Right;

  bool halts() const { return next == kHalt; }
  friend bool operator==(const Transition&, const Transition&) = default;
};

class MachineProgram {
 public:
  /// `table[state * 3 + symbol]`, symbol order 0, 1, blank.
  MachineProgram(std::uint32_t state_count, std::vector<Transition> table)
      : state_count_(state_count), table_(std::move(table)) {
    if (state_count_ == 0) throw std::invalid_argument("machine needs at least one state");
    if (table_.size() != static_cast<std::size_t>(state_count_) * kSymbols)
      throw std::invalid_argument("transition table must cover every (state, symbol) pair");
    for (const auto& t : table_)
      if (!t.halts() && t.next >= state_count_) throw std::invalid_argument("transition to unknown state");
  }

  std::uint32_t state_count() const { return state_count_; }
  const Transition& at(std::uint32_t state, Symbol s) const {
    return table_[static_cast<std::size_t>(state) * kSymbols + static_cast<std::size_t>(s)];
  }
  const std::vector<Transition>& table() const { return table_; }

  friend bool operator==(const MachineProgram&, const MachineProgram&) = default;

 private:
  std::uint32_t state_count_;
  std::vector<Transition> table_;
};

/// One state that writes blank and moves right forever.
inline MachineProgram canonical_diverging() {
  return MachineProgram(1, std::vector<Transition>(kSymbols, Transition{0, Symbol::Blank, Move::Right}));
}

struct GodelIndex {
  BigInt value;

  explicit GodelIndex(BigInt v) : value(std::move(v)) {
    if (value < 1) throw std::invalid_argument("Gödel indices start at 1");
  }
  friend bool operator==(const GodelIndex&, const GodelIndex&) = default;
};

namespace detail {

inline int next_field_width(std::uint32_t states) { return std::bit_width(states); }

inline void put_bits(std::string& out, std::uint64_t v, int width) {
  for (int b = width - 1; b >= 0; --b) out.push_back(((v >> b) & 1u) ? '1' : '0');
}

}  // namespace detail

/// The serialization underlying encode(); also the registry file literal.
inline std::string to_bits(const MachineProgram& p) {
  const std::uint32_t k = p.state_count();
  const int width = detail::next_field_width(k);
  std::string out(k, '1');
  out.push_back('0');
  for (const auto& t : p.table()) {
    detail::put_bits(out, t.halts() ? k : t.next, width);
    detail::put_bits(out, static_cast<std::uint64_t>(t.write), 2);
    detail::put_bits(out, static_cast<std::uint64_t>(t.move), 1);
  }
  return out;
}

/// Inverse of to_bits; nullopt for any string that is not a valid encoding.
inline std::optional<MachineProgram> from_bits(std::string_view bits) {
  for (char c : bits)
    if (c != '0' && c != '1') return std::nullopt;
  std::size_t k = 0;
  while (k < bits.size() && bits[k] == '1') ++k;
  if (k == 0 || k == bits.size()) return std::nullopt;
  if (k > std::numeric_limits<std::uint32_t>::max() / 2) return std::nullopt;
  const auto states = static_cast<std::uint32_t>(k);
  const int width = detail::next_field_width(states);
  const std::size_t expected = k + 1 + static_cast<std::size_t>(states) * kSymbols * (width + 3);
  if (bits.size() != expected) return std::nullopt;

  std::size_t pos = k + 1;
  auto take = [&](int n) {
    std::uint64_t v = 0;
    for (int i = 0; i < n; ++i) v = (v << 1) | static_cast<std::uint64_t>(bits[pos++] == '1');
    return v;
  };
  std::vector<Transition> table;
  table.reserve(static_cast<std::size_t>(states) * kSymbols);
  for (std::size_t i = 0; i < static_cast<std::size_t>(states) * kSymbols; ++i) {
    std::uint64_t next = take(width);
    std::uint64_t write = take(2);
    std::uint64_t move = take(1);
    if (next > states || write == 3) return std::nullopt;
    table.push_back({next == states ? kHalt : static_cast<std::uint32_t>(next), static_cast<Symbol>(write),
                     static_cast<Move>(move)});
  }
  return MachineProgram(states, std::move(table));
}

inline GodelIndex encode(const MachineProgram& p) {
  BigInt v = 1;
  for (char c : to_bits(p)) v = 2 * v + (c == '1' ? 1 : 0);
  return GodelIndex(std::move(v));
}

inline MachineProgram decode(const GodelIndex& index) {
  std::string bits;
  for (BigInt v = index.value; v > 1; v >>= 1) bits.push_back(bit_test(v, 0) ? '1' : '0');
  std::string ordered(bits.rbegin(), bits.rend());
  return from_bits(ordered).value_or(canonical_diverging());
}

inline MachineProgram decode(std::uint64_t index) { return decode(GodelIndex(BigInt(index))); }

/// False when no HALT transition is reachable from the start state, in
/// which case the machine provably never halts.
inline bool can_halt(const MachineProgram& p) {
  std::vector<bool> seen(p.state_count(), false);
  std::vector<std::uint32_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    std::uint32_t s = stack.back();
    stack.pop_back();
    for (int sym = 0; sym < kSymbols; ++sym) {
      const Transition& t = p.at(s, static_cast<Symbol>(sym));
      if (t.halts()) return true;
      if (!seen[t.next]) {
        seen[t.next] = true;
        stack.push_back(t.next);
      }
    }
  }
  return false;
}

/// Resumable execution of one machine on one input.
class Simulator {
 public:
  Simulator(MachineProgram program, std::uint64_t input) : program_(std::move(program)) {
    if (input == 0) {
      tape_.push_back(Symbol::Zero);
    } else {
      for (int b = std::bit_width(input) - 1; b >= 0; --b)
        tape_.push_back(((input >> b) & 1u) ? Symbol::One : Symbol::Zero);
    }
    head_ = 0;
  }

  /// Executes transitions until the machine halts or `total` steps have
  /// been taken overall.
  void run_until(std::uint64_t total) {
    while (!halted_ && steps_ < total) {
      Symbol& cell = tape_[head_];
      const Transition& t = program_.at(state_, cell);
      cell = t.write;
      ++steps_;
      if (t.move == Move::Right) {
        if (++head_ == tape_.size()) tape_.push_back(Symbol::Blank);
      } else if (head_ == 0) {
        grow_left();
        --head_;
      } else {
        --head_;
      }
      if (t.halts()) {
        halted_ = true;
      } else {
        state_ = t.next;
      }
    }
  }

  bool halted() const { return halted_; }
  std::uint64_t steps() const { return steps_; }
  const MachineProgram& program() const { return program_; }

  BigInt output() const {
    std::size_t i = 0;
    while (i < tape_.size() && tape_[i] == Symbol::Blank) ++i;
    BigInt v = 0;
    for (; i < tape_.size() && tape_[i] != Symbol::Blank; ++i) v = 2 * v + (tape_[i] == Symbol::One ? 1 : 0);
    return v;
  }

 private:
  void grow_left() {
    std::size_t extra = std::max<std::size_t>(tape_.size(), 16);
    tape_.insert(tape_.begin(), extra, Symbol::Blank);
    head_ += extra;
  }

  MachineProgram program_;
  std::vector<Symbol> tape_;
  std::size_t head_ = 0;
  std::uint32_t state_ = 0;
  std::uint64_t steps_ = 0;
  bool halted_ = false;
};

struct SimOutcome {
  enum class Tag { Halted, OutOfFuel };
  Tag tag = Tag::OutOfFuel;
  BigInt output;             // meaningful when Halted
  std::uint64_t steps_used = 0;

  bool halted() const { return tag == Tag::Halted; }
};

inline SimOutcome simulate_bounded(const MachineProgram& program, std::uint64_t input, std::uint64_t fuel) {
  Simulator sim(program, input);
  sim.run_until(fuel);
  if (sim.halted()) return {SimOutcome::Tag::Halted, sim.output(), sim.steps()};
  return {SimOutcome::Tag::OutOfFuel, 0, sim.steps()};
}

// ---------------------------------------------------------------------------
// Small machine builders used by registries and tests.

/// Halts after exactly `steps` transitions. With `zero_output` it erases the
/// input while walking right and writes a lone 0 (output 0 provided
/// steps >= bit length of the input). Otherwise it walks right over the
/// input unchanged and halts leaving the input numeral as the output.
inline MachineProgram halting_after(std::uint32_t steps, bool zero_output) {
  if (steps == 0) throw std::invalid_argument("halting_after: a halt takes at least one step");
  std::vector<Transition> table;
  for (std::uint32_t s = 0; s < steps; ++s) {
    const bool last = s + 1 == steps;
    for (int sym = 0; sym < kSymbols; ++sym) {
      Symbol keep = static_cast<Symbol>(sym);
      Transition t;
      if (last) {
        t = {kHalt, zero_output ? Symbol::Zero : keep, Move::Right};
      } else {
        t = {s + 1, zero_output ? Symbol::Blank : keep, Move::Right};
      }
      table.push_back(t);
    }
  }
  return MachineProgram(steps, std::move(table));
}

}  // namespace repgame::tm

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace repgame {

enum class Player { P1, P2 };

inline Player other(Player p) { return p == Player::P1 ? Player::P2 : Player::P1; }
inline const char* player_name(Player p) { return p == Player::P1 ? "P1" : "P2"; }

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidProfile : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line(line) {}
  int line;
};

/// A strategy produced an action outside its owner's action set.
struct StrategyFault : Error {
  StrategyFault(std::uint64_t stage, Player player, const std::string& detail)
      : Error("strategy fault at stage " + std::to_string(stage) + " (" + player_name(player) + "): " + detail),
        stage(stage),
        player(player) {}
  std::uint64_t stage;
  Player player;
};

struct PreconditionViolated : Error {
  using Error::Error;
};

/// Raised when a construction needs a game that is non-trivial for P1.
struct NotNonTrivial : Error {
  using Error::Error;
};

}  // namespace repgame

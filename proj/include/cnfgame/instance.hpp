#pragma once

#include <vector>

#include "cnfgame/cnf.hpp"

namespace cnfgame {

// A CNF together with its variable universe and the turn pattern. The
// universe may contain variables that never appear in the CNF. |X| parity is
// forced by the pattern: odd iff the same player moves first and last.
struct GameInstance {
  Cnf cnf;
  int universe_size = 0;
  Player first = Player::T;
  Player last = Player::F;

  friend bool operator==(const GameInstance&, const GameInstance&) = default;
};

bool parity_ok(int universe_size, Player first, Player last);

// Throws GameError unless all CNF variables fit the universe and the
// universe parity matches the pattern.
void validate_instance(const GameInstance& g);
GameInstance make_instance(Cnf cnf, int universe_size, Player first, Player last);

Player mover_at(const GameInstance& g, int moves_played);

struct Move {
  Player by = Player::T;
  int var = 0;
  int bit = 0;

  friend bool operator==(const Move&, const Move&) = default;
};

// The literal a move sets true: x for bit 1, ~x for bit 0.
inline Lit true_literal(const Move& m) { return Lit{m.var, m.bit == 0}; }

std::string to_string(const Move& m);

struct Transcript {
  GameInstance instance;
  std::vector<Move> moves;
  Player winner = Player::T;
};

// Players alternate starting with instance.first, each variable appears at
// most once, and a full transcript covers the whole universe.
void validate_transcript(const Transcript& t);

}  // namespace cnfgame

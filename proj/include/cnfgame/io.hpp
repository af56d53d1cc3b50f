#pragma once

#include <string>

#include "cnfgame/instance.hpp"

namespace cnfgame {

struct ParseError : GameError {
  int line;
  ParseError(int line, const std::string& what)
      : GameError("line " + std::to_string(line) + ": " + what), line(line) {}
};

// Instance file format (line-oriented ASCII):
//   c <comment>
//   p cnfgame <universe_size> <num_clauses> <first:T|F> <last:T|F>
//   <signed 1-indexed literals> 0        (one clause per line)
GameInstance parse_instance(const std::string& text);
std::string serialize_instance(const GameInstance& g);

// Transcript format: header "t <winner:T|F>", then one move per line:
// "<player:T|F> <signed literal assigned true>".
Transcript parse_transcript(const std::string& text, const GameInstance& g);
std::string serialize_transcript(const Transcript& t);

}  // namespace cnfgame

#include "cnfgame/instance.hpp"

namespace cnfgame {

bool parity_ok(int universe_size, Player first, Player last) {
  const bool odd = universe_size % 2 == 1;
  return odd == (first == last);
}

void validate_instance(const GameInstance& g) {
  if (g.universe_size < 0) throw GameError("negative universe size");
  if (g.cnf.max_var() >= g.universe_size)
    throw GameError("variable x" + std::to_string(g.cnf.max_var()) +
                    " outside universe of size " + std::to_string(g.universe_size));
  if (!parity_ok(g.universe_size, g.first, g.last))
    throw GameError("universe size " + std::to_string(g.universe_size) +
                    " has wrong parity for pattern " + std::string{to_char(g.first)} +
                    "..." + std::string{to_char(g.last)});
}

GameInstance make_instance(Cnf cnf, int universe_size, Player first, Player last) {
  GameInstance g{std::move(cnf), universe_size, first, last};
  validate_instance(g);
  return g;
}

Player mover_at(const GameInstance& g, int moves_played) {
  return moves_played % 2 == 0 ? g.first : other(g.first);
}

std::string to_string(const Move& m) {
  return std::string{to_char(m.by)} + ":x" + std::to_string(m.var) + "=" + std::to_string(m.bit);
}

void validate_transcript(const Transcript& t) {
  validate_instance(t.instance);
  std::vector<bool> seen(t.instance.universe_size, false);
  for (size_t i = 0; i < t.moves.size(); ++i) {
    const Move& m = t.moves[i];
    if (m.by != mover_at(t.instance, static_cast<int>(i)))
      throw GameError("move " + std::to_string(i) + " out of turn");
    if (m.var < 0 || m.var >= t.instance.universe_size)
      throw GameError("move " + std::to_string(i) + " outside universe");
    if (seen[m.var])
      throw GameError("variable x" + std::to_string(m.var) + " played twice");
    if (m.bit != 0 && m.bit != 1)
      throw GameError("move " + std::to_string(i) + " has bad bit");
    seen[m.var] = true;
  }
  if (static_cast<int>(t.moves.size()) == t.instance.universe_size) {
    for (int v = 0; v < t.instance.universe_size; ++v)
      if (!seen[v]) throw GameError("complete transcript missing x" + std::to_string(v));
  }
}

}  // namespace cnfgame

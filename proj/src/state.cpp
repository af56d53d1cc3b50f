#include "cnfgame/state.hpp"

namespace cnfgame {

XorConstraint XorConstraint::make(Lit a, Lit b) {
  if (a.var == b.var) throw GameError("xor constraint needs distinct variables");
  if (a.var > b.var) std::swap(a, b);
  if (a.neg) {
    a = a.negated();
    b = b.negated();
  }
  return XorConstraint{a, b};
}

bool XorConstraint::satisfied_by(const Assignment& a) const {
  return a.lit_true(li) != a.lit_true(lj);
}

GameState GameState::initial(GameInstance g) {
  validate_instance(g);
  GameState st;
  st.assignment = Assignment(g.universe_size);
  st.psi = g.cnf;
  for (int v = 0; v < g.universe_size; ++v) st.pool_y.insert(v);
  st.to_move = g.first;
  st.instance = std::move(g);
  return st;
}

std::optional<Move> GameState::last_move() const {
  if (moves.empty()) return std::nullopt;
  return moves.back();
}

void GameState::apply(const Move& m) {
  if (game_over()) throw GameError("move after game end");
  if (m.by != to_move)
    throw GameError("move " + to_string(m) + " out of turn");
  if (m.var < 0 || m.var >= instance.universe_size)
    throw GameError("move " + to_string(m) + " outside universe");
  if (assignment.assigned(m.var))
    throw GameError("move " + to_string(m) + " replays a variable");
  assignment.set(m.var, m.bit);
  psi = residual(psi, true_literal(m));
  pool_y.erase(m.var);
  moves.push_back(m);
  to_move = other(to_move);
}

}  // namespace cnfgame

#pragma once

#include <functional>
#include <optional>

#include "cnfgame/state.hpp"

namespace cnfgame {

struct SolveResult {
  Player winner = Player::T;
  std::optional<Move> principal_move;  // present iff the position is non-terminal
  uint64_t nodes_explored = 0;
};

struct SolveOptions {
  // Default comes from CNFGAME_SOLVE_LIMIT, else 14.
  std::optional<int> universe_limit;
  bool memoize = true;
};

int default_solve_limit();

// Winner of g under optimal play by both sides. Deterministic: moves are
// searched variables-ascending, bit 1 before 0, with early exit once the
// residual is decided.
SolveResult solve(const GameInstance& g, const SolveOptions& opts = {});

// Same, from a mid-game position. The mover is derived from the number of
// assigned variables.
SolveResult solve_position(const GameInstance& g, const Assignment& a,
                           const SolveOptions& opts = {});

struct BestResponseOptions {
  std::optional<int> universe_limit;  // default 20
  // Called on every leaf (decided or complete) with the final state; used for
  // playout audits.
  std::function<void(const GameState&)> on_leaf;
};

// Winner when fixed_player follows `fixed` and the opponent searches
// exhaustively. Only opponent turns branch, so this scales past solve().
SolveResult best_response(const GameInstance& g, const Strategy& fixed, Player fixed_player,
                          const BestResponseOptions& opts = {});

// All k-uniform CNFs with m clauses over n variables, up to clause
// reordering, wrapped with the given pattern. Stops early if yield returns
// false. Documented feasibility bounds: k <= 3, m <= 3, n <= 6.
void enumerate_instances(int k, int m, int n, Player first, Player last,
                         const std::function<bool(const GameInstance&)>& yield);

std::vector<GameInstance> enumerate_instances_vec(int k, int m, int n, Player first, Player last);

}  // namespace cnfgame

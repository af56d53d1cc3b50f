#pragma once

#include "cnfgame/instance.hpp"

namespace cnfgame {

// k-uniform CNF on k variables, one clause per subset of the variable pairs
// {x0,x1}, {x2,x3}, ...: the chosen pairs contribute (~xi | ~xi+1), the rest
// (xi | xi+1). 2^(k/2) clauses; T moves first, F moves last. Requires even k.
GameInstance build_xor_pairs(int k);

// Odd-width extension: two copies of build_xor_pairs(k-1), one widened by a
// fresh variable x_{k-1}, the other by x_k. 2^((k+1)/2) clauses over an even
// universe of k+1 variables; T first, F last. Requires odd k.
GameInstance build_odd_tf(int k);

// Fibonacci construction over universe {x0..x_{2k-2}} (just {x0} for k=0):
//   phi_0 = ()                    phi_1 = (x0) & (~x0)
//   phi_k = [C | x_{2k-3} : C in phi_{k-1}]
//         & [C | ~x_{2k-3} | x_{2k-2} : C in phi_{k-2}]
// Fib_{k+2} clauses; T moves first and last.
GameInstance build_fib_tt(int k);

// Adds a fresh variable (positively) to every clause and to the universe and
// hands the first move to F. Clause count is preserved. Requires first = T.
GameInstance add_universal_variable(const GameInstance& g);

// The first-move reduction for an F-first instance: playing l true removes
// clauses containing l, strips ~l where it occurs, and strips the
// highest-indexed literal from clauses containing neither, keeping the CNF
// uniform one width down. l's variable leaves the universe (higher indices
// shift down); T moves first in the result. Requires uniform width >= 1.
GameInstance reduce_by_first_move(const GameInstance& g, Lit l);

// Drops universe variables that never appear in the CNF, renumbering the
// rest. Fails if the pruned universe's parity no longer fits the pattern.
GameInstance compact_universe(const GameInstance& g);

long long fibonacci(int n);

}  // namespace cnfgame

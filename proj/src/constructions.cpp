#include "cnfgame/constructions.hpp"

#include <algorithm>

namespace cnfgame {

GameInstance build_xor_pairs(int k) {
  if (k < 0 || k % 2 != 0) throw GameError("xor-pairs construction needs even k >= 0");
  const int pairs = k / 2;
  Cnf cnf;
  for (long long mask = 0; mask < (1LL << pairs); ++mask) {
    std::vector<Lit> lits;
    lits.reserve(k);
    for (int p = 0; p < pairs; ++p) {
      const bool flip = (mask >> p) & 1;
      lits.push_back(Lit{2 * p, flip});
      lits.push_back(Lit{2 * p + 1, flip});
    }
    cnf.clauses.push_back(Clause(std::move(lits)));
  }
  return make_instance(std::move(cnf), k, Player::T, Player::F);
}

GameInstance build_odd_tf(int k) {
  if (k < 1 || k % 2 != 1) throw GameError("odd-tf construction needs odd k >= 1");
  const GameInstance inner = build_xor_pairs(k - 1);
  Cnf cnf;
  for (int fresh : {k - 1, k}) {
    for (const Clause& c : inner.cnf.clauses) {
      std::vector<Lit> lits = c.lits();
      lits.push_back(pos(fresh));
      cnf.clauses.push_back(Clause(std::move(lits)));
    }
  }
  return make_instance(std::move(cnf), k + 1, Player::T, Player::F);
}

namespace {

Cnf fib_cnf(int k) {
  if (k == 0) return Cnf{Clause{}};
  if (k == 1) return Cnf{Clause{pos(0)}, Clause{neg(0)}};
  const Cnf prev = fib_cnf(k - 1);
  const Cnf prev2 = fib_cnf(k - 2);
  const int spine = 2 * k - 3;
  Cnf cnf;
  for (const Clause& c : prev.clauses) {
    std::vector<Lit> lits = c.lits();
    lits.push_back(pos(spine));
    cnf.clauses.push_back(Clause(std::move(lits)));
  }
  for (const Clause& c : prev2.clauses) {
    std::vector<Lit> lits = c.lits();
    lits.push_back(neg(spine));
    lits.push_back(pos(spine + 1));
    cnf.clauses.push_back(Clause(std::move(lits)));
  }
  return cnf;
}

}  // namespace

GameInstance build_fib_tt(int k) {
  if (k < 0) throw GameError("fibonacci construction needs k >= 0");
  const int universe = k == 0 ? 1 : 2 * k - 1;
  return make_instance(fib_cnf(k), universe, Player::T, Player::T);
}

GameInstance add_universal_variable(const GameInstance& g) {
  if (g.first != Player::T) throw GameError("universal-variable extension needs a T-first instance");
  const int fresh = g.universe_size;
  Cnf cnf;
  for (const Clause& c : g.cnf.clauses) {
    std::vector<Lit> lits = c.lits();
    lits.push_back(pos(fresh));
    cnf.clauses.push_back(Clause(std::move(lits)));
  }
  return make_instance(std::move(cnf), g.universe_size + 1, Player::F, g.last);
}

GameInstance reduce_by_first_move(const GameInstance& g, Lit l) {
  if (g.first != Player::F) throw GameError("first-move reduction needs an F-first instance");
  if (g.cnf.empty()) {
    if (l.var >= g.universe_size) throw GameError("literal outside universe");
    return make_instance(Cnf{}, g.universe_size - 1, Player::T, g.last);
  }
  const int k = g.cnf.clauses.front().width();
  if (k < 1) throw GameError("first-move reduction needs uniform width >= 1");
  if (!validate_uniform(g.cnf, k).ok())
    throw GameError("first-move reduction needs a uniform CNF");
  if (l.var < 0 || l.var >= g.universe_size) throw GameError("literal outside universe");

  const Lit bar = l.negated();
  Cnf cnf;
  for (const Clause& c : g.cnf.clauses) {
    if (c.contains(l)) continue;
    std::vector<Lit> lits = c.lits();
    if (c.contains(bar)) {
      std::erase(lits, bar);
    } else {
      lits.pop_back();  // drop the highest-indexed literal
    }
    // close the gap left by the removed variable
    for (Lit& x : lits)
      if (x.var > l.var) --x.var;
    cnf.clauses.push_back(Clause(std::move(lits)));
  }
  return make_instance(std::move(cnf), g.universe_size - 1, Player::T, g.last);
}

GameInstance compact_universe(const GameInstance& g) {
  std::vector<int> remap(g.universe_size, -1);
  int next = 0;
  for (int v = 0; v < g.universe_size; ++v)
    if (g.cnf.mentions(v)) remap[v] = next++;
  if (!parity_ok(next, g.first, g.last))
    throw GameError("pruned universe of size " + std::to_string(next) +
                    " has wrong parity for pattern " + std::string{to_char(g.first)} + "..." +
                    std::string{to_char(g.last)});
  Cnf cnf;
  for (const Clause& c : g.cnf.clauses) {
    std::vector<Lit> lits;
    lits.reserve(c.lits().size());
    for (const Lit& x : c.lits()) lits.push_back(Lit{remap[x.var], x.neg});
    cnf.clauses.push_back(Clause(std::move(lits)));
  }
  return make_instance(std::move(cnf), next, g.first, g.last);
}

long long fibonacci(int n) {
  if (n < 0) throw GameError("negative fibonacci index");
  long long a = 0, b = 1;  // Fib_0 = 0, Fib_1 = 1
  for (int i = 0; i < n; ++i) {
    long long c = a + b;
    a = b;
    b = c;
  }
  return a;
}

}  // namespace cnfgame

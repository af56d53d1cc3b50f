#include "cnfgame/strategies.hpp"

#include <random>

#include "cnfgame/solver.hpp"
#include "cnfgame/zugzwang.hpp"

namespace cnfgame {

namespace {

Move require_last_by_opponent(const GameState& st, const char* who) {
  auto last = st.last_move();
  if (!last || last->by == st.to_move)
    throw GameError(std::string(who) + ": state not reachable under the pairing discipline");
  return *last;
}

int xor_partner(int var) { return var ^ 1; }

}  // namespace

Move FPairingXor::next_move(const GameState& st) const {
  if (st.instance.universe_size % 2 != 0)
    throw GameError("f-pairing: needs an even universe of paired variables");
  const Move last = require_last_by_opponent(st, "f-pairing");
  const int partner = xor_partner(last.var);
  if (st.assignment.assigned(partner))
    throw GameError("f-pairing: partner of x" + std::to_string(last.var) +
                    " already played; state not reachable under the pairing discipline");
  return Move{st.to_move, partner, last.bit};
}

Move FOddTf::next_move(const GameState& st) const {
  const int u = st.instance.universe_size;
  if (u < 2 || u % 2 != 0)
    throw GameError("f-odd: needs the odd-width extension shape");
  const Move last = require_last_by_opponent(st, "f-odd");
  const int hi1 = u - 2, hi2 = u - 1;  // the two fresh variables
  if (last.var == hi1 || last.var == hi2) {
    const int partner = last.var == hi1 ? hi2 : hi1;
    if (st.assignment.assigned(partner))
      throw GameError("f-odd: fresh pair already complete; unreachable state");
    return Move{st.to_move, partner, 0};
  }
  const int partner = xor_partner(last.var);
  if (partner >= hi1 || st.assignment.assigned(partner))
    throw GameError("f-odd: unreachable state");
  return Move{st.to_move, partner, last.bit};
}

namespace {

// Pairs of a fibonacci instance: (1,2), (3,4), ...; x0 stands alone.
int chase_partner(int var) { return var % 2 == 1 ? var + 1 : var - 1; }

Move open_fresh_pair(const GameState& st) {
  for (int lo = 1; lo + 1 < st.instance.universe_size; lo += 2) {
    if (!st.assignment.assigned(lo) && !st.assignment.assigned(lo + 1))
      return Move{st.to_move, lo, 0};
  }
  throw GameError("f-chase: no fresh pair to open; unreachable state");
}

}  // namespace

Move FChase::next_move(const GameState& st) const {
  const int u = st.instance.universe_size;
  if (u % 2 != 1) throw GameError("f-chase: needs the fibonacci instance shape");
  const Move last = require_last_by_opponent(st, "f-chase");
  if (last.var == 0) return open_fresh_pair(st);
  const int partner = chase_partner(last.var);
  // A played partner means T just closed the pair we opened earlier.
  if (st.assignment.assigned(partner)) return open_fresh_pair(st);
  return Move{st.to_move, partner, 0};
}

Lit greedy_argmax(const Cnf& psi, const std::set<int>& pool, Scheme scheme) {
  if (pool.empty()) throw GameError("greedy argmax over an empty pool");
  std::optional<Lit> best;
  Quad best_p;
  for (int v : pool) {
    for (Lit l : {pos(v), neg(v)}) {
      Quad p = literal_potential(psi, l, scheme);
      if (!best || p > best_p) {
        best = l;
        best_p = std::move(p);
      }
    }
  }
  return *best;
}

std::string TGreedy::name() const { return "t-greedy-" + to_string(scheme_); }

Move TGreedy::next_move(const GameState& st) const {
  const Lit l = greedy_argmax(st.psi, st.pool_y, scheme_);
  return Move{st.to_move, l.var, l.neg ? 0 : 1};
}

Move OptimalStrategy::next_move(const GameState& st) const {
  SolveResult res = solve_position(st.instance, st.assignment);
  if (!res.principal_move) throw GameError("optimal: no move in a terminal position");
  return Move{st.to_move, res.principal_move->var, res.principal_move->bit};
}

namespace {

uint64_t bounded_draw(std::mt19937_64& rng, uint64_t n) {
  const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % n;
}

}  // namespace

Move RandomStrategy::next_move(const GameState& st) const {
  // Deterministic in (seed, history): mix the transcript into the seed.
  uint64_t h = seed_ ^ 0x9e3779b97f4a7c15ULL;
  for (const Move& m : st.moves) {
    h ^= static_cast<uint64_t>(m.var * 4 + m.bit * 2 + (m.by == Player::T ? 1 : 0)) +
         0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  std::mt19937_64 rng(h);
  const std::vector<int> open = st.assignment.unassigned();
  if (open.empty()) throw GameError("random: no move in a terminal position");
  const int var = open[bounded_draw(rng, open.size())];
  const int bit = static_cast<int>(bounded_draw(rng, 2));
  return Move{st.to_move, var, bit};
}

std::unique_ptr<Strategy> make_strategy(const std::string& name) {
  if (name == "f-pairing") return std::make_unique<FPairingXor>();
  if (name == "f-odd") return std::make_unique<FOddTf>();
  if (name == "f-chase") return std::make_unique<FChase>();
  if (name == "t-greedy-sqrt2") return std::make_unique<TGreedy>(Scheme::Sqrt2);
  if (name == "t-greedy-parity") return std::make_unique<TGreedy>(Scheme::Parity);
  if (name == "t-zugzwang") return std::make_unique<TZugzwang>();
  if (name == "optimal") return std::make_unique<OptimalStrategy>();
  if (name.rfind("random:", 0) == 0) {
    const std::string seed_str = name.substr(7);
    try {
      return std::make_unique<RandomStrategy>(std::stoull(seed_str));
    } catch (const std::exception&) {
      throw GameError("bad random seed '" + seed_str + "'");
    }
  }
  throw GameError("unknown strategy '" + name + "'");
}

}  // namespace cnfgame

#include "cnfgame/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_map>

#include "cnfgame/io.hpp"

namespace cnfgame {

int default_solve_limit() {
  if (const char* env = std::getenv("CNFGAME_SOLVE_LIMIT")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0 && v <= 31) return static_cast<int>(v);
    throw GameError("CNFGAME_SOLVE_LIMIT must be an integer in [1,31]");
  }
  return 14;
}

namespace {

class Searcher {
 public:
  Searcher(const GameInstance& g, bool memoize) : g_(g), memoize_(memoize) {
    assign_.assign(g.universe_size, -1);
  }

  void preload(const Assignment& a) {
    for (int v = 0; v < g_.universe_size; ++v)
      if (a.assigned(v)) {
        assign_[v] = static_cast<int8_t>(a.value(v));
        ++assigned_count_;
      }
  }

  Eval eval() const {
    bool undecided = false;
    for (const Clause& c : g_.cnf.clauses) {
      bool sat = false, open = false;
      for (const Lit& l : c.lits()) {
        const int8_t v = assign_[l.var];
        if (v < 0)
          open = true;
        else if ((v == 1) != l.neg)
          sat = true;
      }
      if (sat) continue;
      if (!open) return Eval::Falsified;
      undecided = true;
    }
    return undecided ? Eval::Undetermined : Eval::Satisfied;
  }

  Player search() {
    ++nodes_;
    switch (eval()) {
      case Eval::Satisfied: return Player::T;
      case Eval::Falsified: return Player::F;
      case Eval::Undetermined: break;
    }
    const uint64_t k = memoize_ ? key() : 0;
    if (memoize_) {
      auto it = memo_.find(k);
      if (it != memo_.end()) return static_cast<Player>(it->second);
    }
    const Player mover = mover_at(g_, assigned_count_);
    Player result = other(mover);
    for (int v = 0; v < g_.universe_size && result != mover; ++v) {
      if (assign_[v] >= 0) continue;
      for (int bit : {1, 0}) {
        assign_[v] = static_cast<int8_t>(bit);
        ++assigned_count_;
        const Player w = search();
        assign_[v] = -1;
        --assigned_count_;
        if (w == mover) {
          result = mover;
          break;
        }
      }
    }
    if (memoize_) memo_.emplace(k, static_cast<int8_t>(result));
    return result;
  }

  SolveResult run() {
    SolveResult res;
    ++nodes_;
    switch (eval()) {
      case Eval::Satisfied: res.winner = Player::T; res.nodes_explored = nodes_; return res;
      case Eval::Falsified: res.winner = Player::F; res.nodes_explored = nodes_; return res;
      case Eval::Undetermined: break;
    }
    const Player mover = mover_at(g_, assigned_count_);
    std::optional<Move> best;
    Player result = other(mover);
    for (int v = 0; v < g_.universe_size && result != mover; ++v) {
      if (assign_[v] >= 0) continue;
      for (int bit : {1, 0}) {
        assign_[v] = static_cast<int8_t>(bit);
        ++assigned_count_;
        const Player w = search();
        assign_[v] = -1;
        --assigned_count_;
        if (!best) best = Move{mover, v, bit};
        if (w == mover) {
          result = mover;
          best = Move{mover, v, bit};
          break;
        }
      }
    }
    res.winner = result;
    res.principal_move = best;
    res.nodes_explored = nodes_;
    return res;
  }

 private:
  uint64_t key() const {
    // two bits per variable: 0 unset, 1 false, 2 true
    uint64_t k = 0;
    for (int v = 0; v < g_.universe_size; ++v)
      k |= static_cast<uint64_t>(assign_[v] + 1) << (2 * v);
    return k;
  }

  const GameInstance& g_;
  bool memoize_;
  std::vector<int8_t> assign_;
  int assigned_count_ = 0;
  uint64_t nodes_ = 0;
  std::unordered_map<uint64_t, int8_t> memo_;
};

}  // namespace

SolveResult solve(const GameInstance& g, const SolveOptions& opts) {
  return solve_position(g, Assignment(g.universe_size), opts);
}

SolveResult solve_position(const GameInstance& g, const Assignment& a, const SolveOptions& opts) {
  validate_instance(g);
  const int limit = opts.universe_limit.value_or(default_solve_limit());
  if (limit > 31) throw GameError("solver limit capped at 31 variables");
  if (g.universe_size > limit)
    throw GameError("universe size " + std::to_string(g.universe_size) +
                    " exceeds solver limit " + std::to_string(limit));
  if (a.universe_size() != g.universe_size) throw GameError("assignment universe mismatch");
  Searcher s(g, opts.memoize);
  s.preload(a);
  return s.run();
}

namespace {

Player best_response_rec(GameState& st, const Strategy& fixed, Player fixed_player,
                         uint64_t& nodes, const BestResponseOptions& opts) {
  ++nodes;
  switch (eval_residual(st.psi)) {
    case Eval::Satisfied:
      if (opts.on_leaf) opts.on_leaf(st);
      return Player::T;
    case Eval::Falsified:
      if (opts.on_leaf) opts.on_leaf(st);
      return Player::F;
    case Eval::Undetermined: break;
  }
  if (st.game_over())
    throw GameError("complete game left undecided");  // unreachable: totals decide

  if (st.to_move == fixed_player) {
    Move m = fixed.next_move(st);
    try {
      st.apply(m);
    } catch (const GameError& e) {
      throw GameError(std::string("fixed strategy ") + fixed.name() + " made an illegal move (" +
                      e.what() + ") after: " + serialize_transcript(Transcript{
                          st.instance, st.moves, Player::T}));
    }
    return best_response_rec(st, fixed, fixed_player, nodes, opts);
  }

  const Player mover = st.to_move;
  for (int v = 0; v < st.instance.universe_size; ++v) {
    if (st.assignment.assigned(v)) continue;
    for (int bit : {1, 0}) {
      GameState child = st;
      child.apply(Move{mover, v, bit});
      if (best_response_rec(child, fixed, fixed_player, nodes, opts) == mover) return mover;
    }
  }
  return other(mover);
}

}  // namespace

SolveResult best_response(const GameInstance& g, const Strategy& fixed, Player fixed_player,
                          const BestResponseOptions& opts) {
  validate_instance(g);
  const int limit = opts.universe_limit.value_or(20);
  if (g.universe_size > limit)
    throw GameError("universe size " + std::to_string(g.universe_size) +
                    " exceeds best-response limit " + std::to_string(limit));

  SolveResult res;
  GameState root = GameState::initial(g);
  res.nodes_explored = 0;

  switch (eval_residual(root.psi)) {
    case Eval::Satisfied: res.winner = Player::T; return res;
    case Eval::Falsified: res.winner = Player::F; return res;
    case Eval::Undetermined: break;
  }

  if (root.to_move == fixed_player) {
    Move m = fixed.next_move(root);
    res.principal_move = m;
    GameState child = root;
    child.apply(m);
    res.winner = best_response_rec(child, fixed, fixed_player, res.nodes_explored, opts);
    return res;
  }

  const Player mover = root.to_move;
  Player result = other(mover);
  std::optional<Move> best;
  for (int v = 0; v < g.universe_size && result != mover; ++v) {
    for (int bit : {1, 0}) {
      GameState child = root;
      child.apply(Move{mover, v, bit});
      if (!best) best = Move{mover, v, bit};
      if (best_response_rec(child, fixed, fixed_player, res.nodes_explored, opts) == mover) {
        result = mover;
        best = Move{mover, v, bit};
        break;
      }
    }
  }
  res.winner = result;
  res.principal_move = best;
  return res;
}

namespace {

void k_subsets(int n, int k, std::vector<int>& cur, int from,
               const std::function<bool(const std::vector<int>&)>& yield, bool& go) {
  if (!go) return;
  if (static_cast<int>(cur.size()) == k) {
    go = yield(cur);
    return;
  }
  for (int v = from; v < n && go; ++v) {
    cur.push_back(v);
    k_subsets(n, k, cur, v + 1, yield, go);
    cur.pop_back();
  }
}

}  // namespace

void enumerate_instances(int k, int m, int n, Player first, Player last,
                         const std::function<bool(const GameInstance&)>& yield) {
  if (k < 0 || m < 0 || n < 0) throw GameError("enumeration bounds must be non-negative");
  if (k > 3 || m > 3 || n > 6)
    throw GameError("enumeration bounds exceeded (documented limits: k<=3, m<=3, n<=6)");
  if (n < k) throw GameError("universe smaller than clause width");
  if (!parity_ok(n, first, last)) throw GameError("universe parity does not fit pattern");

  std::vector<Clause> all;
  std::vector<int> cur;
  bool go = true;
  k_subsets(n, k, cur, 0,
            [&](const std::vector<int>& vars) {
              for (int mask = 0; mask < (1 << k); ++mask) {
                std::vector<Lit> lits;
                for (int i = 0; i < k; ++i) lits.push_back(Lit{vars[i], ((mask >> i) & 1) != 0});
                all.push_back(Clause(std::move(lits)));
              }
              return true;
            },
            go);

  std::sort(all.begin(), all.end());

  // m-combinations of distinct clauses, indices ascending, so each CNF comes
  // out in canonical clause order.
  std::vector<int> pick;
  bool keep = true;
  std::function<void(int)> rec = [&](int from) {
    if (!keep) return;
    if (static_cast<int>(pick.size()) == m) {
      Cnf cnf;
      for (int idx : pick) cnf.clauses.push_back(all[idx]);
      keep = yield(make_instance(std::move(cnf), n, first, last));
      return;
    }
    for (int i = from; i < static_cast<int>(all.size()) && keep; ++i) {
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
}

std::vector<GameInstance> enumerate_instances_vec(int k, int m, int n, Player first, Player last) {
  std::vector<GameInstance> out;
  enumerate_instances(k, m, n, first, last, [&](const GameInstance& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

}  // namespace cnfgame

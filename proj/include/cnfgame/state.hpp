#pragma once

#include <memory>
#include <optional>
#include <set>

#include "cnfgame/instance.hpp"
#include "cnfgame/potential.hpp"

namespace cnfgame {

// (li xor lj) stored so that the four equivalent writings collapse to a
// single form: the lower-indexed variable comes first and carries positive
// polarity.
struct XorConstraint {
  Lit li, lj;

  static XorConstraint make(Lit a, Lit b);
  bool mentions(int var) const { return li.var == var || lj.var == var; }
  bool satisfied_by(const Assignment& a) const;

  friend bool operator==(const XorConstraint&, const XorConstraint&) = default;
};

// Live position as the match runner sees it: psi is the plain residual of the
// instance CNF under the assignment, pool_y the unplayed variables. pool_z
// and zeta stay empty here; a strategy that sets pairs aside keeps its own
// modified view and exposes it through its audit hooks.
struct GameState {
  GameInstance instance;
  Assignment assignment;
  Cnf psi;
  std::set<int> pool_y;
  std::set<int> pool_z;
  std::vector<XorConstraint> zeta;
  Player to_move = Player::T;
  std::vector<Move> moves;

  static GameState initial(GameInstance g);

  bool game_over() const { return assignment.total(); }
  std::optional<Move> last_move() const;

  // Validates legality (right player, fresh variable, bit in range) and
  // updates assignment, psi and pool_y.
  void apply(const Move& m);
};

class Strategy {
 public:
  virtual ~Strategy() = default;

  virtual std::string name() const = 0;

  // st.to_move is this strategy's side; must return a legal move.
  virtual Move next_move(const GameState& st) const = 0;

  // Scheme under which full T-then-F rounds may never raise p(psi) when this
  // strategy plays T; nullopt when no such guarantee is claimed.
  virtual std::optional<Scheme> monotone_scheme() const { return std::nullopt; }

  // True for the strategy that runs the pair-reservation engine and is
  // subject to its invariant audits.
  virtual bool runs_zugzwang_engine() const { return false; }
};

}  // namespace cnfgame

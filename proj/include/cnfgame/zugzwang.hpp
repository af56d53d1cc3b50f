#pragma once

#include <optional>
#include <utility>

#include "cnfgame/state.hpp"

namespace cnfgame {

struct AuditError : GameError {
  using GameError::GameError;
};

// First literal pair over distinct pool variables satisfying
//   a + e >= 5/4*(b + d) + 1/2*(c + f + g + h)
// with respect to (psi, li, lj). Variable pairs are scanned in ascending
// (i, j) order, polarities in order (+,+), (+,-), (-,+); the (-,-) case
// mirrors (+,+) under complementing both literals and is skipped.
std::optional<std::pair<Lit, Lit>> find_zugzwang(const Cnf& psi, const std::set<int>& pool_y,
                                                 Scheme scheme = Scheme::ThreeHalves);

// Pair-reservation bookkeeping: psi as modified by reservations, the normal
// pool Y, the reserved pool Z, and the xor constraints over Z.
struct ZugzwangState {
  Cnf psi;
  std::set<int> pool_y;
  std::set<int> pool_z;
  std::vector<XorConstraint> zeta;
};

// Reserves (li, lj): records the constraint, moves both variables from Y to
// Z, drops every psi clause containing both li and lj or both ~li and ~lj,
// and strips the four literals from the remaining clauses. Throws AuditError
// if p(psi) increased; that signals an implementation bug, not a game
// condition.
void apply_zugzwang(ZugzwangState& zs, Lit li, Lit lj, Scheme scheme = Scheme::ThreeHalves);

struct AuditFailure {
  int round = 0;
  std::string invariant;
  std::string detail;
};

struct ZugzwangAuditOptions {
  // Check the satisfaction-transfer invariant exhaustively when |Y u Z| is
  // at most this.
  int exhaustive_transfer_limit = 12;
};

struct ZugzwangAuditReport {
  // p(psi) at the initial boundary and after each completed outer round.
  std::vector<std::pair<int, Quad>> boundary_potentials;
  std::vector<AuditFailure> failures;
};

// Replays the pair-reservation strategy's bookkeeping over a (possibly
// partial) playout of g and verifies, at every outer-loop boundary:
//   (1) Y and Z partition the unplayed variables, psi's variables lie in Y,
//       zeta's variables are exactly Z, and |Z| is even;
//   (2) any assignment satisfying psi and zeta satisfies the original CNF
//       together with the moves played (exhaustive under the option limit);
//   (3) p(psi) < 1, whenever the initial potential was below 1;
// plus the per-step potential drops: every reservation and every completed
// normal round may not raise p(psi).
ZugzwangAuditReport audit_zugzwang_playout(const GameInstance& g, const std::vector<Move>& moves,
                                           const ZugzwangAuditOptions& opts = {});

// T's strategy for T-first/T-last instances: reserve zugzwang pairs while
// they exist, then play the literal maximizing p(psi,l) - p(psi,~l); answer
// any F move into Z immediately by completing the reserved pair unequal.
class TZugzwang : public Strategy {
 public:
  std::string name() const override { return "t-zugzwang"; }
  Move next_move(const GameState& st) const override;
  std::optional<Scheme> monotone_scheme() const override { return Scheme::ThreeHalves; }
  bool runs_zugzwang_engine() const override { return true; }
};

}  // namespace cnfgame

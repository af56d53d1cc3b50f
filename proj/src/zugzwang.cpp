#include "cnfgame/zugzwang.hpp"

#include <algorithm>

namespace cnfgame {

std::optional<std::pair<Lit, Lit>> find_zugzwang(const Cnf& psi, const std::set<int>& pool_y,
                                                 Scheme scheme) {
  static constexpr std::pair<bool, bool> kPolarities[] = {
      {false, false}, {false, true}, {true, false}};
  const Quad five_quarters{Rational(5, 4)};
  const Quad half{Rational(1, 2)};
  for (auto it = pool_y.begin(); it != pool_y.end(); ++it) {
    for (auto jt = std::next(it); jt != pool_y.end(); ++jt) {
      for (auto [ni, nj] : kPolarities) {
        const Lit li{*it, ni};
        const Lit lj{*jt, nj};
        const OctSplit o = oct_split(psi, li, lj, scheme);
        const Quad lhs = o.a + o.e;
        const Quad rhs = five_quarters * (o.b + o.d) + half * (o.c + o.f + o.g + o.h);
        if (lhs >= rhs) return std::make_pair(li, lj);
      }
    }
  }
  return std::nullopt;
}

void apply_zugzwang(ZugzwangState& zs, Lit li, Lit lj, Scheme scheme) {
  if (li.var == lj.var) throw GameError("zugzwang pair needs distinct variables");
  if (!zs.pool_y.count(li.var) || !zs.pool_y.count(lj.var))
    throw GameError("zugzwang pair outside the normal pool");

  const Quad before = cnf_potential(zs.psi, scheme);
  const Lit li_bar = li.negated(), lj_bar = lj.negated();
  Cnf next;
  for (const Clause& c : zs.psi.clauses) {
    if ((c.contains(li) && c.contains(lj)) || (c.contains(li_bar) && c.contains(lj_bar)))
      continue;  // satisfied in advance by the future (li xor lj) move
    std::vector<Lit> kept;
    kept.reserve(c.lits().size());
    for (const Lit& x : c.lits())
      if (x.var != li.var && x.var != lj.var) kept.push_back(x);
    next.clauses.push_back(Clause(std::move(kept)));
  }
  zs.psi = std::move(next);
  zs.zeta.push_back(XorConstraint::make(li, lj));
  zs.pool_y.erase(li.var);
  zs.pool_y.erase(lj.var);
  zs.pool_z.insert(li.var);
  zs.pool_z.insert(lj.var);

  const Quad after = cnf_potential(zs.psi, scheme);
  if (after > before)
    throw AuditError("reservation raised p(psi) from " + before.str() + " to " + after.str());
}

namespace {

// Replays the strategy's bookkeeping over a move sequence. The state advances
// from the moves as actually played, so it stays coherent even when a foreign
// T move disagrees with the policy; audits flag the disagreement.
class Engine {
 public:
  Engine(const GameInstance& g, Scheme scheme, ZugzwangAuditReport* report,
         const ZugzwangAuditOptions& opts)
      : g_(g), scheme_(scheme), report_(report), opts_(opts), played_(g.universe_size) {
    zs_.psi = g.cnf;
    for (int v = 0; v < g.universe_size; ++v) zs_.pool_y.insert(v);
    audit_drops_ = cnf_potential(g.cnf, scheme_) < Quad(1);
    boundary_audit();
  }

  void feed(const Move& m) {
    if (m.by == Player::T)
      feed_t(m);
    else
      feed_f(m);
    played_.set(m.var, m.bit);
    if (report_ && played_.total() && m.by == Player::T) {
      ++round_;
      boundary_audit();
    }
  }

  Move next_t_move() {
    if (pending_) return zugzwang_response(*pending_);
    sweep();
    return normal_move();
  }

 private:
  void fail(const std::string& invariant, const std::string& detail) {
    if (report_) report_->failures.push_back(AuditFailure{round_, invariant, detail});
  }

  void sweep() {
    while (auto pair = find_zugzwang(zs_.psi, zs_.pool_y, scheme_)) {
      try {
        apply_zugzwang(zs_, pair->first, pair->second, scheme_);
      } catch (const AuditError& e) {
        if (!report_) throw;
        fail("prop13-reservation-drop", e.what());
      }
    }
  }

  Move normal_move() const {
    if (zs_.pool_y.empty()) throw GameError("t-zugzwang: normal pool empty on T's turn");
    std::optional<Lit> best;
    Quad best_score;
    for (int v : zs_.pool_y) {
      for (Lit l : {pos(v), neg(v)}) {
        Quad score = literal_potential(zs_.psi, l, scheme_) -
                     literal_potential(zs_.psi, l.negated(), scheme_);
        if (!best || score > best_score) {
          best = l;
          best_score = std::move(score);
        }
      }
    }
    return Move{Player::T, best->var, best->neg ? 0 : 1};
  }

  Move zugzwang_response(Lit f_lit) const {
    auto it = std::find_if(zs_.zeta.begin(), zs_.zeta.end(),
                           [&](const XorConstraint& c) { return c.mentions(f_lit.var); });
    if (it == zs_.zeta.end())
      throw GameError("t-zugzwang: reserved variable has no constraint");
    Lit a = it->li, b = it->lj;
    if (a.var != f_lit.var) std::swap(a, b);
    // F made a's value (f_lit == a); T gives b the opposite value.
    const int a_val = f_lit == a ? 1 : 0;
    const int b_val = 1 - a_val;
    return Move{Player::T, b.var, b.neg ? 1 - b_val : b_val};
  }

  void feed_t(const Move& m) {
    if (pending_) {
      if (report_) {
        const Move want = zugzwang_response(*pending_);
        if (!(m == want))
          fail("t-zugzwang-policy", "played " + to_string(m) + ", policy wants " + to_string(want));
      }
      auto it = std::find_if(zs_.zeta.begin(), zs_.zeta.end(),
                             [&](const XorConstraint& c) { return c.mentions(pending_->var); });
      if (it != zs_.zeta.end()) {
        zs_.pool_z.erase(it->li.var);
        zs_.pool_z.erase(it->lj.var);
        zs_.zeta.erase(it);
      }
      pending_.reset();
      return;
    }
    sweep();
    round_start_ = cnf_potential(zs_.psi, scheme_);
    have_round_start_ = true;
    if (report_) {
      const Move want = normal_move();
      if (!(m == want))
        fail("t-normal-policy", "played " + to_string(m) + ", policy wants " + to_string(want));
    }
    zs_.psi = residual(zs_.psi, true_literal(m));
    zs_.pool_y.erase(m.var);
  }

  void feed_f(const Move& m) {
    if (zs_.pool_z.count(m.var)) {
      pending_ = true_literal(m);
      return;
    }
    zs_.psi = residual(zs_.psi, true_literal(m));
    zs_.pool_y.erase(m.var);
    ++round_;
    if (report_ && have_round_start_) {
      const Quad now = cnf_potential(zs_.psi, scheme_);
      if (now > round_start_)
        fail("prop14-round-drop",
             "p(psi) rose from " + round_start_.str() + " to " + now.str() + " over a round");
    }
    boundary_audit();
  }

  void boundary_audit() {
    if (!report_) return;
    const Quad p = cnf_potential(zs_.psi, scheme_);
    report_->boundary_potentials.emplace_back(round_, p);

    // (1) pools partition the unplayed variables; psi lives in Y, zeta is Z.
    std::set<int> unplayed;
    for (int v = 0; v < g_.universe_size; ++v)
      if (!played_.assigned(v)) unplayed.insert(v);
    std::set<int> pooled = zs_.pool_y;
    bool pools_ok = true;
    for (int v : zs_.pool_z) {
      if (!pooled.insert(v).second) {
        fail("inv1-pools", "Y and Z overlap at x" + std::to_string(v));
        pools_ok = false;
      }
    }
    if (pooled != unplayed) {
      fail("inv1-pools", "Y u Z differs from the unplayed set");
      pools_ok = false;
    }
    for (const Clause& c : zs_.psi.clauses)
      for (const Lit& l : c.lits())
        if (!zs_.pool_y.count(l.var))
          fail("inv1-psi-vars", "psi mentions x" + std::to_string(l.var) + " outside Y");
    std::set<int> zeta_vars;
    for (const XorConstraint& c : zs_.zeta) {
      zeta_vars.insert(c.li.var);
      zeta_vars.insert(c.lj.var);
    }
    if (zeta_vars != zs_.pool_z) fail("inv1-zeta-vars", "zeta variables differ from Z");
    if (zs_.pool_z.size() % 2 != 0) fail("inv1-z-even", "|Z| is odd");

    // (2) satisfying psi and zeta must satisfy the original CNF.
    std::vector<int> open(pooled.begin(), pooled.end());
    if (static_cast<int>(open.size()) <= opts_.exhaustive_transfer_limit) {
      for (uint64_t mask = 0; mask < (uint64_t{1} << open.size()); ++mask) {
        Assignment full = played_;
        for (size_t i = 0; i < open.size(); ++i)
          full.set(open[i], static_cast<int>((mask >> i) & 1));
        bool zeta_sat = true;
        for (const XorConstraint& c : zs_.zeta)
          if (!c.satisfied_by(full)) {
            zeta_sat = false;
            break;
          }
        if (!zeta_sat) continue;
        if (evaluate(zs_.psi, full) != Eval::Satisfied) continue;
        if (evaluate(g_.cnf, full) != Eval::Satisfied) {
          fail("inv2-transfer", "psi and zeta satisfied but the original CNF is not");
          break;
        }
      }
    }

    // (3) p(psi) < 1 whenever the initial potential was below one.
    if (audit_drops_ && !(p < Quad(1)))
      fail("inv3-potential-below-one", "p(psi) = " + p.str());
  }

  const GameInstance& g_;
  Scheme scheme_;
  ZugzwangAuditReport* report_;
  ZugzwangAuditOptions opts_;
  ZugzwangState zs_;
  Assignment played_;
  std::optional<Lit> pending_;
  int round_ = 0;
  bool have_round_start_ = false;
  Quad round_start_;
  bool audit_drops_ = false;
};

}  // namespace

ZugzwangAuditReport audit_zugzwang_playout(const GameInstance& g, const std::vector<Move>& moves,
                                           const ZugzwangAuditOptions& opts) {
  ZugzwangAuditReport report;
  Engine engine(g, Scheme::ThreeHalves, &report, opts);
  for (const Move& m : moves) engine.feed(m);
  return report;
}

Move TZugzwang::next_move(const GameState& st) const {
  if (st.instance.first != Player::T || st.instance.last != Player::T)
    throw GameError("t-zugzwang: needs a T-first, T-last instance");
  if (st.to_move != Player::T) throw GameError("t-zugzwang: not T's turn");
  Engine engine(st.instance, Scheme::ThreeHalves, nullptr, {});
  for (const Move& m : st.moves) engine.feed(m);
  return engine.next_t_move();
}

}  // namespace cnfgame

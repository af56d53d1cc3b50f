#include "cnfgame/cnf.hpp"

#include <algorithm>

namespace cnfgame {

Player player_from_char(char c) {
  if (c == 'T') return Player::T;
  if (c == 'F') return Player::F;
  throw GameError(std::string("unknown player '") + c + "'");
}

std::string to_string(Lit l) {
  return (l.neg ? "~x" : "x") + std::to_string(l.var);
}

Clause::Clause(std::vector<Lit> lits) : lits_(std::move(lits)) {
  std::sort(lits_.begin(), lits_.end());
  for (size_t i = 0; i + 1 < lits_.size(); ++i) {
    if (lits_[i].var == lits_[i + 1].var)
      throw GameError("duplicate variable x" + std::to_string(lits_[i].var) + " in clause");
  }
  for (const Lit& l : lits_) {
    if (l.var < 0) throw GameError("negative variable index in clause");
  }
}

Clause::Clause(std::initializer_list<Lit> lits) : Clause(std::vector<Lit>(lits)) {}

bool Clause::contains(Lit l) const {
  auto it = std::lower_bound(lits_.begin(), lits_.end(), Lit{l.var, false});
  return it != lits_.end() && it->var == l.var && it->neg == l.neg;
}

bool Clause::mentions(int var) const {
  auto it = std::lower_bound(lits_.begin(), lits_.end(), Lit{var, false});
  return it != lits_.end() && it->var == var;
}

int Clause::max_var() const { return lits_.empty() ? -1 : lits_.back().var; }

std::string to_string(const Clause& c) {
  std::string out = "(";
  for (size_t i = 0; i < c.lits().size(); ++i) {
    if (i) out += " | ";
    out += to_string(c.lits()[i]);
  }
  return out + ")";
}

int Cnf::max_var() const {
  int m = -1;
  for (const Clause& c : clauses) m = std::max(m, c.max_var());
  return m;
}

bool Cnf::mentions(int var) const {
  for (const Clause& c : clauses)
    if (c.mentions(var)) return true;
  return false;
}

std::string to_string(const Cnf& phi) {
  if (phi.empty()) return "<empty cnf>";
  std::string out;
  for (int i = 0; i < phi.size(); ++i) {
    if (i) out += " & ";
    out += to_string(phi.clauses[i]);
  }
  return out;
}

Assignment::Assignment(int universe_size) : v_(universe_size, int8_t{-1}) {
  if (universe_size < 0) throw GameError("negative universe size");
}

bool Assignment::assigned(int var) const {
  if (var < 0 || var >= universe_size())
    throw GameError("variable x" + std::to_string(var) + " outside universe");
  return v_[var] >= 0;
}

int Assignment::value(int var) const {
  if (!assigned(var)) throw GameError("variable x" + std::to_string(var) + " unassigned");
  return v_[var];
}

void Assignment::set(int var, int bit) {
  if (bit != 0 && bit != 1) throw GameError("bit must be 0 or 1");
  if (assigned(var)) throw GameError("variable x" + std::to_string(var) + " already assigned");
  v_[var] = static_cast<int8_t>(bit);
  ++count_;
}

std::vector<int> Assignment::unassigned() const {
  std::vector<int> out;
  for (int v = 0; v < universe_size(); ++v)
    if (v_[v] < 0) out.push_back(v);
  return out;
}

Cnf residual(const Cnf& phi, Lit l) {
  Cnf out;
  out.clauses.reserve(phi.clauses.size());
  const Lit bar = l.negated();
  for (const Clause& c : phi.clauses) {
    if (c.contains(l)) continue;
    if (!c.contains(bar)) {
      out.clauses.push_back(c);
      continue;
    }
    std::vector<Lit> kept;
    kept.reserve(c.lits().size() - 1);
    for (const Lit& x : c.lits())
      if (x != bar) kept.push_back(x);
    out.clauses.push_back(Clause(std::move(kept)));
  }
  return out;
}

Eval evaluate(const Clause& c, const Assignment& a) {
  bool open = false;
  for (const Lit& l : c.lits()) {
    if (a.lit_true(l)) return Eval::Satisfied;
    if (!a.assigned(l.var)) open = true;
  }
  return open ? Eval::Undetermined : Eval::Falsified;
}

Eval evaluate(const Cnf& phi, const Assignment& a) {
  bool undecided = false;
  for (const Clause& c : phi.clauses) {
    switch (evaluate(c, a)) {
      case Eval::Falsified: return Eval::Falsified;
      case Eval::Undetermined: undecided = true; break;
      case Eval::Satisfied: break;
    }
  }
  return undecided ? Eval::Undetermined : Eval::Satisfied;
}

Eval eval_residual(const Cnf& psi) {
  if (psi.empty()) return Eval::Satisfied;
  for (const Clause& c : psi.clauses)
    if (c.width() == 0) return Eval::Falsified;
  return Eval::Undetermined;
}

UniformReport validate_uniform(const Cnf& phi, int k) {
  UniformReport rep;
  rep.k = k;
  for (int i = 0; i < phi.size(); ++i)
    if (phi.clauses[i].width() != k) rep.offending.push_back(i);
  return rep;
}

Cnf dedupe(const Cnf& phi) {
  Cnf out;
  for (const Clause& c : phi.clauses) {
    if (std::find(out.clauses.begin(), out.clauses.end(), c) == out.clauses.end())
      out.clauses.push_back(c);
  }
  return out;
}

Cnf canonical(const Cnf& phi) {
  Cnf out = phi;
  std::sort(out.clauses.begin(), out.clauses.end());
  return out;
}

}  // namespace cnfgame

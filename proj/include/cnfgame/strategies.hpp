#pragma once

#include <memory>

#include "cnfgame/state.hpp"

namespace cnfgame {

// F on a xor-pairs instance: answer T's move by giving the partner variable
// the same bit, keeping every pair equal.
class FPairingXor : public Strategy {
 public:
  std::string name() const override { return "f-pairing"; }
  Move next_move(const GameState& st) const override;
};

// F on an odd-width extension instance: if T touched one of the two fresh
// variables, zero the other; otherwise play the inner pairing rule.
class FOddTf : public Strategy {
 public:
  std::string name() const override { return "f-odd"; }
  Move next_move(const GameState& st) const override;
};

// F on a fibonacci instance: zero the partner of any pair T touches; after T
// plays x0 (or closes the pair F opened), open the lowest untouched pair by
// zeroing its lower variable.
class FChase : public Strategy {
 public:
  std::string name() const override { return "f-chase"; }
  Move next_move(const GameState& st) const override;
};

// T plays l = 1 for the literal l of an unplayed variable maximizing
// p(psi, l); ties go to the lowest variable, then the positive literal.
class TGreedy : public Strategy {
 public:
  explicit TGreedy(Scheme scheme) : scheme_(scheme) {}
  std::string name() const override;
  Move next_move(const GameState& st) const override;
  std::optional<Scheme> monotone_scheme() const override { return scheme_; }

 private:
  Scheme scheme_;
};

// Solver-backed perfect play for either side.
class OptimalStrategy : public Strategy {
 public:
  std::string name() const override { return "optimal"; }
  Move next_move(const GameState& st) const override;
};

// Seeded uniform choice over (unplayed variable, bit); a deterministic
// function of the seed and the move history.
class RandomStrategy : public Strategy {
 public:
  explicit RandomStrategy(uint64_t seed) : seed_(seed) {}
  std::string name() const override { return "random:" + std::to_string(seed_); }
  Move next_move(const GameState& st) const override;

 private:
  uint64_t seed_;
};

// The greedy argmax: best literal over the pool by p(psi, l), ties broken by
// lowest variable then positive polarity.
Lit greedy_argmax(const Cnf& psi, const std::set<int>& pool, Scheme scheme);

// Names: f-pairing, f-odd, f-chase, t-greedy-sqrt2, t-greedy-parity,
// t-zugzwang, optimal, random:<seed>.
std::unique_ptr<Strategy> make_strategy(const std::string& name);

}  // namespace cnfgame

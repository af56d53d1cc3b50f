#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace cnfgame {

enum class Player : uint8_t { T, F };

inline Player other(Player p) { return p == Player::T ? Player::F : Player::T; }
inline char to_char(Player p) { return p == Player::T ? 'T' : 'F'; }
Player player_from_char(char c);

// Contract violations: malformed clauses, illegal moves, bad bounds.
struct GameError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A variable index with a polarity. Variables are 0-indexed internally;
// the file format uses signed 1-indexed integers.
struct Lit {
  int var = 0;
  bool neg = false;

  Lit negated() const { return Lit{var, !neg}; }
  friend auto operator<=>(const Lit&, const Lit&) = default;
};

inline Lit pos(int var) { return Lit{var, false}; }
inline Lit neg(int var) { return Lit{var, true}; }

std::string to_string(Lit l);

// Literals sorted by variable index, indices distinct. The empty clause is
// representable: it arises in residuals and is falsified by everything.
class Clause {
 public:
  Clause() = default;
  explicit Clause(std::vector<Lit> lits);
  Clause(std::initializer_list<Lit> lits);

  const std::vector<Lit>& lits() const { return lits_; }
  int width() const { return static_cast<int>(lits_.size()); }
  bool contains(Lit l) const;
  bool mentions(int var) const;
  int max_var() const;  // -1 when empty

  friend auto operator<=>(const Clause&, const Clause&) = default;

 private:
  std::vector<Lit> lits_;
};

std::string to_string(const Clause& c);

// An ordered multiset of clauses. Duplicates are kept; clause counts are the
// quantity of interest, so nothing collapses silently.
struct Cnf {
  std::vector<Clause> clauses;

  Cnf() = default;
  Cnf(std::initializer_list<Clause> cs) : clauses(cs) {}

  int size() const { return static_cast<int>(clauses.size()); }
  bool empty() const { return clauses.empty(); }
  int max_var() const;  // -1 when no variables occur
  bool mentions(int var) const;

  friend auto operator<=>(const Cnf&, const Cnf&) = default;
};

std::string to_string(const Cnf& phi);

// Partial assignment over a fixed universe; a variable, once set, stays set.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(int universe_size);

  int universe_size() const { return static_cast<int>(v_.size()); }
  bool assigned(int var) const;
  int value(int var) const;  // requires assigned(var)
  void set(int var, int bit);
  bool total() const { return count_ == universe_size(); }
  int num_assigned() const { return count_; }
  std::vector<int> unassigned() const;

  bool lit_true(Lit l) const { return assigned(l.var) && value(l.var) == (l.neg ? 0 : 1); }
  bool lit_false(Lit l) const { return assigned(l.var) && value(l.var) == (l.neg ? 1 : 0); }

 private:
  std::vector<int8_t> v_;
  int count_ = 0;
};

enum class Eval : uint8_t { Satisfied, Falsified, Undetermined };

// phi[l=1]: clauses containing l are dropped, ~l is stripped from the rest.
// Multiplicity of surviving clauses is preserved.
Cnf residual(const Cnf& phi, Lit l);

Eval evaluate(const Clause& c, const Assignment& a);
Eval evaluate(const Cnf& phi, const Assignment& a);

// Residual CNFs carry their own evaluation: empty means satisfied, an empty
// clause means falsified.
Eval eval_residual(const Cnf& psi);

struct UniformReport {
  int k = 0;
  std::vector<int> offending;  // indices of clauses whose width != k
  bool ok() const { return offending.empty(); }
};

UniformReport validate_uniform(const Cnf& phi, int k);

// Keeps the first occurrence of each clause value.
Cnf dedupe(const Cnf& phi);

// Clauses sorted lexicographically; the canonical multiset order.
Cnf canonical(const Cnf& phi);

}  // namespace cnfgame

#pragma once

#include <optional>

#include "cnfgame/cnf.hpp"
#include "cnfgame/quad.hpp"

namespace cnfgame {

// Clause weight schemes. Sqrt2: sqrt2^-|C|. Parity: sqrt2^-|C| for even |C|
// and (2/3)*sqrt2^-(|C|-1) for odd |C|. ThreeHalves: (2/3)^|C|.
enum class Scheme : uint8_t { Sqrt2, Parity, ThreeHalves };

std::string to_string(Scheme s);
std::optional<Scheme> scheme_from_string(const std::string& name);

Quad clause_potential(int width, Scheme s);
Quad clause_potential(const Clause& c, Scheme s);

// p(phi): sum over the clause multiset, duplicates counted.
Quad cnf_potential(const Cnf& phi, Scheme s);

// p(phi, l): total weight of clauses containing l itself (not ~l).
Quad literal_potential(const Cnf& phi, Lit l, Scheme s);

// The eight clause-group weights for a literal pair: rows by li / ~li /
// neither, columns by lj / ~lj / neither (the neither-neither cell is not
// tracked). Row sums a+b+c = p(li), d+e+f = p(~li); column sums a+d+g =
// p(lj), b+e+h = p(~lj).
struct OctSplit {
  Quad a, b, c, d, e, f, g, h;
};

// Requires li and lj over distinct variables.
OctSplit oct_split(const Cnf& phi, Lit li, Lit lj, Scheme s);

}  // namespace cnfgame

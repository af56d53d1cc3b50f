#include "cnfgame/potential.hpp"

namespace cnfgame {

std::string to_string(Scheme s) {
  switch (s) {
    case Scheme::Sqrt2: return "sqrt2";
    case Scheme::Parity: return "parity";
    case Scheme::ThreeHalves: return "three-halves";
  }
  throw GameError("bad scheme");
}

std::optional<Scheme> scheme_from_string(const std::string& name) {
  if (name == "sqrt2") return Scheme::Sqrt2;
  if (name == "parity") return Scheme::Parity;
  if (name == "three-halves") return Scheme::ThreeHalves;
  return std::nullopt;
}

Quad clause_potential(int width, Scheme s) {
  if (width < 0) throw GameError("negative clause width");
  switch (s) {
    case Scheme::Sqrt2:
      return Quad::sqrt2_pow(-width);
    case Scheme::Parity:
      if (width % 2 == 0) return Quad::sqrt2_pow(-width);
      // odd width: (2/3) * sqrt2^-(width-1), a rational since width-1 is even
      return Quad(Rational(2, 3)) * Quad::sqrt2_pow(-(width - 1));
    case Scheme::ThreeHalves:
      return Quad(rational_pow(Rational(2, 3), width));
  }
  throw GameError("bad scheme");
}

Quad clause_potential(const Clause& c, Scheme s) { return clause_potential(c.width(), s); }

Quad cnf_potential(const Cnf& phi, Scheme s) {
  Quad total;
  for (const Clause& c : phi.clauses) total += clause_potential(c, s);
  return total;
}

Quad literal_potential(const Cnf& phi, Lit l, Scheme s) {
  Quad total;
  for (const Clause& c : phi.clauses)
    if (c.contains(l)) total += clause_potential(c, s);
  return total;
}

OctSplit oct_split(const Cnf& phi, Lit li, Lit lj, Scheme s) {
  if (li.var == lj.var) throw GameError("oct_split needs literals over distinct variables");
  OctSplit out;
  for (const Clause& c : phi.clauses) {
    const Quad p = clause_potential(c, s);
    const bool has_i = c.contains(li);
    const bool has_ibar = c.contains(li.negated());
    const bool has_j = c.contains(lj);
    const bool has_jbar = c.contains(lj.negated());
    if (has_i) {
      if (has_j)
        out.a += p;
      else if (has_jbar)
        out.b += p;
      else
        out.c += p;
    } else if (has_ibar) {
      if (has_j)
        out.d += p;
      else if (has_jbar)
        out.e += p;
      else
        out.f += p;
    } else {
      if (has_j)
        out.g += p;
      else if (has_jbar)
        out.h += p;
    }
  }
  return out;
}

}  // namespace cnfgame

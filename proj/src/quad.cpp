#include "cnfgame/quad.hpp"

namespace cnfgame {

Rational rational_pow(const Rational& base, int exp) {
  if (exp == 0) return Rational(1);
  if (exp < 0) {
    if (base == 0) throw GameError("zero to negative power");
    return Rational(1) / rational_pow(base, -exp);
  }
  BigInt n = boost::multiprecision::pow(boost::multiprecision::numerator(base),
                                        static_cast<unsigned>(exp));
  BigInt d = boost::multiprecision::pow(boost::multiprecision::denominator(base),
                                        static_cast<unsigned>(exp));
  return Rational(n, d);
}

std::string rational_str(const Rational& q) {
  if (boost::multiprecision::denominator(q) == 1)
    return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" +
         boost::multiprecision::denominator(q).str();
}

Quad Quad::sqrt2_pow(int e) {
  // Even exponents land in the rationals, odd ones carry a sqrt2 factor.
  if (e % 2 == 0) return Quad(rational_pow(Rational(2), e / 2));
  int half = (e - 1) / 2;  // e = 2*half + 1, exact for negative e too
  return Quad(Rational(0), rational_pow(Rational(2), half));
}

int Quad::sign() const {
  const int sr = r_ == 0 ? 0 : (r_ > 0 ? 1 : -1);
  const int ss = s_ == 0 ? 0 : (s_ > 0 ? 1 : -1);
  if (ss == 0) return sr;
  if (sr == 0) return ss;
  if (sr == ss) return sr;
  // Components disagree; |r| vs |s|*sqrt2 decides, i.e. r^2 vs 2*s^2.
  const Rational rr = r_ * r_;
  const Rational ss2 = 2 * s_ * s_;
  if (rr == ss2)
    throw GameError("quad invariant broken: r^2 == 2*s^2 with nonzero parts");
  const bool rational_part_dominates = rr > ss2;
  return rational_part_dominates ? sr : ss;
}

Quad& Quad::operator+=(const Quad& o) {
  r_ += o.r_;
  s_ += o.s_;
  return *this;
}

Quad& Quad::operator-=(const Quad& o) {
  r_ -= o.r_;
  s_ -= o.s_;
  return *this;
}

Quad& Quad::operator*=(const Quad& o) {
  // (r1 + s1*sqrt2)(r2 + s2*sqrt2) = r1*r2 + 2*s1*s2 + (r1*s2 + s1*r2)*sqrt2
  Rational r = r_ * o.r_ + 2 * s_ * o.s_;
  Rational s = r_ * o.s_ + s_ * o.r_;
  r_ = std::move(r);
  s_ = std::move(s);
  return *this;
}

std::string Quad::str() const {
  if (s_ == 0) return rational_str(r_);
  std::string st = (s_ == 1) ? "sqrt2" : (s_ == -1 ? "-sqrt2" : rational_str(s_) + "*sqrt2");
  if (r_ == 0) return st;
  if (s_ > 0) return rational_str(r_) + " + " + (s_ == 1 ? "sqrt2" : rational_str(s_) + "*sqrt2");
  return rational_str(r_) + " - " + (s_ == -1 ? "sqrt2" : rational_str(-s_) + "*sqrt2");
}

}  // namespace cnfgame

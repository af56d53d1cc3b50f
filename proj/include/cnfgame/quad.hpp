#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <utility>

#include "cnfgame/cnf.hpp"

namespace cnfgame {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Rational rational_pow(const Rational& base, int exp);
std::string rational_str(const Rational& q);

// Exact value r + s*sqrt(2) with rational components. The representation is
// unique since sqrt(2) is irrational, and sign evaluation never goes through
// floating point: opposite-sign components are settled by comparing r^2
// against 2*s^2.
class Quad {
 public:
  Quad() = default;
  Quad(int v) : r_(v) {}
  Quad(Rational r) : r_(std::move(r)) {}
  Quad(Rational r, Rational s) : r_(std::move(r)), s_(std::move(s)) {}

  static Quad sqrt2() { return Quad(Rational(0), Rational(1)); }
  static Quad sqrt2_pow(int e);  // sqrt(2)^e for any integer e

  const Rational& r() const { return r_; }
  const Rational& s() const { return s_; }

  int sign() const;
  bool is_zero() const { return r_ == 0 && s_ == 0; }

  Quad operator-() const { return Quad(-r_, -s_); }
  Quad& operator+=(const Quad& o);
  Quad& operator-=(const Quad& o);
  Quad& operator*=(const Quad& o);

  friend Quad operator+(Quad a, const Quad& b) { return a += b; }
  friend Quad operator-(Quad a, const Quad& b) { return a -= b; }
  friend Quad operator*(Quad a, const Quad& b) { return a *= b; }

  friend bool operator==(const Quad& a, const Quad& b) { return a.r_ == b.r_ && a.s_ == b.s_; }
  friend bool operator!=(const Quad& a, const Quad& b) { return !(a == b); }
  friend bool operator<(const Quad& a, const Quad& b) { return (a - b).sign() < 0; }
  friend bool operator>(const Quad& a, const Quad& b) { return (a - b).sign() > 0; }
  friend bool operator<=(const Quad& a, const Quad& b) { return (a - b).sign() <= 0; }
  friend bool operator>=(const Quad& a, const Quad& b) { return (a - b).sign() >= 0; }

  // "r + s*sqrt2" with both rationals in lowest terms.
  std::string str() const;

 private:
  Rational r_, s_;
};

}  // namespace cnfgame

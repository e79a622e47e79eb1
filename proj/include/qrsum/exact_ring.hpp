#pragma once

// Exact arithmetic in Q[w]/(w^2 - D). With D = q the element w plays sqrt(q);
// with D = -q it plays i*sqrt(q). Coefficients are GMP rationals, so nothing
// here ever rounds.

#include <string>

#include "qrsum/bigint.hpp"

namespace qrsum {

struct RingTag {
  Integer D;

  friend bool operator==(const RingTag& x, const RingTag& y) { return x.D == y.D; }
};

class QuadExact {
 public:
  QuadExact(Rational a, Rational b, RingTag tag);

  static QuadExact rational(const Rational& a, const RingTag& tag) { return {a, 0, tag}; }
  static QuadExact omega(const RingTag& tag) { return {0, 1, tag}; }

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  const RingTag& tag() const noexcept { return tag_; }

  bool is_rational() const { return sgn(b_) == 0; }

  QuadExact& operator+=(const QuadExact& y);
  QuadExact& operator-=(const QuadExact& y);
  QuadExact& operator*=(const QuadExact& y);
  QuadExact& operator+=(const Rational& c);
  QuadExact& operator-=(const Rational& c);
  QuadExact& operator*=(const Rational& c);
  QuadExact& operator/=(const Rational& c);

  friend bool operator==(const QuadExact& x, const QuadExact& y) {
    return x.tag_ == y.tag_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  Rational a_;
  Rational b_;
  RingTag tag_;
};

inline QuadExact operator-(QuadExact x) {
  x *= Rational(-1);
  return x;
}
inline QuadExact operator+(QuadExact x, const QuadExact& y) { return x += y; }
inline QuadExact operator-(QuadExact x, const QuadExact& y) { return x -= y; }
inline QuadExact operator*(QuadExact x, const QuadExact& y) { return x *= y; }
inline QuadExact operator+(QuadExact x, const Rational& c) { return x += c; }
inline QuadExact operator-(QuadExact x, const Rational& c) { return x -= c; }
inline QuadExact operator*(QuadExact x, const Rational& c) { return x *= c; }
inline QuadExact operator/(QuadExact x, const Rational& c) { return x /= c; }
inline QuadExact operator+(const Rational& c, QuadExact x) { return x += c; }
inline QuadExact operator-(const Rational& c, const QuadExact& x) { return -x + c; }
inline QuadExact operator*(const Rational& c, QuadExact x) { return x *= c; }

QuadExact pow(const QuadExact& x, unsigned long n);

// a - b w
QuadExact conj(const QuadExact& x);

// x * conj(x) = a^2 - D b^2
Rational norm(const QuadExact& x);

// x (x-1) ... (x-k+1); 1 for k = 0.
QuadExact falling_factorial(const QuadExact& x, unsigned long k);

// (x)_n / n!
QuadExact binomial_general(const QuadExact& x, unsigned long n);

// The single exit from ring values to counts: throws NonIntegerResult unless
// the w-part vanishes and the rational part has denominator 1.
Integer assert_integer(const QuadExact& x);

// "a + b·ω [ω²=D]", with zero parts and unit coefficients elided.
std::string to_string(const QuadExact& x);

}  // namespace qrsum

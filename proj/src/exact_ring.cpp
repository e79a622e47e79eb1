#include "qrsum/exact_ring.hpp"

#include "qrsum/error.hpp"

namespace qrsum {

namespace {

void require_same_tag(const QuadExact& x, const QuadExact& y) {
  if (!(x.tag() == y.tag())) {
    throw Error(ErrorCode::TagMismatch, "w^2 = " + to_decimal(x.tag().D) + " vs w^2 = " +
                                            to_decimal(y.tag().D));
  }
}

}  // namespace

QuadExact::QuadExact(Rational a, Rational b, RingTag tag)
    : a_(std::move(a)), b_(std::move(b)), tag_(std::move(tag)) {
  a_.canonicalize();
  b_.canonicalize();
}

QuadExact& QuadExact::operator+=(const QuadExact& y) {
  require_same_tag(*this, y);
  a_ += y.a_;
  b_ += y.b_;
  return *this;
}

QuadExact& QuadExact::operator-=(const QuadExact& y) {
  require_same_tag(*this, y);
  a_ -= y.a_;
  b_ -= y.b_;
  return *this;
}

QuadExact& QuadExact::operator*=(const QuadExact& y) {
  require_same_tag(*this, y);
  // (a + b w)(c + d w) = (ac + bd D) + (ad + bc) w
  Rational a = a_ * y.a_ + b_ * y.b_ * Rational(tag_.D);
  Rational b = a_ * y.b_ + b_ * y.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadExact& QuadExact::operator+=(const Rational& c) {
  a_ += c;
  return *this;
}

QuadExact& QuadExact::operator-=(const Rational& c) {
  a_ -= c;
  return *this;
}

QuadExact& QuadExact::operator*=(const Rational& c) {
  a_ *= c;
  b_ *= c;
  return *this;
}

QuadExact& QuadExact::operator/=(const Rational& c) {
  if (sgn(c) == 0) throw Error(ErrorCode::DivisionByZero, "ring value divided by zero");
  a_ /= c;
  b_ /= c;
  return *this;
}

QuadExact pow(const QuadExact& x, unsigned long n) {
  QuadExact result = QuadExact::rational(1, x.tag());
  QuadExact base = x;
  while (n) {
    if (n & 1UL) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

QuadExact conj(const QuadExact& x) { return {x.a(), -x.b(), x.tag()}; }

Rational norm(const QuadExact& x) {
  return x.a() * x.a() - Rational(x.tag().D) * x.b() * x.b();
}

QuadExact falling_factorial(const QuadExact& x, unsigned long k) {
  QuadExact result = QuadExact::rational(1, x.tag());
  for (unsigned long j = 0; j < k; ++j) result *= x - Rational(Integer(j));
  return result;
}

QuadExact binomial_general(const QuadExact& x, unsigned long n) {
  return falling_factorial(x, n) / Rational(factorial(n));
}

Integer assert_integer(const QuadExact& x) {
  if (!x.is_rational() || x.a().get_den() != 1) {
    throw Error(ErrorCode::NonIntegerResult, to_string(x));
  }
  return x.a().get_num();
}

std::string to_string(const QuadExact& x) {
  std::string out;
  const bool has_a = sgn(x.a()) != 0;
  const bool has_b = sgn(x.b()) != 0;
  if (has_a || !has_b) out = x.a().get_str();
  if (has_b) {
    Rational mag = abs(x.b());
    std::string coeff = mag == 1 ? "" : mag.get_str() + "·";
    if (has_a) {
      out += sgn(x.b()) < 0 ? " - " : " + ";
    } else if (sgn(x.b()) < 0) {
      out += "-";
    }
    out += coeff + "ω";
  }
  return out + " [ω²=" + to_decimal(x.tag().D) + "]";
}

}  // namespace qrsum

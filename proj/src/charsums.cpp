#include "qrsum/charsums.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "indexed_field.hpp"
#include "qrsum/error.hpp"

namespace qrsum {

namespace {

Integer q_of(const FieldSpec& F) { return F.q(); }

int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

void require_positive(unsigned e) {
  if (e == 0) throw Error(ErrorCode::InvalidArgument, "character count must be positive");
}

}  // namespace

RingTag closed_form_tag(const FieldSpec& F) {
  return RingTag{F.real_case() ? F.q() : Integer(-F.q())};
}

GaussValue gauss_closed(const FieldSpec& F) {
  const long s = F.s();
  // For even s, sqrt(q) = p^{s/2} is rational.
  const Rational root = s % 2 == 0 ? Rational(power(Integer(F.p()), s / 2)) : Rational(0);
  if (F.p() % 4 == 1) {
    const RingTag tag{F.q()};
    const QuadExact g = s % 2 == 0 ? QuadExact::rational(root, tag) : QuadExact::omega(tag);
    return {g * Rational(sign_pow(s - 1)), "p=1 mod 4"};
  }
  // (-1)^{s-1} i^s sqrt(q)
  if (s % 2 == 0) {
    const int sign = sign_pow(s - 1) * sign_pow(s / 2);
    return {QuadExact::rational(root * sign, RingTag{F.q()}), "p=3 mod 4, s even"};
  }
  // i^s = i (-1)^{(s-1)/2}; w = i sqrt(q)
  const int sign = sign_pow((s - 1) / 2);
  return {QuadExact::omega(RingTag{Integer(-F.q())}) * Rational(sign), "p=3 mod 4, s odd"};
}

std::complex<double> embed_complex(const QuadExact& x) {
  const double a = x.a().get_d();
  const double b = x.b().get_d();
  const double root = std::sqrt(std::fabs(x.tag().D.get_d()));
  if (sgn(x.tag().D) >= 0) return {a + b * root, 0.0};
  return {a, b * root};
}

std::complex<double> gauss_direct(const FieldElement& a, const FieldSpec& F, std::uint64_t cap) {
  const detail::IndexedField field(F, cap);
  const double angle = 2.0 * std::numbers::pi / static_cast<double>(F.p());
  std::complex<double> sum = 0.0;
  for (detail::IndexedField::Index t = 1; t < field.size(); ++t) {
    const Residue tr = trace(mul(a, field.element(t), F), F);
    sum += static_cast<double>(field.chi(t)) * std::polar(1.0, angle * static_cast<double>(tr));
  }
  return sum;
}

Integer jacobi_quadratic_closed(unsigned e, const FieldSpec& F) {
  require_positive(e);
  const Integer q = q_of(F);
  const Integer base = F.real_case() ? q : Integer(-q);
  if (e % 2 == 1) return power(base, (e - 1) / 2);
  const Integer tail = power(base, e / 2 - 1);
  return F.real_case() ? Integer(-tail) : tail;
}

Integer j0_quadratic_closed(unsigned e, const FieldSpec& F) {
  require_positive(e);
  if (e % 2 == 1) return 0;
  const Integer q = q_of(F);
  if (F.real_case()) return (q - 1) * power(q, e / 2 - 1);
  return -(q - 1) * power(Integer(-q), e / 2 - 1);
}

Integer jacobi_direct(std::span<const CharKind> slots, JacobiVariant variant, const FieldSpec& F,
                      std::uint64_t cap) {
  const std::size_t n = slots.size();
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "at least one character slot required");
  if (power(F.q(), static_cast<unsigned long>(n - 1)) > from_u64(cap)) {
    throw Error(ErrorCode::CapExceeded, "q^(n-1) exceeds " + std::to_string(cap));
  }
  const detail::IndexedField field(F, cap);
  using Index = detail::IndexedField::Index;
  const bool nonzero_only = variant == JacobiVariant::Jstar || variant == JacobiVariant::J0star;
  const bool target_one = variant == JacobiVariant::J || variant == JacobiVariant::Jstar;
  const Index target = target_one ? field.index_of(one(F)) : 0;

  auto char_value = [&](std::size_t slot, Index y) -> int {
    return slots[slot] == CharKind::trivial ? 1 : field.chi(y);
  };

  std::int64_t total = 0;
  // Free coordinates y_1..y_{n-1}; y_n = target - (y_1 + ... + y_{n-1}).
  std::function<void(std::size_t, Index, int)> walk = [&](std::size_t depth, Index partial,
                                                           int product) {
    if (depth == n - 1) {
      const Index last = field.add(target, field.neg(partial));
      if (nonzero_only && last == 0) return;
      total += product * char_value(depth, last);
      return;
    }
    for (Index y = nonzero_only ? 1 : 0; y < field.size(); ++y) {
      const int c = char_value(depth, y);
      if (c == 0) continue;
      walk(depth + 1, field.add(partial, y), product * c);
    }
  };
  walk(0, 0, 1);
  return Integer(static_cast<long>(total));
}

Integer jacobi_specialize(std::span<const CharKind> slots, JacobiVariant variant,
                          const FieldSpec& F) {
  const auto n = static_cast<unsigned>(slots.size());
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "at least one character slot required");
  const auto e = static_cast<unsigned>(std::count(slots.begin(), slots.end(), CharKind::trivial));
  const Integer q = F.q();
  const int sign_n = sign_pow(n);
  const int sign_e = sign_pow(e);

  switch (variant) {
    case JacobiVariant::J:
      if (e == n) return power(q, n - 1);
      if (e > 0) return 0;
      return jacobi_quadratic_closed(n, F);
    case JacobiVariant::J0:
      if (e == n) return power(q, n - 1);
      if (e > 0) return 0;
      return j0_quadratic_closed(n, F);
    case JacobiVariant::Jstar:
      if (e == n) return (power(q - 1, n) - sign_n) / q;
      return sign_e * jacobi_quadratic_closed(n - e, F);
    case JacobiVariant::J0star:
      if (e == n) return (power(q - 1, n) + (q - 1) * sign_n) / q;
      return sign_e * j0_quadratic_closed(n - e, F);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown Jacobi variant");
}

namespace {

void check_esym_args(std::span<const FieldElement> a, unsigned e) {
  if (e < 1 || e > a.size()) {
    throw Error(ErrorCode::InvalidArgument, "need 1 <= e <= n");
  }
  for (const auto& x : a) {
    if (is_zero(x)) throw Error(ErrorCode::ZeroCoefficient, "coefficients must be nonzero");
  }
}

}  // namespace

Integer esym_char_sum_direct(std::span<const FieldElement> a, unsigned e, const FieldSpec& F) {
  check_esym_args(a, e);
  const std::size_t n = a.size();
  std::vector<std::size_t> pick(e);
  for (unsigned i = 0; i < e; ++i) pick[i] = i;
  long total = 0;
  while (true) {
    FieldElement prod = one(F);
    for (std::size_t i : pick) prod = mul(prod, a[i], F);
    total += quadratic_character(prod, F);

    std::size_t i = e;
    while (i-- > 0 && pick[i] == n - e + i) {
    }
    if (i == static_cast<std::size_t>(-1)) break;
    ++pick[i];
    for (std::size_t j = i + 1; j < e; ++j) pick[j] = pick[j - 1] + 1;
  }
  return total;
}

Integer esym_char_sum_binomial(std::span<const FieldElement> a, unsigned e, const FieldSpec& F) {
  check_esym_args(a, e);
  const auto n = static_cast<unsigned long>(a.size());
  const auto m = static_cast<unsigned long>(
      std::count_if(a.begin(), a.end(), [&](const FieldElement& x) { return quadratic_character(x, F) == 1; }));
  Integer total = 0;
  for (unsigned long i = 0; i <= m && i <= e; ++i) {
    if (e - i > n - m) continue;
    total += sign_pow(static_cast<long>(i)) * binomial(Integer(m), i) * binomial(Integer(n - m), e - i);
  }
  return sign_pow(e) * total;
}

std::string to_string(JacobiVariant v) {
  switch (v) {
    case JacobiVariant::J: return "J";
    case JacobiVariant::Jstar: return "Jstar";
    case JacobiVariant::J0: return "J0";
    case JacobiVariant::J0star: return "J0star";
  }
  return "?";
}

JacobiVariant parse_jacobi_variant(const std::string& text) {
  for (auto v : {JacobiVariant::J, JacobiVariant::Jstar, JacobiVariant::J0, JacobiVariant::J0star}) {
    if (to_string(v) == text) return v;
  }
  throw Error(ErrorCode::ParseError, "unknown Jacobi variant '" + text + "'");
}

}  // namespace qrsum

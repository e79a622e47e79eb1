#include "qrsum/finite_field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "qrsum/error.hpp"

namespace qrsum {

namespace {

constexpr std::uint64_t kMaxCharacteristic = std::uint64_t{1} << 31;

using Poly = std::vector<Residue>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo the monic polynomial g over F_p.
Poly poly_mod(Poly f, std::span<const Residue> g, std::uint64_t p) {
  const std::size_t dg = g.size() - 1;
  trim(f);
  while (f.size() > dg) {
    const Residue c = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t j = 0; j <= dg; ++j) {
      f[shift + j] = (f[shift + j] + (p - c) * g[j] % p) % p;
    }
    trim(f);
  }
  return f;
}

bool has_root(std::span<const Residue> f, std::uint64_t p) {
  for (Residue x = 0; x < p; ++x) {
    Residue acc = 0;
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = (acc * x + *it) % p;
    if (acc == 0) return true;
  }
  return false;
}

// Advances the odometer with position 0 most significant. Returns false on wrap.
bool next_lex(std::span<Residue> digits, std::uint64_t p, std::size_t first = 0) {
  for (std::size_t i = digits.size(); i-- > first;) {
    if (++digits[i] < p) return true;
    digits[i] = 0;
  }
  return false;
}

void check_shape(const FieldElement& x, const FieldSpec& F) {
  if (x.coeffs.size() != F.s()) {
    throw Error(ErrorCode::ShapeMismatch, "element has " + std::to_string(x.coeffs.size()) +
                                              " coefficients, field degree is " +
                                              std::to_string(F.s()));
  }
  for (Residue c : x.coeffs) {
    if (c >= F.p()) throw Error(ErrorCode::ShapeMismatch, "coefficient not reduced mod p");
  }
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_irreducible(std::span<const Residue> monic_poly, std::uint64_t p) {
  const std::size_t deg = monic_poly.size() - 1;
  if (deg <= 1) return deg == 1;
  if (has_root(monic_poly, p)) return false;
  for (std::size_t d = 2; d <= deg / 2; ++d) {
    Poly g(d + 1, 0);
    g[d] = 1;
    do {
      if (poly_mod(Poly(monic_poly.begin(), monic_poly.end()), g, p).empty()) return false;
    } while (next_lex(std::span(g).first(d), p));
  }
  return true;
}

std::optional<std::uint64_t> FieldSpec::q_u64() const {
  if (!fits_u64(q_)) return std::nullopt;
  return to_u64(q_);
}

FieldSpec build_field(std::uint64_t p, unsigned s, std::optional<std::vector<Residue>> modulus) {
  if (p == 2) throw Error(ErrorCode::EvenCharacteristic, "characteristic 2 is not supported");
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (p >= kMaxCharacteristic) throw Error(ErrorCode::InvalidArgument, "characteristic too large");
  if (s == 0) throw Error(ErrorCode::InvalidArgument, "extension degree must be at least 1");

  FieldSpec F;
  F.p_ = p;
  F.s_ = s;
  F.q_ = power(Integer(static_cast<unsigned long>(p)), s);

  if (modulus) {
    const Poly& m = *modulus;
    if (m.size() != s + 1 || m.back() != 1 ||
        std::any_of(m.begin(), m.end(), [p](Residue c) { return c >= p; })) {
      throw Error(ErrorCode::InvalidModulus, "modulus must be monic of degree " + std::to_string(s) +
                                                 " with coefficients in [0, p)");
    }
    if (!is_irreducible(m, p)) throw Error(ErrorCode::ReducibleModulus, "modulus is reducible");
    F.modulus_ = m;
  } else if (s == 1) {
    F.modulus_ = {0, 1};
  } else {
    // Constant term first and most significant; c0 = 0 is divisible by t.
    Poly m(s + 1, 0);
    m[s] = 1;
    m[0] = 1;
    while (!is_irreducible(m, p)) {
      if (!next_lex(std::span(m).first(s), p)) {
        throw Error(ErrorCode::ReducibleModulus, "no irreducible polynomial found");
      }
    }
    F.modulus_ = std::move(m);
  }
  return F;
}

FieldElement zero(const FieldSpec& F) { return FieldElement{Poly(F.s(), 0)}; }

FieldElement one(const FieldSpec& F) {
  FieldElement r = zero(F);
  r.coeffs[0] = 1;
  return r;
}

bool is_zero(const FieldElement& x) noexcept {
  return std::all_of(x.coeffs.begin(), x.coeffs.end(), [](Residue c) { return c == 0; });
}

FieldElement add(const FieldElement& x, const FieldElement& y, const FieldSpec& F) {
  check_shape(x, F);
  check_shape(y, F);
  FieldElement r = x;
  for (unsigned i = 0; i < F.s(); ++i) r.coeffs[i] = (x.coeffs[i] + y.coeffs[i]) % F.p();
  return r;
}

FieldElement neg(const FieldElement& x, const FieldSpec& F) {
  check_shape(x, F);
  FieldElement r = x;
  for (auto& c : r.coeffs) c = (F.p() - c) % F.p();
  return r;
}

FieldElement sub(const FieldElement& x, const FieldElement& y, const FieldSpec& F) {
  return add(x, neg(y, F), F);
}

FieldElement mul(const FieldElement& x, const FieldElement& y, const FieldSpec& F) {
  check_shape(x, F);
  check_shape(y, F);
  const std::uint64_t p = F.p();
  const unsigned s = F.s();
  Poly prod(2 * s - 1, 0);
  for (unsigned i = 0; i < s; ++i) {
    if (x.coeffs[i] == 0) continue;
    for (unsigned j = 0; j < s; ++j) {
      prod[i + j] = (prod[i + j] + x.coeffs[i] * y.coeffs[j]) % p;
    }
  }
  Poly r = poly_mod(std::move(prod), F.modulus(), p);
  r.resize(s, 0);
  return FieldElement{std::move(r)};
}

FieldElement pow(const FieldElement& x, const Integer& e, const FieldSpec& F) {
  check_shape(x, F);
  if (sgn(e) < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
  FieldElement result = one(F);
  const std::size_t bits = sgn(e) == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mul(result, result, F);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = mul(result, x, F);
  }
  return result;
}

FieldElement inv(const FieldElement& x, const FieldSpec& F) {
  check_shape(x, F);
  if (is_zero(x)) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return pow(x, F.q() - 2, F);
}

Residue trace(const FieldElement& x, const FieldSpec& F) {
  const Integer p(static_cast<unsigned long>(F.p()));
  FieldElement conjugate = x;
  FieldElement sum = x;
  for (unsigned j = 1; j < F.s(); ++j) {
    conjugate = pow(conjugate, p, F);
    sum = add(sum, conjugate, F);
  }
  if (!std::all_of(sum.coeffs.begin() + 1, sum.coeffs.end(), [](Residue c) { return c == 0; })) {
    throw Error(ErrorCode::ConsistencyFailure, "trace left the prime subfield");
  }
  return sum.coeffs[0];
}

int quadratic_character(const FieldElement& x, const FieldSpec& F) {
  if (is_zero(x)) return 0;
  const FieldElement r = pow(x, (F.q() - 1) / 2, F);
  if (r == one(F)) return 1;
  if (r == neg(one(F), F)) return -1;
  throw Error(ErrorCode::ConsistencyFailure, "Euler criterion produced neither 1 nor -1");
}

FieldElement embed_int(const Integer& n, const FieldSpec& F) {
  FieldElement r = zero(F);
  r.coeffs[0] = mpz_fdiv_ui(n.get_mpz_t(), F.p());
  return r;
}

FieldElement embed_int(std::int64_t n, const FieldSpec& F) {
  const auto p = static_cast<std::int64_t>(F.p());
  FieldElement r = zero(F);
  r.coeffs[0] = static_cast<Residue>(((n % p) + p) % p);
  return r;
}

std::uint64_t element_index(const FieldElement& x, const FieldSpec& F) {
  check_shape(x, F);
  if (!F.q_u64()) throw Error(ErrorCode::CapExceeded, "field too large to index");
  std::uint64_t idx = 0;
  for (Residue c : x.coeffs) idx = idx * F.p() + c;
  return idx;
}

FieldElement element_at(std::uint64_t index, const FieldSpec& F) {
  const auto q = F.q_u64();
  if (!q || index >= *q) throw Error(ErrorCode::InvalidArgument, "element index out of range");
  FieldElement r = zero(F);
  for (unsigned i = F.s(); i-- > 0;) {
    r.coeffs[i] = index % F.p();
    index /= F.p();
  }
  return r;
}

std::vector<FieldElement> enumerate_elements(const FieldSpec& F, std::uint64_t cap) {
  const auto q = F.q_u64();
  if (!q || *q > cap) {
    throw Error(ErrorCode::CapExceeded, "q = " + to_decimal(F.q()) + " exceeds enumeration cap " +
                                            std::to_string(cap));
  }
  std::vector<FieldElement> out;
  out.reserve(*q);
  FieldElement x = zero(F);
  do {
    out.push_back(x);
  } while (next_lex(x.coeffs, F.p()));
  return out;
}

std::vector<FieldElement> enumerate_quadratic_residues(const FieldSpec& F, std::uint64_t cap) {
  const auto all = enumerate_elements(F, cap);
  std::vector<bool> is_square(all.size(), false);
  for (const auto& x : all) {
    if (!is_zero(x)) is_square[element_index(mul(x, x, F), F)] = true;
  }
  std::vector<FieldElement> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (is_square[i]) out.push_back(all[i]);
  }
  return out;
}

namespace {

Integer parse_integer(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  const bool digits = !s.empty() && std::all_of(s.begin() + (s[0] == '-' ? 1 : 0), s.end(),
                                                 [](unsigned char c) { return std::isdigit(c); });
  if (!digits || s == "-") throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(text) + "'");
  return Integer(s, 10);
}

}  // namespace

FieldElement parse_element(std::string_view text, const FieldSpec& F) {
  if (text.find(',') == std::string_view::npos) return embed_int(parse_integer(text), F);

  FieldElement r = zero(F);
  std::size_t i = 0;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const auto part = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    if (i >= F.s()) {
      throw Error(ErrorCode::ParseError, "too many coefficients for degree " + std::to_string(F.s()));
    }
    r.coeffs[i++] = mpz_fdiv_ui(parse_integer(part).get_mpz_t(), F.p());
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (i != F.s()) {
    throw Error(ErrorCode::ParseError, "expected " + std::to_string(F.s()) + " coefficients");
  }
  return r;
}

std::string format_element(const FieldElement& x, const FieldSpec& F) {
  check_shape(x, F);
  std::ostringstream os;
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
    if (i) os << ',';
    os << x.coeffs[i];
  }
  return os.str();
}

}  // namespace qrsum

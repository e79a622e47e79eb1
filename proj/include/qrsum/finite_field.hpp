#pragma once

// Arithmetic in F_q, q = p^s, p an odd prime.
//
// Elements are coefficient vectors (c_0, ..., c_{s-1}) over F_p in the basis
// 1, t, ..., t^{s-1} of F_p[t]/(modulus). The canonical order of elements is
// lexicographic on that vector, constant term first; element_index() and
// element_at() are the bijection with [0, q) that realizes this order.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qrsum/bigint.hpp"

namespace qrsum {

using Residue = std::uint64_t;

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

struct FieldElement {
  std::vector<Residue> coeffs;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

class FieldSpec {
 public:
  std::uint64_t p() const noexcept { return p_; }
  unsigned s() const noexcept { return s_; }
  const Integer& q() const noexcept { return q_; }
  // Monic modulus, constant term first, length s + 1.
  std::span<const Residue> modulus() const noexcept { return modulus_; }

  // q as a machine integer, when it fits.
  std::optional<std::uint64_t> q_u64() const;

  // p mod 4 == 1 or s even: the quadratic Gauss sum is real and the closed
  // forms live in Q(sqrt q). Otherwise they live in Q(i sqrt q).
  bool real_case() const noexcept { return p_ % 4 == 1 || s_ % 2 == 0; }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  friend FieldSpec build_field(std::uint64_t, unsigned, std::optional<std::vector<Residue>>);

  std::uint64_t p_ = 0;
  unsigned s_ = 0;
  Integer q_;
  std::vector<Residue> modulus_;
};

// Validates p and the modulus. With no modulus and s > 1, the lexicographically
// smallest monic irreducible of degree s is chosen.
FieldSpec build_field(std::uint64_t p, unsigned s,
                      std::optional<std::vector<Residue>> modulus = std::nullopt);

bool is_prime(std::uint64_t n);

// Irreducibility over F_p by trial division with every monic polynomial of
// degree 1..deg/2. Coefficients constant term first, monic.
bool is_irreducible(std::span<const Residue> monic_poly, std::uint64_t p);

FieldElement zero(const FieldSpec& F);
FieldElement one(const FieldSpec& F);

FieldElement add(const FieldElement& x, const FieldElement& y, const FieldSpec& F);
FieldElement sub(const FieldElement& x, const FieldElement& y, const FieldSpec& F);
FieldElement neg(const FieldElement& x, const FieldSpec& F);
FieldElement mul(const FieldElement& x, const FieldElement& y, const FieldSpec& F);
FieldElement inv(const FieldElement& x, const FieldSpec& F);
// 0^0 = 1.
FieldElement pow(const FieldElement& x, const Integer& e, const FieldSpec& F);

bool is_zero(const FieldElement& x) noexcept;

// Absolute trace to F_p, as a residue in [0, p).
Residue trace(const FieldElement& x, const FieldSpec& F);

// Quadratic character: 0 at 0, +1 on nonzero squares, -1 otherwise.
int quadratic_character(const FieldElement& x, const FieldSpec& F);

// Image of n under Z -> F_p -> F_q.
FieldElement embed_int(std::int64_t n, const FieldSpec& F);
FieldElement embed_int(const Integer& n, const FieldSpec& F);

std::uint64_t element_index(const FieldElement& x, const FieldSpec& F);
FieldElement element_at(std::uint64_t index, const FieldSpec& F);

std::vector<FieldElement> enumerate_elements(const FieldSpec& F,
                                             std::uint64_t cap = kDefaultEnumerationCap);
// The subgroup H of nonzero squares, in element order.
std::vector<FieldElement> enumerate_quadratic_residues(const FieldSpec& F,
                                                       std::uint64_t cap = kDefaultEnumerationCap);

// "c0,c1,...,c_{s-1}" for s > 1, a plain integer for s = 1. A bare integer is
// accepted for any s and embedded into the prime subfield.
FieldElement parse_element(std::string_view text, const FieldSpec& F);
std::string format_element(const FieldElement& x, const FieldSpec& F);

}  // namespace qrsum

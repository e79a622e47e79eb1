#pragma once

// Gauss and Jacobi-type sums for the trivial and quadratic characters of F_q,
// both as closed forms and by direct summation (the latter are test oracles).

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "qrsum/bigint.hpp"
#include "qrsum/exact_ring.hpp"
#include "qrsum/finite_field.hpp"

namespace qrsum {

enum class CharKind { trivial, quadratic };

enum class JacobiVariant {
  J,       // sum over y_1 + ... + y_n = 1
  Jstar,   // same, all y_i != 0
  J0,      // sum over y_1 + ... + y_n = 0
  J0star,  // same, all y_i != 0
};

inline constexpr std::uint64_t kJacobiDirectCap = 10'000'000;

// Ring tag of the closed forms over F: D = q in the real case, D = -q otherwise.
RingTag closed_form_tag(const FieldSpec& F);

struct GaussValue {
  QuadExact value;
  std::string case_label;
};

// G(chi) for the quadratic character chi.
GaussValue gauss_closed(const FieldSpec& F);

// sum_t chi(t) zeta^{Tr(a t)}, zeta = exp(2 pi i / p), in double precision.
std::complex<double> gauss_direct(const FieldElement& a, const FieldSpec& F,
                                  std::uint64_t cap = kDefaultEnumerationCap);

// sqrt(q) or i sqrt(q) substituted for w.
std::complex<double> embed_complex(const QuadExact& x);

// J(chi, ..., chi) with e copies of the quadratic character.
Integer jacobi_quadratic_closed(unsigned e, const FieldSpec& F);

// J_0(chi, ..., chi) with e copies; zero for odd e.
Integer j0_quadratic_closed(unsigned e, const FieldSpec& F);

// Direct summation over the hyperplane; q^{n-1} <= cap.
Integer jacobi_direct(std::span<const CharKind> slots, JacobiVariant variant, const FieldSpec& F,
                      std::uint64_t cap = kJacobiDirectCap);

// Closed-form evaluation of any trivial/quadratic slot pattern, reduced to
// the all-quadratic closed forms.
Integer jacobi_specialize(std::span<const CharKind> slots, JacobiVariant variant,
                          const FieldSpec& F);

// sum over e-subsets {i_1 < ... < i_e} of chi(a_{i_1} ... a_{i_e}).
Integer esym_char_sum_direct(std::span<const FieldElement> a, unsigned e, const FieldSpec& F);
// The same via (-1)^e sum_i (-1)^i C(m, i) C(n-m, e-i), m = #{chi(a_i) = 1}.
Integer esym_char_sum_binomial(std::span<const FieldElement> a, unsigned e, const FieldSpec& F);

std::string to_string(JacobiVariant v);
JacobiVariant parse_jacobi_variant(const std::string& text);

}  // namespace qrsum

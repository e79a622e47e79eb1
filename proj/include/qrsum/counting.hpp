#pragma once

// Closed-form counts:
//   n_star        solutions of a_1 x_1^2 + ... + a_n x_n^2 = b with all x_i != 0
//   n_tilde_star  solutions of x_1^2 + ... + x_k^2 = b with distinct nonzero x_i
//   n_H           k-subsets of the quadratic residues H summing to b
//
// The distinct-coordinate counts come from a signed sum over permutation
// cycle types, which collapses to the cycle-index polynomial C_k evaluated at
// slot values chosen per cycle length (a_kb). Every formula is evaluated in
// QuadExact and leaves through assert_integer.

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "qrsum/bigint.hpp"
#include "qrsum/exact_ring.hpp"
#include "qrsum/finite_field.hpp"

namespace qrsum {

struct CycleType {
  // counts[i-1] = number of cycles of length i; sum of i * counts[i-1] = k.
  std::vector<unsigned> counts;
  // k! / prod(i^{c_i} c_i!)
  Integer permutations;

  unsigned k() const noexcept { return static_cast<unsigned>(counts.size()); }
};

Integer permutation_count(std::span<const unsigned> counts);

// Visits every cycle type of S_k once, c_1 descending first.
void for_each_cycle_type(unsigned k, const std::function<void(const CycleType&)>& visit);
std::vector<CycleType> cycle_types(unsigned k);

// C_k(t_1..t_k) = sum over types of N(c) prod t_i^{c_i}.
// The EGF recurrence (k f_k = sum_i t_i f_{k-i}) is the production path; the
// partition sum is kept as an independent check.
QuadExact cycle_index_egf(std::span<const QuadExact> t, const RingTag& tag);
QuadExact cycle_index_partition(std::span<const QuadExact> t, const RingTag& tag);

struct SieveArgs {
  QuadExact u;  // p does not divide i, chi(i) = chi_b
  QuadExact v;  // p does not divide i, chi(i) = -chi_b
  QuadExact w;  // p divides i
  int chi_b = 1;
};

// Slot values t_1..t_k for A_{k,b}; chi(i) is the field character of the
// integer i embedded in F_q.
std::vector<QuadExact> sieve_slots(unsigned k, const SieveArgs& args, const FieldSpec& F);

// A_{k,b}(u, v, w) = C_k(slots). When u == v the binomial closed form is
// evaluated as well and must agree (ConsistencyFailure otherwise).
QuadExact a_kb(unsigned k, const SieveArgs& args, const FieldSpec& F);

// k! (-1)^k sum_{i >= 0} C(-u, k - p i) C((u - w) / p, i): C_k with t_i = w for
// p | i and u elsewhere.
QuadExact a_kb_closed(unsigned k, const QuadExact& u, const QuadExact& w, std::uint64_t p);

struct CountResult {
  Integer value;
  std::string provenance;
};

CountResult n_star(std::span<const FieldElement> a, const FieldElement& b, const FieldSpec& F);

CountResult n_tilde_star(unsigned k, const FieldElement& b, const FieldSpec& F);

// For even s the specialized formulas are the production path and the
// general ones are evaluated alongside; disagreement is a ConsistencyFailure.
CountResult n_H(unsigned k, const FieldElement& b, const FieldSpec& F);

// Only the general (cycle-index) route, for any s.
CountResult n_H_general(unsigned k, const FieldElement& b, const FieldSpec& F);

// Even-s specialization: chi is trivial on F_p^*, so u = v and sqrt(q) is the
// integer p^{s/2}. Throws OddExtensionDegree for odd s.
CountResult even_s_fast(unsigned k, const FieldElement& b, const FieldSpec& F);

}  // namespace qrsum

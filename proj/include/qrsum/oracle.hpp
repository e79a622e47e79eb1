#pragma once

// Exhaustive ground truth for the closed forms. Every enumeration projects
// its state count first and refuses (BudgetExceeded) rather than run long.
// Tables are indexed by element_index(b), i.e. canonical element order.

#include <cstdint>
#include <span>
#include <vector>

#include "qrsum/bigint.hpp"
#include "qrsum/finite_field.hpp"

namespace qrsum {

struct OracleBudget {
  std::uint64_t max_states = 10'000'000;
};

using CountTable = std::vector<Integer>;

// #{x in (F_q^*)^n : sum a_i x_i^2 = b}
Integer oracle_diagonal(std::span<const FieldElement> a, const FieldElement& b, const FieldSpec& F,
                        OracleBudget budget = {});
CountTable oracle_diagonal_table(std::span<const FieldElement> a, const FieldSpec& F,
                                 OracleBudget budget = {});

// #{injective x in (F_q^*)^k : sum x_i^2 = b}
Integer oracle_distinct_tuples(unsigned k, const FieldElement& b, const FieldSpec& F,
                               OracleBudget budget = {});
CountTable oracle_distinct_table(unsigned k, const FieldSpec& F, OracleBudget budget = {});

// #{S subset of H : |S| = k, sum S = b}, combinations visited lexicographically.
Integer oracle_subset_sum(unsigned k, const FieldElement& b, const FieldSpec& F,
                          OracleBudget budget = {});
CountTable oracle_subset_table(unsigned k, const FieldSpec& F, OracleBudget budget = {});

}  // namespace qrsum

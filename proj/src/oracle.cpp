#include "qrsum/oracle.hpp"

#include <algorithm>

#include "indexed_field.hpp"
#include "qrsum/error.hpp"

namespace qrsum {

namespace {

using detail::IndexedField;
using Index = IndexedField::Index;

void check_budget(const Integer& projected, OracleBudget budget, const char* what) {
  if (projected > from_u64(budget.max_states)) {
    throw Error(ErrorCode::BudgetExceeded, std::string(what) + ": " + to_decimal(projected) +
                                               " states exceed budget " +
                                               std::to_string(budget.max_states));
  }
}

CountTable to_table(const std::vector<std::uint64_t>& counts) {
  CountTable out;
  out.reserve(counts.size());
  for (auto c : counts) out.push_back(from_u64(c));
  return out;
}

struct DiagonalWalk {
  const IndexedField& field;
  const std::vector<std::vector<Index>>& scaled;  // scaled[i][x] = a_i x^2
  std::vector<std::uint64_t>& counts;

  void run(std::size_t depth, Index partial) const {
    const auto& row = scaled[depth];
    if (depth + 1 == scaled.size()) {
      for (Index x = 1; x < field.size(); ++x) ++counts[field.add(partial, row[x])];
      return;
    }
    for (Index x = 1; x < field.size(); ++x) run(depth + 1, field.add(partial, row[x]));
  }
};

struct DistinctWalk {
  const IndexedField& field;
  unsigned k;
  std::vector<char>& used;
  std::vector<std::uint64_t>& counts;

  void run(unsigned depth, Index partial) const {
    if (depth == k) {
      ++counts[partial];
      return;
    }
    for (Index x = 1; x < field.size(); ++x) {
      if (used[x]) continue;
      used[x] = 1;
      run(depth + 1, field.add(partial, field.square(x)));
      used[x] = 0;
    }
  }
};

struct SubsetWalk {
  const IndexedField& field;
  const std::vector<Index>& residues;
  unsigned k;
  std::vector<std::uint64_t>& counts;

  void run(unsigned depth, std::size_t start, Index partial) const {
    if (depth == k) {
      ++counts[partial];
      return;
    }
    for (std::size_t i = start; i + (k - depth) <= residues.size(); ++i) {
      run(depth + 1, i + 1, field.add(partial, residues[i]));
    }
  }
};

}  // namespace

CountTable oracle_diagonal_table(std::span<const FieldElement> a, const FieldSpec& F,
                                 OracleBudget budget) {
  if (a.empty()) throw Error(ErrorCode::InvalidArgument, "at least one coefficient required");
  if (std::any_of(a.begin(), a.end(), [](const FieldElement& x) { return is_zero(x); })) {
    throw Error(ErrorCode::ZeroCoefficient, "coefficients must be nonzero");
  }
  check_budget(power(F.q() - 1, a.size()), budget, "diagonal");
  const IndexedField field(F, kDefaultEnumerationCap);
  std::vector<std::vector<Index>> scaled;
  for (const auto& ai : a) scaled.push_back(field.scaled_squares(ai));
  std::vector<std::uint64_t> counts(field.size(), 0);
  DiagonalWalk{field, scaled, counts}.run(0, 0);
  return to_table(counts);
}

Integer oracle_diagonal(std::span<const FieldElement> a, const FieldElement& b, const FieldSpec& F,
                        OracleBudget budget) {
  return oracle_diagonal_table(a, F, budget)[element_index(b, F)];
}

CountTable oracle_distinct_table(unsigned k, const FieldSpec& F, OracleBudget budget) {
  check_budget(falling_factorial(F.q() - 1, k), budget, "distinct tuples");
  const IndexedField field(F, kDefaultEnumerationCap);
  std::vector<std::uint64_t> counts(field.size(), 0);
  if (k < field.size()) {
    std::vector<char> used(field.size(), 0);
    DistinctWalk{field, k, used, counts}.run(0, 0);
  }
  return to_table(counts);
}

Integer oracle_distinct_tuples(unsigned k, const FieldElement& b, const FieldSpec& F,
                               OracleBudget budget) {
  return oracle_distinct_table(k, F, budget)[element_index(b, F)];
}

CountTable oracle_subset_table(unsigned k, const FieldSpec& F, OracleBudget budget) {
  check_budget(binomial((F.q() - 1) / 2, k), budget, "subsets");
  const IndexedField field(F, kDefaultEnumerationCap);
  std::vector<Index> residues;
  for (Index i = 1; i < field.size(); ++i) {
    if (field.chi(i) == 1) residues.push_back(i);
  }
  std::vector<std::uint64_t> counts(field.size(), 0);
  SubsetWalk{field, residues, k, counts}.run(0, 0, 0);
  return to_table(counts);
}

Integer oracle_subset_sum(unsigned k, const FieldElement& b, const FieldSpec& F,
                          OracleBudget budget) {
  return oracle_subset_table(k, F, budget)[element_index(b, F)];
}

}  // namespace qrsum

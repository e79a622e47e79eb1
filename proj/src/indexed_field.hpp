#pragma once

// Index-based view of a small field for the enumeration oracles: elements are
// their positions in the canonical order, so sums and characters become
// table lookups.

#include <cstdint>
#include <vector>

#include "qrsum/finite_field.hpp"

namespace qrsum::detail {

class IndexedField {
 public:
  using Index = std::uint32_t;

  IndexedField(const FieldSpec& F, std::uint64_t cap);

  Index size() const noexcept { return q_; }
  const FieldSpec& spec() const noexcept { return F_; }

  Index add(Index i, Index j) const noexcept {
    if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(i) * q_ + j];
    return add_digits(i, j);
  }
  Index neg(Index i) const noexcept { return neg_[i]; }
  Index square(Index i) const noexcept { return square_[i]; }
  int chi(Index i) const noexcept { return chi_[i]; }

  Index index_of(const FieldElement& x) const;
  const FieldElement& element(Index i) const noexcept { return elements_[i]; }

  // a * x^2 for every x, by index of x.
  std::vector<Index> scaled_squares(const FieldElement& a) const;

 private:
  Index add_digits(Index i, Index j) const noexcept;

  FieldSpec F_;
  Index q_;
  std::uint64_t p_;
  std::vector<FieldElement> elements_;
  std::vector<Index> add_table_;
  std::vector<Index> neg_;
  std::vector<Index> square_;
  std::vector<int> chi_;
};

}  // namespace qrsum::detail

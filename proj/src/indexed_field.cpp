#include "indexed_field.hpp"

#include <limits>

#include "qrsum/error.hpp"

namespace qrsum::detail {

namespace {

constexpr std::uint64_t kAddTableLimit = 1024;

}  // namespace

IndexedField::IndexedField(const FieldSpec& F, std::uint64_t cap)
    : F_(F), elements_(enumerate_elements(F, cap)) {
  if (elements_.size() > std::numeric_limits<Index>::max()) {
    throw Error(ErrorCode::CapExceeded, "field too large for indexed enumeration");
  }
  q_ = static_cast<Index>(elements_.size());
  p_ = F.p();

  if (q_ <= kAddTableLimit) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (Index i = 0; i < q_; ++i) {
      for (Index j = 0; j < q_; ++j) add_table_[static_cast<std::size_t>(i) * q_ + j] = add_digits(i, j);
    }
  }

  neg_.resize(q_);
  square_.resize(q_);
  chi_.assign(q_, -1);
  chi_[0] = 0;
  for (Index i = 0; i < q_; ++i) {
    neg_[i] = index_of(qrsum::neg(elements_[i], F));
    square_[i] = index_of(mul(elements_[i], elements_[i], F));
    if (i != 0) chi_[square_[i]] = 1;
  }
}

IndexedField::Index IndexedField::add_digits(Index i, Index j) const noexcept {
  // Index digits are base-p with the constant term most significant.
  Index result = 0;
  Index scale = 1;
  for (unsigned d = 0; d < F_.s(); ++d) {
    const Index di = i % p_;
    const Index dj = j % p_;
    result += static_cast<Index>((di + dj) % p_) * scale;
    scale *= static_cast<Index>(p_);
    i /= p_;
    j /= p_;
  }
  return result;
}

IndexedField::Index IndexedField::index_of(const FieldElement& x) const {
  return static_cast<Index>(element_index(x, F_));
}

std::vector<IndexedField::Index> IndexedField::scaled_squares(const FieldElement& a) const {
  std::vector<Index> out(q_);
  for (Index i = 0; i < q_; ++i) out[i] = index_of(mul(a, elements_[square_[i]], F_));
  return out;
}

}  // namespace qrsum::detail

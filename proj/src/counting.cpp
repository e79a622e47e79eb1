#include "qrsum/counting.hpp"

#include <algorithm>

#include "qrsum/charsums.hpp"
#include "qrsum/error.hpp"

namespace qrsum {

namespace {

Rational sign(long e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

std::string branch(const FieldSpec& F) { return F.real_case() ? "real" : "imaginary"; }

CountResult certify(const QuadExact& value, std::string provenance) {
  Integer n = assert_integer(value);
  if (sgn(n) < 0) {
    throw Error(ErrorCode::ConsistencyFailure, provenance + " produced negative count " + to_decimal(n));
  }
  return {std::move(n), std::move(provenance)};
}

void require_same_tag(const SieveArgs& args) {
  if (!(args.u.tag() == args.v.tag()) || !(args.u.tag() == args.w.tag())) {
    throw Error(ErrorCode::TagMismatch, "sieve arguments carry different ring tags");
  }
}

CountResult empty_subset(const FieldElement& b, std::string label) {
  return {is_zero(b) ? Integer(1) : Integer(0), std::move(label)};
}

Integer residue_count(const FieldSpec& F) { return (F.q() - 1) / 2; }

void require_subset_range(unsigned k, const FieldSpec& F) {
  if (Integer(k) > residue_count(F)) {
    throw Error(ErrorCode::KOutOfRange, "k = " + std::to_string(k) + " exceeds |H| = " +
                                            to_decimal(residue_count(F)));
  }
}

}  // namespace

Integer permutation_count(std::span<const unsigned> counts) {
  unsigned long k = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) k += (i + 1) * counts[i];
  Integer denom = 1;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    denom *= power(Integer(static_cast<unsigned long>(i + 1)), counts[i]) * factorial(counts[i]);
  }
  return factorial(k) / denom;
}

void for_each_cycle_type(unsigned k, const std::function<void(const CycleType&)>& visit) {
  CycleType type{std::vector<unsigned>(k, 0), 0};
  std::function<void(unsigned, unsigned)> fill = [&](unsigned len, unsigned remaining) {
    if (len > k) {
      if (remaining == 0) {
        type.permutations = permutation_count(type.counts);
        visit(type);
      }
      return;
    }
    for (unsigned c = remaining / len + 1; c-- > 0;) {
      type.counts[len - 1] = c;
      fill(len + 1, remaining - c * len);
    }
    type.counts[len - 1] = 0;
  };
  fill(1, k);
}

std::vector<CycleType> cycle_types(unsigned k) {
  std::vector<CycleType> out;
  for_each_cycle_type(k, [&](const CycleType& c) { out.push_back(c); });
  return out;
}

QuadExact cycle_index_egf(std::span<const QuadExact> t, const RingTag& tag) {
  const std::size_t k = t.size();
  // Coefficients of exp(sum_i t_i u^i / i).
  std::vector<QuadExact> f;
  f.reserve(k + 1);
  f.push_back(QuadExact::rational(1, tag));
  for (std::size_t n = 1; n <= k; ++n) {
    QuadExact acc = QuadExact::rational(0, tag);
    for (std::size_t i = 1; i <= n; ++i) acc += t[i - 1] * f[n - i];
    f.push_back(acc / Rational(Integer(static_cast<unsigned long>(n))));
  }
  return f[k] * Rational(factorial(k));
}

QuadExact cycle_index_partition(std::span<const QuadExact> t, const RingTag& tag) {
  QuadExact total = QuadExact::rational(0, tag);
  for_each_cycle_type(static_cast<unsigned>(t.size()), [&](const CycleType& c) {
    QuadExact term = QuadExact::rational(Rational(c.permutations), tag);
    for (std::size_t i = 0; i < c.counts.size(); ++i) {
      if (c.counts[i]) term *= pow(t[i], c.counts[i]);
    }
    total += term;
  });
  return total;
}

std::vector<QuadExact> sieve_slots(unsigned k, const SieveArgs& args, const FieldSpec& F) {
  require_same_tag(args);
  std::vector<QuadExact> t;
  t.reserve(k);
  for (unsigned i = 1; i <= k; ++i) {
    if (i % F.p() == 0) {
      t.push_back(args.w);
    } else if (quadratic_character(embed_int(static_cast<std::int64_t>(i), F), F) == args.chi_b) {
      t.push_back(args.u);
    } else {
      t.push_back(args.v);
    }
  }
  return t;
}

QuadExact a_kb_closed(unsigned k, const QuadExact& u, const QuadExact& w, std::uint64_t p) {
  if (!(u.tag() == w.tag())) throw Error(ErrorCode::TagMismatch, "u and w carry different ring tags");
  const QuadExact neg_u = -u;
  const QuadExact upper = (u - w) / Rational(Integer(static_cast<unsigned long>(p)));
  QuadExact sum = QuadExact::rational(0, u.tag());
  for (unsigned long i = 0; p * i <= k; ++i) {
    sum += binomial_general(neg_u, k - p * i) * binomial_general(upper, i);
  }
  return sum * (Rational(factorial(k)) * sign(k));
}

QuadExact a_kb(unsigned k, const SieveArgs& args, const FieldSpec& F) {
  const auto slots = sieve_slots(k, args, F);
  QuadExact value = cycle_index_egf(slots, args.u.tag());
  if (args.u == args.v) {
    const QuadExact closed = a_kb_closed(k, args.u, args.w, F.p());
    if (!(closed == value)) {
      throw Error(ErrorCode::ConsistencyFailure, "A_k closed form " + to_string(closed) +
                                                     " != cycle-index value " + to_string(value));
    }
  }
  return value;
}

CountResult n_star(std::span<const FieldElement> a, const FieldElement& b, const FieldSpec& F) {
  const auto n = static_cast<unsigned long>(a.size());
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "at least one coefficient required");
  if (std::any_of(a.begin(), a.end(), [](const FieldElement& x) { return is_zero(x); })) {
    throw Error(ErrorCode::ZeroCoefficient, "coefficients must be nonzero");
  }
  const RingTag tag = closed_form_tag(F);
  const QuadExact w = QuadExact::omega(tag);
  const QuadExact minus = 1 - w;
  const QuadExact plus = 1 + w;
  const Rational q(F.q());
  const Rational main_term = Rational(power(F.q() - 1, n)) / q;

  if (!is_zero(b)) {
    const int chi_b = quadratic_character(b, F);
    const auto m = static_cast<unsigned long>(std::count_if(
        a.begin(), a.end(), [&](const FieldElement& x) { return quadratic_character(x, F) == chi_b; }));
    const QuadExact bracket =
        F.real_case() ? pow(minus, m + 1) * pow(plus, n - m) + pow(plus, m + 1) * pow(minus, n - m)
                      : pow(minus, m) * pow(plus, n - m + 1) + pow(plus, m) * pow(minus, n - m + 1);
    return certify(main_term - bracket * (sign(n) / (2 * q)), "diagonal/b-nonzero/" + branch(F));
  }

  const auto m = static_cast<unsigned long>(std::count_if(
      a.begin(), a.end(), [&](const FieldElement& x) { return quadratic_character(x, F) == 1; }));
  const QuadExact bracket = pow(minus, m) * pow(plus, n - m) + pow(plus, m) * pow(minus, n - m);
  return certify(main_term + bracket * (sign(n) * (q - 1) / (2 * q)), "diagonal/b-zero/" + branch(F));
}

CountResult n_tilde_star(unsigned k, const FieldElement& b, const FieldSpec& F) {
  if (Integer(k) > F.q() - 1) {
    throw Error(ErrorCode::KOutOfRange, "k = " + std::to_string(k) + " exceeds q - 1");
  }
  if (k == 0) return empty_subset(b, "distinct/k-zero");

  const RingTag tag = closed_form_tag(F);
  const QuadExact w = QuadExact::omega(tag);
  const QuadExact minus = 1 - w;
  const QuadExact plus = 1 + w;
  const Rational q(F.q());
  const QuadExact p_slot = QuadExact::rational(1 - q, tag);
  const Rational main_term = Rational(falling_factorial(F.q() - 1, k)) / q;

  if (!is_zero(b)) {
    const int chi_b = quadratic_character(b, F);
    const QuadExact first = a_kb(k, {minus, plus, p_slot, chi_b}, F);
    const QuadExact second = a_kb(k, {plus, minus, p_slot, chi_b}, F);
    const QuadExact bracket = F.real_case() ? minus * first + plus * second : plus * first + minus * second;
    return certify(main_term - bracket * (sign(k) / (2 * q)), "distinct/b-nonzero/" + branch(F));
  }

  const QuadExact first = a_kb(k, {minus, plus, p_slot, 1}, F);
  const QuadExact second = a_kb(k, {plus, minus, p_slot, 1}, F);
  return certify(main_term + (first + second) * (sign(k) * (q - 1) / (2 * q)),
                 "distinct/b-zero/" + branch(F));
}

CountResult n_H_general(unsigned k, const FieldElement& b, const FieldSpec& F) {
  require_subset_range(k, F);
  if (k == 0) return empty_subset(b, "subset/k-zero");

  const RingTag tag = closed_form_tag(F);
  const QuadExact w = QuadExact::omega(tag);
  const QuadExact minus = 1 - w;
  const QuadExact plus = 1 + w;
  const QuadExact half_minus = minus / Rational(2);
  const QuadExact half_plus = plus / Rational(2);
  const Rational q(F.q());
  const QuadExact p_slot = QuadExact::rational((1 - q) / 2, tag);
  const Rational main_term = Rational(binomial(residue_count(F), k)) / q;
  const Rational scale = 2 * q * Rational(factorial(k));

  if (!is_zero(b)) {
    const int chi_b = quadratic_character(b, F);
    const QuadExact first = a_kb(k, {half_minus, half_plus, p_slot, chi_b}, F);
    const QuadExact second = a_kb(k, {half_plus, half_minus, p_slot, chi_b}, F);
    const QuadExact bracket = F.real_case() ? minus * first + plus * second : plus * first + minus * second;
    return certify(main_term - bracket * (sign(k) / scale), "subset/b-nonzero/" + branch(F));
  }

  const QuadExact first = a_kb(k, {half_minus, half_plus, p_slot, 1}, F);
  const QuadExact second = a_kb(k, {half_plus, half_minus, p_slot, 1}, F);
  return certify(main_term + (first + second) * (sign(k) * (q - 1) / scale),
                 "subset/b-zero/" + branch(F));
}

CountResult even_s_fast(unsigned k, const FieldElement& b, const FieldSpec& F) {
  if (F.s() % 2 != 0) {
    throw Error(ErrorCode::OddExtensionDegree, "s = " + std::to_string(F.s()) + " is odd");
  }
  require_subset_range(k, F);
  if (k == 0) return empty_subset(b, "subset/k-zero");

  // sqrt(q) = p^{s/2} is a rational integer; no w appears below.
  const RingTag tag{F.q()};
  const Rational root(power(Integer(static_cast<unsigned long>(F.p())), F.s() / 2));
  const Rational q(F.q());
  const QuadExact p_slot = QuadExact::rational((1 - q) / 2, tag);
  const QuadExact low = QuadExact::rational((1 - root) / 2, tag);
  const QuadExact high = QuadExact::rational((1 + root) / 2, tag);
  const QuadExact a_low = a_kb_closed(k, low, p_slot, F.p());
  const QuadExact a_high = a_kb_closed(k, high, p_slot, F.p());
  const Rational main_term = Rational(binomial(residue_count(F), k)) / q;
  const Rational scale = 2 * q * Rational(factorial(k));

  if (is_zero(b)) {
    return certify(QuadExact::rational(main_term, tag) + (a_high + a_low) * (sign(k) * (q - 1) / scale),
                   "subset/even-s/b-zero");
  }
  const bool residue = quadratic_character(b, F) == 1;
  const QuadExact bracket = residue ? (1 - root) * a_low + (1 + root) * a_high
                                    : (1 - root) * a_high + (1 + root) * a_low;
  return certify(QuadExact::rational(main_term, tag) - bracket * (sign(k) / scale),
                 residue ? "subset/even-s/b-residue" : "subset/even-s/b-nonresidue");
}

CountResult n_H(unsigned k, const FieldElement& b, const FieldSpec& F) {
  if (F.s() % 2 != 0) return n_H_general(k, b, F);
  CountResult fast = even_s_fast(k, b, F);
  const CountResult general = n_H_general(k, b, F);
  if (fast.value != general.value) {
    throw Error(ErrorCode::ConsistencyFailure,
                "even-s path gives " + to_decimal(fast.value) + " (" + fast.provenance +
                    "), general path gives " + to_decimal(general.value) + " (" + general.provenance + ")");
  }
  return fast;
}

}  // namespace qrsum

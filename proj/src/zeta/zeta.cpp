#include "ramify/zeta/zeta.hpp"

#include <stdexcept>

#include "ramify/error.hpp"
#include "ramify/localfield/one_units.hpp"

namespace ramify {

std::uint64_t digit_sum(std::uint64_t q, std::uint64_t k) {
  std::uint64_t s = 0;
  while (k) {
    s += k % q;
    k /= q;
  }
  return s;
}

std::uint64_t vanishing_bound(std::uint64_t q, std::uint64_t k) { return digit_sum(q, k) / (q - 1); }

Polynomial power_sum(const Field& field, unsigned d, std::uint64_t k, std::uint64_t budget) {
  Polynomial sum(field);
  for (const auto& a : MonicRange(field, d, budget)) sum += pow(a, k);
  return sum;
}

Polynomial power_sum_accelerated(const Field& field, unsigned d, std::uint64_t k, std::uint64_t budget) {
  const auto p = field.characteristic();
  unsigned frob = 0;
  while (k > 0 && k % p == 0) {
    k /= p;
    ++frob;
  }
  Polynomial s = power_sum(field, d, k, budget);
  for (unsigned i = 0; i < frob; ++i) s = s.frobenius();
  return s;
}

SpecialPolynomial special_polynomial(const Field& field, std::uint64_t k, std::uint64_t budget) {
  if (k < 1) throw PreconditionError("special polynomial needs k >= 1");
  SpecialPolynomial z;
  z.field = field;
  z.k = k;
  const auto bound = static_cast<unsigned>(vanishing_bound(field.order(), k));
  for (unsigned d = 0; d <= bound; ++d) z.coefficients.push_back(power_sum_accelerated(field, d, k, budget));
  try {
    MonicRange guard(field, bound + 1, budget);
    if (!power_sum(field, bound + 1, k, budget).is_zero())
      throw std::logic_error("power sum beyond the vanishing bound is nonzero");
    z.guard_checked = true;
  } catch (const BudgetError&) {
    z.guard_checked = false;
  }
  return z;
}

std::vector<LaurentSeries> as_series(const SpecialPolynomial& z) {
  LocalField K(z.field);
  std::vector<LaurentSeries> out;
  out.reserve(z.coefficients.size());
  for (const auto& c : z.coefficients) out.push_back(LaurentSeries::from_polynomial(K, c));
  return out;
}

std::vector<LaurentSeries> zeta_series(const Field& field, const PAdicDigits& y, unsigned max_degree, std::int64_t prec,
                                       std::uint64_t budget) {
  if (y.base() != field.order()) throw PreconditionError("exponent digits must be in base q");
  const PAdicDigits minus_y = y.negated();
  LocalField K(field);
  std::vector<LaurentSeries> out;
  for (unsigned d = 0; d <= max_degree; ++d) {
    LaurentSeries sum = LaurentSeries::zero(K);
    for (const auto& a : MonicRange(field, d, budget)) sum += one_unit_power(bracket(a), minus_y, prec);
    if (sum.precision() < prec)
      throw PrecisionError("precision underflow: degree-" + std::to_string(d) + " stratum known only to theta^-" +
                           std::to_string(sum.precision()));
    out.push_back(sum.is_exact() ? sum : sum.truncated(prec));
  }
  return out;
}

LaurentSeries zeta_value_positive(const Field& field, std::uint64_t k, std::int64_t prec, std::uint64_t budget) {
  if (k < 1) throw PreconditionError("positive zeta value needs k >= 1");
  LocalField K(field);
  LaurentSeries sum = LaurentSeries::zero(K, prec);
  const auto kk = static_cast<std::int64_t>(k);
  for (unsigned d = 0; static_cast<std::int64_t>(d) * kk < prec; ++d) {
    const std::int64_t rel = prec - static_cast<std::int64_t>(d) * kk;
    for (const auto& a : MonicRange(field, d, budget))
      sum += inv(LaurentSeries::from_polynomial(K, pow(a, k)), rel);
  }
  return sum;
}

XSeries power_sum_series(const Field& field, std::uint64_t k, unsigned max_degree, std::uint64_t budget) {
  XSeries s(max_degree + 1, Polynomial(field));
  const auto bound = vanishing_bound(field.order(), k);
  for (unsigned d = 0; d <= max_degree; ++d)
    if (k == 0 ? d == 0 : d <= bound) s[d] = power_sum_accelerated(field, d, k, budget);
  return s;
}

}  // namespace ramify

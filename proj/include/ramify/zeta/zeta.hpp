#pragma once

#include <cstdint>
#include <vector>

#include "ramify/algebra/enumerate.hpp"
#include "ramify/algebra/polynomial.hpp"
#include "ramify/algebra/xseries.hpp"
#include "ramify/localfield/laurent_series.hpp"
#include "ramify/localfield/padic_digits.hpp"

namespace ramify {

/// Sum of the base-q digits of k.
std::uint64_t digit_sum(std::uint64_t q, std::uint64_t k);
/// floor(l_q(k) / (q - 1)): S_d(k) vanishes for every larger d.
std::uint64_t vanishing_bound(std::uint64_t q, std::uint64_t k);

/// S_d(k) = sum of a^k over monic a of degree d, by plain enumeration.
Polynomial power_sum(const Field& field, unsigned d, std::uint64_t k,
                     std::uint64_t budget = kDefaultEnumerationBudget);

/// Same value, reducing k by p via S_d(p k) = S_d(k)^p before enumerating.
Polynomial power_sum_accelerated(const Field& field, unsigned d, std::uint64_t k,
                                 std::uint64_t budget = kDefaultEnumerationBudget);

/// z(x, -k) = sum_{d <= B} S_d(k) x^d with B = vanishing_bound(q, k).
struct SpecialPolynomial {
  Field field;
  std::uint64_t k = 0;
  std::vector<Polynomial> coefficients;  // S_0(k) .. S_B(k)
  /// True when S_{B+1}(k) = 0 was confirmed by enumeration.
  bool guard_checked = false;

  std::size_t bound() const { return coefficients.size() - 1; }
};

/// Throws BudgetError if some S_d(k), d <= B, cannot be enumerated. The guard
/// check runs whenever q^{B+1} is within budget.
SpecialPolynomial special_polynomial(const Field& field, std::uint64_t k,
                                     std::uint64_t budget = kDefaultEnumerationBudget);

/// The special polynomial's coefficients as exact elements of K.
std::vector<LaurentSeries> as_series(const SpecialPolynomial& z);

/// A_0(y) .. A_D(y) with A_d(y) = sum over monic a of degree d of <a>^{-y},
/// each to absolute precision >= prec (theta-units). Throws PrecisionError
/// when a truncated y cannot deliver prec.
std::vector<LaurentSeries> zeta_series(const Field& field, const PAdicDigits& y, unsigned max_degree,
                                       std::int64_t prec, std::uint64_t budget = kDefaultEnumerationBudget);

/// sum of a^{-k} over all monic a, to absolute precision >= prec. Strata of
/// degree d have valuation >= d k, which fixes the degree cutoff.
LaurentSeries zeta_value_positive(const Field& field, std::uint64_t k, std::int64_t prec,
                                  std::uint64_t budget = kDefaultEnumerationBudget);

/// sum_d S_d(k) x^d truncated at x^D as an XSeries.
XSeries power_sum_series(const Field& field, std::uint64_t k, unsigned max_degree,
                         std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace ramify

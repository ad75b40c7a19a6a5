#pragma once

#include "ramify/localfield/laurent_series.hpp"
#include "ramify/localfield/padic_digits.hpp"

namespace ramify {

/// u^y for a one-unit u and y in Z_p, as the product over base-q digits of
/// (u^{q^i})^{c_i}. A Full tail contributes (u^{q^L})^{-1} exactly; a
/// Truncated tail caps the precision at q^L * v(u - 1). The base of y must
/// be a power of the residue characteristic.
LaurentSeries one_unit_power(const LaurentSeries& u, const PAdicDigits& y,
                             std::int64_t relative_precision = kDefaultRelativePrecision);

}  // namespace ramify

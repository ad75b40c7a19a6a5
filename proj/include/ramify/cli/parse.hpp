#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ramify/algebra/polynomial.hpp"
#include "ramify/localfield/laurent_series.hpp"
#include "ramify/localfield/padic_digits.hpp"
#include "ramify/sq/sq.hpp"

namespace ramify {

/// A field element: an integer below p, or colon-separated little-endian
/// base-p digits ("1:1" is 1 + g). Throws ParseError.
Elem parse_element(const Field& field, const std::string& text);

/// Terms "c*t^e", "c*t", "t^e", "t" or "c" joined by '+'; blanks ignored.
/// Repeated exponents add up. Throws ParseError.
Polynomial parse_polynomial(const Field& field, const std::string& text);

/// Same grammar with signed exponents, read as an element of K. A term
/// "O(t^-N)" truncates the series: it is then known modulo theta^{-N}.
LaurentSeries parse_laurent(const LocalField& lf, const std::string& text);

/// ';'-separated coefficients of x^0, x^1, ...; an empty item is zero.
std::vector<LaurentSeries> parse_local_polynomial(const LocalField& lf, const std::string& text);

/// "0>1,1>0"; "id" or "" is the identity.
DigitPermutation parse_permutation(const std::string& text);

/// Little-endian base-q digits "d0,d1,...", optionally followed by
/// ";zero", ";full" or ";trunc" (the default).
PAdicDigits parse_digits(std::uint64_t q, const std::string& text);

std::int64_t parse_integer(const std::string& text);

}  // namespace ramify

#pragma once

#include <cstdint>
#include <ostream>

#include <boost/rational.hpp>

namespace ramify {

using Rational = boost::rational<std::int64_t>;

inline bool is_integral(const Rational& r) { return r.denominator() == 1; }

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace ramify

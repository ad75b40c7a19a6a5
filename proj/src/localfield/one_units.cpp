#include "ramify/localfield/one_units.hpp"

#include "ramify/error.hpp"

namespace ramify {

namespace {

// log_p(q), or throws if q is not a power of p.
unsigned frobenius_steps(std::uint64_t q, std::uint64_t p) {
  unsigned s = 0;
  while (q > 1 && q % p == 0) {
    q /= p;
    ++s;
  }
  if (q != 1 || s == 0) throw PreconditionError("digit base is not a power of the residue characteristic");
  return s;
}

}  // namespace

LaurentSeries one_unit_power(const LaurentSeries& u, const PAdicDigits& y, std::int64_t relative_precision) {
  const LocalField& lf = u.field();
  const LaurentSeries one = LaurentSeries::one(lf);
  const LaurentSeries diff = u - one;
  if (u.is_zero() || u.valuation() != 0 || diff.valuation() < 1)
    throw PreconditionError("one_unit_power needs a one-unit (v(u - 1) >= 1)");
  const unsigned steps = frobenius_steps(y.base(), lf.residue().characteristic());

  LaurentSeries result = one;
  LaurentSeries uq = u;  // u^{q^i}
  for (std::size_t i = 0; i < y.length(); ++i) {
    const std::uint64_t c = y.digits()[i];
    if (c) result *= pow(uq, static_cast<std::int64_t>(c), relative_precision);
    for (unsigned s = 0; s < steps; ++s) uq = uq.frobenius();
  }
  switch (y.tail()) {
    case Tail::Zero:
      break;
    case Tail::Full:
      // sum_{i >= L} (q-1) q^i = -q^L in Z_p.
      result *= inv(uq, relative_precision);
      break;
    case Tail::Truncated: {
      // The omitted factor is u^{q^L z} = 1 + O(pi^{q^L v(u-1)}).
      const std::int64_t bound = (uq - one).valuation();
      result = result.truncated(bound);
      break;
    }
  }
  return result;
}

}  // namespace ramify

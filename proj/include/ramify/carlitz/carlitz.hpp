#pragma once

#include <cstdint>
#include <vector>

#include "ramify/algebra/polynomial.hpp"
#include "ramify/localfield/laurent_series.hpp"
#include "ramify/rational.hpp"

namespace ramify {

/// K_1 = K(xi) as the tame field with pi^{q-1} = -1/theta (e = 1 when q = 2),
/// and theta_1 = 1/pi, so theta_1^{q-1} = -theta.
struct PeriodContext {
  Field base;
  LocalField k1;
  std::int64_t precision = 64;  // relative, in theta-units
};

PeriodContext make_period_context(const Field& base, std::int64_t precision);

/// theta_1 * theta * prod_{i >= 1, q^i - 1 <= precision} (1 - theta^{1-q^i})^{-1}.
LaurentSeries carlitz_period(const PeriodContext& ctx);

/// Image of a series over K = F_q((1/theta)) in a tame field with the same residue field.
LaurentSeries embed_unramified(const LaurentSeries& s, const LocalField& target);

/// D_0 .. D_n with D_i = (theta^{q^i} - theta) D_{i-1}^q.
std::vector<Polynomial> carlitz_denominators(const Field& base, unsigned n);

/// sum_i z^{q^i} / D_i to absolute precision prec (theta-units); terms are
/// kept while their valuation q^i (v(z) + i) is below prec. The result's
/// precision also reflects the precision of z. Throws PreconditionError when
/// the term valuations fail to climb past prec.
LaurentSeries carlitz_exp(const LaurentSeries& z, std::int64_t prec);

struct PeriodReport {
  LaurentSeries period;
  Rational valuation;
  bool valuation_ok = false;      // v = -q/(q-1)
  bool power_in_k = false;        // xi^{q-1} only has exponents divisible by q-1
  LaurentSeries exp_at_period;
  Rational exp_valuation;
  bool exp_vanishes = false;      // v(exp_C(xi)) >= prec
};

PeriodReport period_checks(const Field& base, std::int64_t prec);

}  // namespace ramify

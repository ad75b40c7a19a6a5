#include "ramify/carlitz/carlitz.hpp"

#include "ramify/error.hpp"

namespace ramify {

PeriodContext make_period_context(const Field& base, std::int64_t precision) {
  if (precision < 1) throw PreconditionError("period precision must be positive");
  const auto q = static_cast<std::int64_t>(base.order());
  PeriodContext ctx;
  ctx.base = base;
  ctx.k1 = q == 2 ? LocalField(base) : LocalField(base, q - 1, base.neg(1));
  ctx.precision = precision;
  return ctx;
}

LaurentSeries embed_unramified(const LaurentSeries& s, const LocalField& target) {
  const LocalField& lf = s.field();
  if (lf.ramification() != 1 || !(lf.residue() == target.residue()))
    throw PreconditionError("source must be unramified over the same residue field");
  const Field& F = target.residue();
  const std::int64_t e = target.ramification();
  const Elem cinv = F.inv(target.twist());
  const auto prec = s.is_exact() ? kExactPrecision : s.precision() * e;
  if (s.is_zero()) return LaurentSeries::zero(target, prec);
  const auto& a = s.coefficients();
  std::vector<Elem> out((a.size() - 1) * static_cast<std::size_t>(e) + 1, 0);
  const std::int64_t v0 = s.leading_exponent();
  // theta^{-j} = c^{-j} pi^{e j}
  Elem scale = v0 >= 0 ? F.pow(cinv, static_cast<std::uint64_t>(v0)) : F.pow(target.twist(), static_cast<std::uint64_t>(-v0));
  for (std::size_t j = 0; j < a.size(); ++j) {
    out[j * static_cast<std::size_t>(e)] = F.mul(a[j], scale);
    scale = F.mul(scale, cinv);
  }
  return LaurentSeries::from_coefficients(target, v0 * e, std::move(out), prec);
}

LaurentSeries carlitz_period(const PeriodContext& ctx) {
  const Field& F = ctx.base;
  const auto q = static_cast<std::int64_t>(F.order());
  LocalField K(F);
  const std::int64_t rel = ctx.precision + 1;
  LaurentSeries unit = LaurentSeries::one(K).truncated(rel);
  for (std::int64_t qi = q; qi - 1 <= ctx.precision; qi *= q) {
    const auto factor = LaurentSeries::one(K) - LaurentSeries::theta_power(K, 1 - qi);
    unit = (unit * inv(factor, rel)).truncated(rel);
  }
  const LocalField& k1 = ctx.k1;
  const auto theta1 = LaurentSeries::monomial(k1, 1, -1);
  return theta1 * LaurentSeries::theta_power(k1, 1) * embed_unramified(unit, k1);
}

std::vector<Polynomial> carlitz_denominators(const Field& base, unsigned n) {
  const auto q = base.order();
  std::vector<Polynomial> d{Polynomial::constant(base, 1)};
  for (unsigned i = 1; i <= n; ++i) {
    const auto bracket = Polynomial::monomial(base, 1, checked_pow(q, i)) - Polynomial::variable(base);
    d.push_back(bracket * pow(d.back(), q));
  }
  return d;
}

LaurentSeries carlitz_exp(const LaurentSeries& z, std::int64_t prec) {
  const LocalField& lf = z.field();
  const Field& F = lf.residue();
  const std::int64_t e = lf.ramification();
  const auto q = static_cast<std::int64_t>(F.order());
  const std::int64_t target = prec * e;
  if (z.is_zero()) return LaurentSeries::zero(lf, std::min(z.precision(), target));
  const std::int64_t vz = z.valuation();

  LaurentSeries sum = LaurentSeries::zero(lf, target);
  LaurentSeries zq = z;  // z^{q^i}
  Polynomial D = Polynomial::constant(F, 1);
  std::int64_t qi = 1;
  for (std::int64_t i = 0;; ++i) {
    if (i > 0) {
      for (unsigned s = 0; s < F.degree(); ++s) zq = zq.frobenius();
      D = (Polynomial::monomial(F, 1, static_cast<std::size_t>(qi)) - Polynomial::variable(F)) * pow(D, q);
    }
    // v_pi(z^{q^i} / D_i) = q^i (v(z) + e i), increasing once v(z) + e i > 0
    const std::int64_t v = qi * (vz + e * i);
    if (v < target)
      sum += (zq * inv(LaurentSeries::from_polynomial(lf, D), target - v)).truncated(target);
    else if (vz + e * i > 0)
      break;
    if (qi > (std::int64_t{1} << 40) / q) throw PreconditionError("Carlitz exponential: argument too large");
    qi *= q;
  }
  return sum;
}

PeriodReport period_checks(const Field& base, std::int64_t prec) {
  const auto q = static_cast<std::int64_t>(base.order());
  const PeriodContext ctx = make_period_context(base, prec + 2);
  PeriodReport r;
  r.period = carlitz_period(ctx);
  r.valuation = r.period.normalized_valuation();
  r.valuation_ok = r.valuation == Rational(-q, q - 1);
  const auto power = pow(r.period, q - 1, r.period.relative_precision());
  const std::int64_t e = ctx.k1.ramification();
  r.power_in_k = true;
  for (std::size_t j = 0; j < power.coefficients().size(); ++j)
    if (power.coefficients()[j] != 0 && (power.leading_exponent() + static_cast<std::int64_t>(j)) % e != 0)
      r.power_in_k = false;
  r.exp_at_period = carlitz_exp(r.period, prec);
  r.exp_valuation = r.exp_at_period.normalized_valuation();
  r.exp_vanishes = r.exp_valuation >= Rational(prec);
  return r;
}

}  // namespace ramify

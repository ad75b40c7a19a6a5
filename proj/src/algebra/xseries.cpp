#include "ramify/algebra/xseries.hpp"

#include "ramify/error.hpp"

namespace ramify {

XSeries xseries_one(const Field& field, unsigned max_degree) {
  XSeries s(max_degree + 1, Polynomial(field));
  s[0] = Polynomial::constant(field, 1);
  return s;
}

XSeries xseries_mul(const XSeries& a, const XSeries& b) {
  if (a.size() != b.size()) throw PreconditionError("x-series truncation mismatch");
  const Field& F = a[0].field().valid() ? a[0].field() : b[0].field();
  XSeries out(a.size(), Polynomial(F));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < a.size(); ++j)
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
  }
  return out;
}

XSeries xseries_pow(const XSeries& a, std::uint64_t k) {
  XSeries result = xseries_one(a[0].field(), static_cast<unsigned>(a.size() - 1));
  XSeries base = a;
  while (k) {
    if (k & 1) result = xseries_mul(result, base);
    k >>= 1;
    if (k) base = xseries_mul(base, base);
  }
  return result;
}

XSeries xseries_mapped(const XSeries& a, const Embedding& e) {
  XSeries out;
  out.reserve(a.size());
  for (const auto& c : a) out.push_back(c.is_zero() ? Polynomial(e.target()) : c.mapped(e));
  return out;
}

std::uint64_t binomial_mod(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n || k) {
    std::uint64_t ni = n % p, ki = k % p;
    if (ki > ni) return 0;
    // C(ni, ki) mod p with ni < p.
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t i = 0; i < ki; ++i) {
      num = num * ((ni - i) % p) % p;
      den = den * ((i + 1) % p) % p;
    }
    // den^{-1} by Fermat.
    std::uint64_t inv = 1, b = den, e = p - 2;
    while (e) {
      if (e & 1) inv = inv * b % p;
      b = b * b % p;
      e >>= 1;
    }
    r = r * (num * inv % p) % p;
    n /= p;
    k /= p;
  }
  return r;
}

namespace {

XSeries power_series_in(const Polynomial& c, unsigned step, unsigned max_degree, bool inverse, std::uint64_t m) {
  const Field& F = c.field();
  const auto p = F.characteristic();
  XSeries out(max_degree + 1, Polynomial(F));
  Polynomial cn = Polynomial::constant(F, 1);
  for (std::uint64_t n = 0; n * step <= max_degree; ++n) {
    if (!inverse && n > m) break;
    // (1 - T)^{-m} = sum C(m+n-1, n) T^n;  (1 - T)^m = sum (-1)^n C(m, n) T^n.
    std::uint64_t b = inverse ? (m == 0 ? (n == 0) : binomial_mod(m + n - 1, n, p)) : binomial_mod(m, n, p);
    Elem coef = F.from_int(static_cast<std::int64_t>(b));
    if (!inverse && (n & 1)) coef = F.neg(coef);
    if (coef != 0) out[n * step] += cn.scaled(coef);
    cn *= c;
  }
  return out;
}

}  // namespace

XSeries geometric_power(const Polynomial& c, unsigned step, std::uint64_t m, unsigned max_degree) {
  if (step == 0) throw PreconditionError("geometric factor needs a positive x-degree");
  return power_series_in(c, step, max_degree, true, m);
}

XSeries binomial_power(const Polynomial& c, unsigned step, std::uint64_t m, unsigned max_degree) {
  if (step == 0) throw PreconditionError("binomial factor needs a positive x-degree");
  return power_series_in(c, step, max_degree, false, m);
}

long first_mismatch(const XSeries& a, const XSeries& b) {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const bool az = i >= a.size() || a[i].is_zero();
    const bool bz = i >= b.size() || b[i].is_zero();
    if (az && bz) continue;
    if (az != bz || !(a[i] == b[i])) return static_cast<long>(i);
  }
  return -1;
}

}  // namespace ramify

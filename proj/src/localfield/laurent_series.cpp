#include "ramify/localfield/laurent_series.hpp"

#include <algorithm>
#include <numeric>

#include "ramify/error.hpp"

namespace ramify {

namespace {

std::int64_t sat_add(std::int64_t a, std::int64_t b) {
  if (a >= kExactPrecision || b >= kExactPrecision) return kExactPrecision;
  return a + b;
}

}  // namespace

LocalField::LocalField(Field residue, std::int64_t ramification, Elem twist)
    : residue_(std::move(residue)), e_(ramification), twist_(twist) {
  if (e_ < 1) throw PreconditionError("ramification index must be positive");
  if (std::gcd(static_cast<std::uint64_t>(e_), residue_.characteristic()) != 1)
    throw PreconditionError("only tame ramification (e prime to p) is representable");
  if (twist_ == 0 || twist_ >= residue_.order()) throw PreconditionError("twist constant must be a nonzero residue");
  if (e_ == 1 && twist_ != 1) throw PreconditionError("unramified local field needs twist 1");
}

LocalField LocalField::extended(const Embedding& e) const {
  if (!(e.source() == residue_)) throw PreconditionError("embedding does not start at the residue field");
  return LocalField(e.target(), e_, e(twist_));
}

void LaurentSeries::normalize() {
  if (prec_ >= kExactPrecision) prec_ = kExactPrecision;
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
    v0_ += static_cast<std::int64_t>(lead);
  }
  if (prec_ < kExactPrecision) {
    if (prec_ <= v0_) {
      coeffs_.clear();
    } else if (static_cast<std::int64_t>(coeffs_.size()) > prec_ - v0_) {
      coeffs_.resize(static_cast<std::size_t>(prec_ - v0_));
    }
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) v0_ = 0;
}

LaurentSeries LaurentSeries::zero(const LocalField& lf, std::int64_t precision) {
  LaurentSeries s;
  s.lf_ = lf;
  s.prec_ = precision;
  s.normalize();
  return s;
}

LaurentSeries LaurentSeries::constant(const LocalField& lf, Elem c) { return monomial(lf, c, 0); }

LaurentSeries LaurentSeries::monomial(const LocalField& lf, Elem c, std::int64_t exponent) {
  return from_coefficients(lf, exponent, {c});
}

LaurentSeries LaurentSeries::theta_power(const LocalField& lf, std::int64_t j, Elem c) {
  const Field& F = lf.residue();
  Elem t = j >= 0 ? F.pow(lf.twist(), static_cast<std::uint64_t>(j)) : F.pow(F.inv(lf.twist()), static_cast<std::uint64_t>(-j));
  return monomial(lf, F.mul(c, t), -lf.ramification() * j);
}

LaurentSeries LaurentSeries::from_coefficients(const LocalField& lf, std::int64_t v0, std::vector<Elem> coeffs,
                                               std::int64_t precision) {
  for (auto c : coeffs)
    if (c >= lf.residue().order()) throw PreconditionError("series coefficient outside the residue field");
  LaurentSeries s;
  s.lf_ = lf;
  s.v0_ = v0;
  s.coeffs_ = std::move(coeffs);
  s.prec_ = precision;
  s.normalize();
  return s;
}

LaurentSeries LaurentSeries::from_polynomial(const LocalField& lf, const Polynomial& a) {
  if (a.is_zero()) return zero(lf);
  if (!(a.field() == lf.residue())) throw PreconditionError("polynomial field differs from residue field");
  const Field& F = lf.residue();
  const std::int64_t e = lf.ramification();
  const std::int64_t d = a.degree();
  // theta^j = twist^j pi^{-e j}; exponents run from -e d upward.
  std::vector<Elem> c(static_cast<std::size_t>(e * d + 1), 0);
  Elem tw = 1;
  for (std::int64_t j = 0; j <= d; ++j) {
    c[static_cast<std::size_t>(e * (d - j))] = F.mul(a[static_cast<std::size_t>(j)], tw);
    tw = F.mul(tw, lf.twist());
  }
  return from_coefficients(lf, -e * d, std::move(c));
}

std::int64_t LaurentSeries::relative_precision() const {
  if (is_exact()) return kExactPrecision;
  return prec_ - valuation();
}

Elem LaurentSeries::coefficient(std::int64_t exponent) const {
  if (exponent >= prec_) throw PrecisionError("coefficient requested beyond known precision");
  if (exponent < v0_ || exponent >= v0_ + static_cast<std::int64_t>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - v0_)];
}

LaurentSeries LaurentSeries::truncated(std::int64_t n) const {
  if (n >= prec_) return *this;
  LaurentSeries s = *this;
  s.prec_ = n;
  s.normalize();
  return s;
}

LaurentSeries LaurentSeries::shifted(std::int64_t k) const {
  LaurentSeries s = *this;
  if (!s.coeffs_.empty()) s.v0_ += k;
  s.prec_ = sat_add(s.prec_, k);
  return s;
}

LaurentSeries LaurentSeries::scaled(Elem c) const {
  if (c == 0) return zero(lf_, prec_ >= kExactPrecision ? kExactPrecision : prec_);
  LaurentSeries s = *this;
  for (auto& x : s.coeffs_) x = lf_.residue().mul(c, x);
  return s;
}

LaurentSeries LaurentSeries::frobenius() const {
  const Field& F = lf_.residue();
  const auto p = static_cast<std::int64_t>(F.characteristic());
  LaurentSeries s;
  s.lf_ = lf_;
  s.prec_ = is_exact() ? kExactPrecision : prec_ * p;
  if (!coeffs_.empty()) {
    s.v0_ = v0_ * p;
    s.coeffs_.assign((coeffs_.size() - 1) * static_cast<std::size_t>(p) + 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) s.coeffs_[i * static_cast<std::size_t>(p)] = F.frobenius(coeffs_[i]);
  }
  s.normalize();
  return s;
}

LaurentSeries LaurentSeries::mapped(const Embedding& e) const {
  LaurentSeries s;
  s.lf_ = lf_.extended(e);
  s.v0_ = v0_;
  s.prec_ = prec_;
  s.coeffs_.resize(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) s.coeffs_[i] = e(coeffs_[i]);
  s.normalize();
  return s;
}

LaurentSeries LaurentSeries::operator-() const {
  LaurentSeries s = *this;
  for (auto& x : s.coeffs_) x = lf_.residue().neg(x);
  return s;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
  if (!(lf_ == o.lf_)) throw PreconditionError("series descriptor mismatch");
  const Field& F = lf_.residue();
  const std::int64_t n = std::min(prec_, o.prec_);
  if (o.coeffs_.empty()) {
    prec_ = n;
    normalize();
    return *this;
  }
  if (coeffs_.empty()) {
    std::int64_t keep = n;
    *this = o;
    prec_ = keep;
    normalize();
    return *this;
  }
  const std::int64_t lo = std::min(v0_, o.v0_);
  std::int64_t hi = std::max(v0_ + static_cast<std::int64_t>(coeffs_.size()), o.v0_ + static_cast<std::int64_t>(o.coeffs_.size()));
  if (n < kExactPrecision) hi = std::min(hi, n);
  if (hi <= lo) {
    coeffs_.clear();
    prec_ = n;
    normalize();
    return *this;
  }
  std::vector<Elem> out(static_cast<std::size_t>(hi - lo), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    std::int64_t k = v0_ + static_cast<std::int64_t>(i) - lo;
    if (k < hi - lo) out[static_cast<std::size_t>(k)] = coeffs_[i];
  }
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
    std::int64_t k = o.v0_ + static_cast<std::int64_t>(i) - lo;
    if (k < hi - lo) out[static_cast<std::size_t>(k)] = F.add(out[static_cast<std::size_t>(k)], o.coeffs_[i]);
  }
  coeffs_ = std::move(out);
  v0_ = lo;
  prec_ = n;
  normalize();
  return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o) { return *this += -o; }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  if (!(a.lf_ == b.lf_)) throw PreconditionError("series descriptor mismatch");
  const Field& F = a.lf_.residue();
  const std::int64_t n = std::min(sat_add(a.prec_, b.valuation()), sat_add(b.prec_, a.valuation()));
  LaurentSeries s;
  s.lf_ = a.lf_;
  s.prec_ = n;
  if (a.coeffs_.empty() || b.coeffs_.empty()) {
    s.normalize();
    return s;
  }
  s.v0_ = a.v0_ + b.v0_;
  std::size_t len = a.coeffs_.size() + b.coeffs_.size() - 1;
  if (n < kExactPrecision) {
    std::int64_t cap = n - s.v0_;
    if (cap <= 0) {
      s.normalize();
      return s;
    }
    len = std::min<std::size_t>(len, static_cast<std::size_t>(cap));
  }
  s.coeffs_.assign(len, 0);
  for (std::size_t i = 0; i < a.coeffs_.size() && i < len; ++i) {
    const Elem x = a.coeffs_[i];
    if (x == 0) continue;
    const std::size_t jmax = std::min(b.coeffs_.size(), len - i);
    Elem* dst = s.coeffs_.data() + i;
    for (std::size_t j = 0; j < jmax; ++j) {
      const Elem y = b.coeffs_[j];
      if (y != 0) dst[j] = F.add(dst[j], F.mul(x, y));
    }
  }
  s.normalize();
  return s;
}

LaurentSeries& LaurentSeries::operator*=(const LaurentSeries& o) { return *this = *this * o; }

LaurentSeries inv(const LaurentSeries& x, std::int64_t relative_precision) {
  if (x.is_zero()) throw PrecisionError("cannot invert a series that is zero to its known precision");
  const LocalField& lf = x.field();
  const Field& F = lf.residue();
  const auto& a = x.coefficients();
  const Elem inv0 = F.inv(a.front());
  if (x.is_exact() && a.size() == 1) return LaurentSeries::monomial(lf, inv0, -x.valuation());
  const std::int64_t r = x.is_exact() ? relative_precision : x.relative_precision();
  if (r < 1) throw PrecisionError("inverse needs at least one known coefficient");
  std::vector<Elem> b(static_cast<std::size_t>(r), 0);
  b[0] = inv0;
  const Elem ninv0 = F.neg(inv0);
  for (std::size_t k = 1; k < b.size(); ++k) {
    Elem acc = 0;
    const std::size_t imax = std::min(k, a.size() - 1);
    for (std::size_t i = 1; i <= imax; ++i)
      if (a[i] != 0 && b[k - i] != 0) acc = F.add(acc, F.mul(a[i], b[k - i]));
    b[k] = F.mul(ninv0, acc);
  }
  return LaurentSeries::from_coefficients(lf, -x.valuation(), std::move(b), -x.valuation() + r);
}

LaurentSeries div(const LaurentSeries& a, const LaurentSeries& b, std::int64_t relative_precision) {
  return a * inv(b, relative_precision);
}

LaurentSeries pow(const LaurentSeries& x, std::int64_t k, std::int64_t relative_precision) {
  if (k < 0) return inv(pow(x, -k, relative_precision), relative_precision);
  LaurentSeries result = LaurentSeries::one(x.field());
  LaurentSeries base = x;
  while (k) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

std::int64_t agreement(const LaurentSeries& a, const LaurentSeries& b) {
  LaurentSeries d = a - b;
  return d.is_zero() ? d.precision() : d.valuation();
}

LaurentSeries bracket(const Polynomial& a) {
  if (a.is_zero() || !a.is_monic()) throw PreconditionError("bracket needs a monic polynomial");
  const auto& c = a.coefficients();
  std::vector<Elem> rev(c.rbegin(), c.rend());
  return LaurentSeries::from_coefficients(LocalField(a.field()), 0, std::move(rev));
}

}  // namespace ramify

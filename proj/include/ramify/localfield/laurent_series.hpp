#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "ramify/algebra/embedding.hpp"
#include "ramify/algebra/field.hpp"
#include "ramify/algebra/polynomial.hpp"
#include "ramify/rational.hpp"

namespace ramify {

/// Absolute precision of an exact (finitely supported, fully known) series.
inline constexpr std::int64_t kExactPrecision = std::int64_t{1} << 60;
inline constexpr std::int64_t kDefaultRelativePrecision = 64;

/// F_Q((pi)) with pi^e = c * theta^{-1}, e prime to p.
///
/// e = 1 (which forces c = 1) gives the unramified fields F_Q((1/theta)),
/// including K itself when Q = q.
class LocalField {
 public:
  LocalField() = default;
  explicit LocalField(Field residue, std::int64_t ramification = 1, Elem twist = 1);

  const Field& residue() const { return residue_; }
  std::int64_t ramification() const { return e_; }
  Elem twist() const { return twist_; }
  /// Same ramification data over a larger residue field.
  LocalField extended(const Embedding& e) const;

  friend bool operator==(const LocalField& a, const LocalField& b) {
    return a.e_ == b.e_ && a.twist_ == b.twist_ && a.residue_ == b.residue_;
  }

 private:
  Field residue_;
  std::int64_t e_ = 1;
  Elem twist_ = 1;
};

/// Truncated Laurent series sum_{j >= v0} a_j pi^j known modulo pi^N.
///
/// All exponents and precisions are in pi-units; normalized theta-valuations
/// divide by the ramification index. The stored window never contains
/// leading or trailing zeros, so coefficients between the window end and N
/// are known to be zero. Exact series carry N = kExactPrecision.
class LaurentSeries {
 public:
  LaurentSeries() = default;

  static LaurentSeries zero(const LocalField& lf, std::int64_t precision = kExactPrecision);
  static LaurentSeries constant(const LocalField& lf, Elem c);
  static LaurentSeries one(const LocalField& lf) { return constant(lf, 1); }
  /// c * pi^exponent.
  static LaurentSeries monomial(const LocalField& lf, Elem c, std::int64_t exponent);
  /// c * theta^j, i.e. c * twist^j * pi^{-e j}.
  static LaurentSeries theta_power(const LocalField& lf, std::int64_t j, Elem c = 1);
  static LaurentSeries from_coefficients(const LocalField& lf, std::int64_t v0, std::vector<Elem> coeffs,
                                         std::int64_t precision = kExactPrecision);
  /// Image of a in F[theta] (F the residue field), exact.
  static LaurentSeries from_polynomial(const LocalField& lf, const Polynomial& a);

  const LocalField& field() const { return lf_; }
  bool is_exact() const { return prec_ >= kExactPrecision; }
  /// True when every known coefficient vanishes.
  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t precision() const { return prec_; }
  /// Leading exponent; for a zero series this is the precision.
  std::int64_t valuation() const { return coeffs_.empty() ? prec_ : v0_; }
  Rational normalized_valuation() const { return Rational(valuation(), lf_.ramification()); }
  std::int64_t relative_precision() const;
  /// Exponent of the first stored coefficient (equals valuation when nonzero).
  std::int64_t leading_exponent() const { return v0_; }
  const std::vector<Elem>& coefficients() const { return coeffs_; }
  Elem leading_coefficient() const { return coeffs_.empty() ? 0 : coeffs_.front(); }
  /// Throws PrecisionError for exponents at or beyond the precision.
  Elem coefficient(std::int64_t exponent) const;

  /// Forget everything at exponents >= n (no-op if already coarser).
  LaurentSeries truncated(std::int64_t n) const;
  LaurentSeries with_relative_precision(std::int64_t r) const { return truncated(valuation() + r); }
  /// Multiply by pi^k.
  LaurentSeries shifted(std::int64_t k) const;
  LaurentSeries scaled(Elem c) const;
  /// The p-th power map.
  LaurentSeries frobenius() const;
  /// Apply a residue-field embedding coefficientwise.
  LaurentSeries mapped(const Embedding& e) const;

  LaurentSeries operator-() const;
  LaurentSeries& operator+=(const LaurentSeries& o);
  LaurentSeries& operator-=(const LaurentSeries& o);
  LaurentSeries& operator*=(const LaurentSeries& o);
  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  /// Structural equality: same field, window and precision.
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    return a.lf_ == b.lf_ && a.prec_ == b.prec_ && a.coeffs_ == b.coeffs_ && (a.coeffs_.empty() || a.v0_ == b.v0_);
  }

 private:
  void normalize();
  LocalField lf_;
  std::int64_t v0_ = 0;
  std::vector<Elem> coeffs_;
  std::int64_t prec_ = kExactPrecision;
};

/// Inverse. Relative precision is kept; exact non-monomial inputs are
/// expanded to `relative_precision` digits. Throws PrecisionError when the
/// input is zero to its known precision.
LaurentSeries inv(const LaurentSeries& x, std::int64_t relative_precision = kDefaultRelativePrecision);
LaurentSeries div(const LaurentSeries& a, const LaurentSeries& b,
                  std::int64_t relative_precision = kDefaultRelativePrecision);
LaurentSeries pow(const LaurentSeries& x, std::int64_t k, std::int64_t relative_precision = kDefaultRelativePrecision);

/// The largest N such that a - b is known to vanish modulo pi^N (capped by
/// both precisions). kExactPrecision for equal exact series.
std::int64_t agreement(const LaurentSeries& a, const LaurentSeries& b);

/// <a> = a * theta^{-deg a} for monic a over F_q, an exact one-unit of K.
LaurentSeries bracket(const Polynomial& a);

}  // namespace ramify

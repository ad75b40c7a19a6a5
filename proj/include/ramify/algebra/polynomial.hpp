#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ramify/algebra/field.hpp"

namespace ramify {

class Embedding;

/// Dense univariate polynomial over a finite field, constant term first.
/// The zero polynomial has an empty coefficient vector and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Field field) : field_(std::move(field)) {}
  Polynomial(Field field, std::vector<Elem> coeffs);

  static Polynomial constant(const Field& field, Elem c);
  static Polynomial monomial(const Field& field, Elem c, std::size_t degree);
  /// The indeterminate (theta when the polynomial lives in A = F_q[theta]).
  static Polynomial variable(const Field& field) { return monomial(field, 1, 1); }

  const Field& field() const { return field_; }
  const std::vector<Elem>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Elem leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  Elem operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  std::size_t nonzero_terms() const;

  Elem evaluate(Elem x) const;
  Polynomial derivative() const;
  /// The p-th power map: coefficients raised to p, exponents multiplied by p.
  Polynomial frobenius() const;
  Polynomial scaled(Elem c) const;
  Polynomial shifted(std::size_t k) const;  // multiply by X^k
  Polynomial truncated(std::size_t len) const;
  Polynomial monic() const;
  Polynomial mapped(const Embedding& e) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_ && (a.coeffs_.empty() || a.field_ == b.field_);
  }

 private:
  void normalize();
  Field field_;
  std::vector<Elem> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

/// Euclidean division; throws PreconditionError when the divisor is zero.
DivMod divmod(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero if both inputs are zero).
Polynomial gcd(Polynomial a, Polynomial b);
/// a^k; uses the base-p digits of k and the sparse Frobenius images of a.
Polynomial pow(const Polynomial& a, std::uint64_t k);
Polynomial powmod(Polynomial a, std::uint64_t k, const Polynomial& m);
/// Inverse of a modulo m; throws PreconditionError if not coprime.
Polynomial invmod(const Polynomial& a, const Polynomial& m);

/// Distinct-degree irreducibility test. Requires f monic of degree >= 1.
bool is_irreducible(const Polynomial& f);
bool is_squarefree(const Polynomial& f);

/// Key of a polynomial with deg < len in base-q counting order.
std::uint64_t polynomial_key(const Polynomial& f);

/// "t^2+t+1"; extension-field coefficients are printed as "c0:c1:..." digits.
std::string to_string(const Polynomial& f, const std::string& var = "t");

}  // namespace ramify

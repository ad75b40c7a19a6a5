#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace ramify {

/// A finite-field element, stored as its canonical key: the base-p integer
/// sum c_i p^i of its coefficient vector over the prime field (c_0 least
/// significant) with respect to the owning field's modulus.
using Elem = std::uint64_t;

inline constexpr unsigned kDefaultMaxFieldDegree = 12;
inline constexpr std::uint64_t kDefaultDlogBound = std::uint64_t{1} << 20;

/// Canonical finite field F_{p^n}.
///
/// The modulus is the monic irreducible of degree n over Z/p whose
/// non-leading coefficients form the smallest base-p integer. Two fields with
/// the same (p, n) are therefore identical, which makes every downstream
/// coefficient reproducible bit for bit. Handles are cheap to copy and share
/// one immutable table set.
class Field {
 public:
  Field() = default;

  /// Throws PreconditionError for non-prime p, n outside [1, max_degree], or
  /// an order that does not fit the element key.
  static Field make(std::uint64_t p, unsigned n, unsigned max_degree = kDefaultMaxFieldDegree);

  bool valid() const { return static_cast<bool>(impl_); }
  std::uint64_t characteristic() const;
  unsigned degree() const;
  std::uint64_t order() const;
  /// Coefficients c_0..c_n of the modulus, c_n = 1.
  std::span<const std::uint64_t> modulus() const;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  /// The class of the indeterminate u; zero for a prime field (modulus u).
  Elem generator() const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  /// a^p.
  Elem frobenius(Elem a) const;
  /// Image of an integer in the prime subfield.
  Elem from_int(std::int64_t v) const;
  bool in_prime_field(Elem a) const { return a < characteristic(); }

  std::vector<std::uint64_t> digits(Elem a) const;
  Elem from_digits(std::span<const std::uint64_t> digits) const;
  /// Colon-separated little-endian digits, e.g. "1:1" for u+1 in F_4; plain
  /// integer for prime fields.
  std::string to_string(Elem a) const;

  /// The element of order q-1 with the smallest key.
  Elem primitive_element() const;
  std::uint64_t multiplicative_order(Elem a) const;
  /// t in [0, q-1) with g^t = a. Requires g primitive, a != 0 and
  /// q <= bound.
  std::uint64_t dlog(Elem g, Elem a, std::uint64_t bound = kDefaultDlogBound) const;

  /// Prime factors of q-1, ascending.
  std::span<const std::uint64_t> unit_group_primes() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.impl_ == b.impl_ ||
           (a.impl_ && b.impl_ && a.characteristic() == b.characteristic() && a.degree() == b.degree());
  }

 private:
  struct Impl;
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

bool is_prime(std::uint64_t n);
/// Distinct prime factors, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
/// Checked integer power; throws BudgetError on overflow past 2^62.
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);

}  // namespace ramify

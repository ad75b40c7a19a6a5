#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ramify/localfield/laurent_series.hpp"
#include "ramify/localfield/padic_digits.hpp"
#include "ramify/rational.hpp"

namespace ramify {

/// A finitely supported permutation of the digit positions {0, 1, 2, ...}.
class DigitPermutation {
 public:
  DigitPermutation() = default;
  /// Pairs i -> rho(i); fixed points may be listed or omitted. Throws
  /// PreconditionError unless the listed map permutes its own domain.
  explicit DigitPermutation(const std::vector<std::pair<std::size_t, std::size_t>>& map);

  std::size_t operator()(std::size_t i) const;
  /// Smallest L with every moved position below L.
  std::size_t support_bound() const;
  bool is_identity() const { return map_.empty(); }
  const std::map<std::size_t, std::size_t>& moved() const { return map_; }

  DigitPermutation inverse() const;
  /// (this ∘ other)(i) = this(other(i)).
  DigitPermutation after(const DigitPermutation& other) const;
  /// "0>1,1>0"; "id" for the identity.
  std::string to_string() const;

  friend bool operator==(const DigitPermutation& a, const DigitPermutation& b) { return a.map_ == b.map_; }

 private:
  std::map<std::size_t, std::size_t> map_;  // moved positions only
};

/// rho_*(y) = sum c_i q^{rho(i)}. Zero and Full tails are padded as needed;
/// a Truncated y must already cover the support.
PAdicDigits act_padic(const DigitPermutation& rho, const PAdicDigits& y);
/// rho_* on an integer written in base q.
std::int64_t act_integer(const DigitPermutation& rho, std::uint64_t q, std::int64_t n);

enum class MonomialMode {
  InverseExponents,  ///< theta^{-n} -> theta^{-rho_*(n)}
  DirectExponents,   ///< theta^{n} -> theta^{rho_*(n)}
};
std::string to_string(MonomialMode m);

/// F_q-linear monomial action on a series over F_Q((1/theta)), q = Q. Exact
/// inputs map exactly. A series known mod theta^{-N} has its image known mod
/// theta^{-N'}, N' = q^L floor(N / q^L) (inverse mode) or
/// q^L (ceil(N / q^L) - 1) + 1 (direct mode), L the support bound.
LaurentSeries act_laurent(const DigitPermutation& rho, const LaurentSeries& s, MonomialMode mode);

struct OrbitPair {
  std::size_t source = 0;
  Rational source_valuation;
  std::size_t nearest = 0;
  std::optional<std::int64_t> distance;  // valuation of the difference; empty when it vanishes
  std::int64_t precision = 0;            // precision of that difference
};

struct OrbitMode {
  MonomialMode mode;
  std::vector<OrbitPair> pairs;
};

struct OrbitReport {
  std::uint64_t k = 0;
  std::uint64_t image_k = 0;
  std::vector<Rational> valuations;        // zeroes of z_k
  std::vector<Rational> image_valuations;  // zeroes of z_{rho_*(k)}
  std::vector<OrbitMode> modes;
  std::vector<std::string> notes;
};

/// Compares rho applied to the zeroes of z_k against the zeroes of
/// z_{rho_*(k)}, for both monomial actions. The report is data, not a verdict.
OrbitReport zero_orbit_experiment(const Field& field, std::uint64_t k, const DigitPermutation& rho, std::int64_t prec);

}  // namespace ramify

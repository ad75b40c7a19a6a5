#pragma once

#include <cstdint>
#include <vector>

#include "ramify/algebra/embedding.hpp"
#include "ramify/algebra/polynomial.hpp"

namespace ramify {

/// Power series in x with coefficients in F[theta], kept modulo x^{D+1}:
/// entry d is the x^d coefficient and the vector always has length D+1.
using XSeries = std::vector<Polynomial>;

XSeries xseries_one(const Field& field, unsigned max_degree);
XSeries xseries_mul(const XSeries& a, const XSeries& b);
XSeries xseries_pow(const XSeries& a, std::uint64_t k);
XSeries xseries_mapped(const XSeries& a, const Embedding& e);

/// (1 - c x^step)^{-m} modulo x^{D+1}; binomials are reduced mod p (Lucas).
XSeries geometric_power(const Polynomial& c, unsigned step, std::uint64_t m, unsigned max_degree);
/// (1 - c x^step)^{m} modulo x^{D+1}.
XSeries binomial_power(const Polynomial& c, unsigned step, std::uint64_t m, unsigned max_degree);

/// Binomial coefficient C(n, k) modulo a prime p.
std::uint64_t binomial_mod(std::uint64_t n, std::uint64_t k, std::uint64_t p);

/// Index of the first differing coefficient, or -1 when equal.
long first_mismatch(const XSeries& a, const XSeries& b);

}  // namespace ramify

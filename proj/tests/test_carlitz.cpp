#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ramify/carlitz/carlitz.hpp"
#include "ramify/error.hpp"

using namespace ramify;

namespace {

Field field_of_order(std::uint64_t q) { return q == 4 ? Field::make(2, 2) : Field::make(q, 1); }

}  // namespace

TEST_CASE("period context") {
  auto F3 = Field::make(3, 1);
  auto ctx = make_period_context(F3, 10);
  CHECK(ctx.k1.ramification() == 2);
  auto theta1 = LaurentSeries::monomial(ctx.k1, 1, -1);
  CHECK(pow(theta1, 2) == -LaurentSeries::theta_power(ctx.k1, 1));
  CHECK(make_period_context(Field::make(2, 1), 5).k1.ramification() == 1);
  auto ctx4 = make_period_context(field_of_order(4), 5);
  CHECK(pow(LaurentSeries::monomial(ctx4.k1, 1, -1), 3) == -LaurentSeries::theta_power(ctx4.k1, 1));
  CHECK_THROWS_AS(make_period_context(F3, 0), PreconditionError);
}

TEST_CASE("embedding K into K_1") {
  auto F3 = Field::make(3, 1);
  auto ctx = make_period_context(F3, 10);
  LocalField K(F3);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<Elem> c(0, 2);
  for (int t = 0; t < 20; ++t) {
    std::vector<Elem> a(6), b(6);
    for (auto& x : a) x = c(rng);
    for (auto& x : b) x = c(rng);
    a[0] = b[0] = 1;
    auto x = LaurentSeries::from_coefficients(K, -2, a, 8);
    auto y = LaurentSeries::from_coefficients(K, 1, b, 9);
    CHECK(embed_unramified(x * y, ctx.k1) == embed_unramified(x, ctx.k1) * embed_unramified(y, ctx.k1));
    CHECK(embed_unramified(x + y, ctx.k1) == embed_unramified(x, ctx.k1) + embed_unramified(y, ctx.k1));
  }
  CHECK(embed_unramified(LaurentSeries::theta_power(K, 3), ctx.k1) == LaurentSeries::theta_power(ctx.k1, 3));
}

TEST_CASE("period examples") {
  auto F2 = Field::make(2, 1);
  auto xi = carlitz_period(make_period_context(F2, 10));
  CHECK(xi.valuation() == -2);
  CHECK(xi.coefficient(-2) == 1);
  CHECK(xi.coefficient(-1) == 1);
  CHECK(xi.coefficient(0) == 1);

  // Brute-force oracle: the unit's theta^{-n} coefficient counts the ways to
  // write n = sum a_i (2^i - 1) with i >= 1, mod 2.
  std::vector<int> count(12, 0);
  count[0] = 1;
  for (int part : {1, 3, 7})
    for (int n = part; n < 12; ++n) count[static_cast<std::size_t>(n)] += count[static_cast<std::size_t>(n - part)];
  for (int n = 0; n < 11; ++n) CHECK(xi.coefficient(-2 + n) == static_cast<Elem>(count[static_cast<std::size_t>(n)] % 2));

  for (std::uint64_t q : {2, 3, 4, 5}) {
    auto ctx = make_period_context(field_of_order(q), 1);
    auto x = carlitz_period(ctx);
    CHECK(x.normalized_valuation() == Rational(-static_cast<std::int64_t>(q), static_cast<std::int64_t>(q) - 1));
    CHECK(x.leading_coefficient() == ctx.k1.twist());
  }
}

TEST_CASE("Carlitz denominators") {
  auto F2 = Field::make(2, 1);
  auto D = carlitz_denominators(F2, 4);
  for (unsigned i = 0; i <= 4; ++i) CHECK(D[i].degree() == static_cast<long>(i * (1u << i)));
  auto F3 = Field::make(3, 1);
  auto D3 = carlitz_denominators(F3, 2);
  CHECK(D3[1] == Polynomial(F3, {0, 2, 0, 1}));
  // D_i is the product of all monics of degree i... up to sign: D_1 = prod (theta + c).
  Polynomial prod = Polynomial::constant(F3, 1);
  for (Elem c = 0; c < 3; ++c) prod *= Polynomial(F3, {c, 1});
  CHECK(D3[1] == prod);
}

TEST_CASE("Carlitz exponential laws") {
  for (std::uint64_t q : {2, 3, 4}) {
    auto F = field_of_order(q);
    LocalField K(F);
    std::mt19937_64 rng(q);
    std::uniform_int_distribution<Elem> c(0, q - 1);
    for (int t = 0; t < 10; ++t) {
      std::vector<Elem> a(8), b(8);
      for (auto& x : a) x = c(rng);
      for (auto& x : b) x = c(rng);
      a[0] = b[0] = 1;
      auto z1 = LaurentSeries::from_coefficients(K, 1, a);
      auto z2 = LaurentSeries::from_coefficients(K, 2, b);
      const std::int64_t prec = 40;
      CHECK(agreement(carlitz_exp(z1 + z2, prec), carlitz_exp(z1, prec) + carlitz_exp(z2, prec)) >= prec);
      // exp(theta z) = theta exp(z) + exp(z)^q
      auto theta = LaurentSeries::theta_power(K, 1);
      auto ez = carlitz_exp(z1, prec + 1);
      auto rhs = theta * ez + pow(ez, static_cast<std::int64_t>(q), prec + 1);
      CHECK(agreement(carlitz_exp(theta * z1, prec), rhs) >= prec);
      // Large valuation: exp(z) = z + O(z^q)
      auto zz = z1.shifted(10);
      CHECK(agreement(carlitz_exp(zz, 20), zz) >= 20);
    }
  }
}

TEST_CASE("period checks") {
  for (std::uint64_t q : {2, 3, 4}) {
    auto r = period_checks(field_of_order(q), 50);
    CHECK(r.valuation_ok);
    CHECK(r.power_in_k);
    CHECK(r.exp_vanishes);
    CHECK(r.exp_at_period.precision() >= 50 * (q == 2 ? 1 : static_cast<std::int64_t>(q) - 1));
  }
  for (std::uint64_t q : {2, 3, 4})
    for (std::int64_t prec : {7, 64, 128, 200}) CHECK(period_checks(field_of_order(q), prec).exp_vanishes);

  // A non-period: a wrong sign in the leading term does not vanish.
  auto ctx = make_period_context(Field::make(3, 1), 30);
  auto xi = carlitz_period(ctx);
  auto bad = xi + LaurentSeries::monomial(ctx.k1, 1, 0);
  CHECK(carlitz_exp(bad, 30).normalized_valuation() < Rational(30));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ramify/algebra/enumerate.hpp"
#include "ramify/error.hpp"
#include "ramify/localfield/laurent_series.hpp"
#include "ramify/localfield/one_units.hpp"
#include "ramify/localfield/padic_digits.hpp"

using namespace ramify;

namespace {

LaurentSeries random_series(const LocalField& lf, std::mt19937_64& rng, bool exact = false) {
  std::uniform_int_distribution<std::int64_t> v0(-4, 4), len(1, 12);
  std::uniform_int_distribution<std::uint64_t> c(0, lf.residue().order() - 1);
  std::vector<Elem> co(static_cast<std::size_t>(len(rng)));
  for (auto& x : co) x = c(rng);
  co[0] = std::max<Elem>(co[0], 1);
  std::int64_t start = v0(rng);
  std::int64_t prec = exact ? kExactPrecision : start + static_cast<std::int64_t>(co.size()) + len(rng);
  return LaurentSeries::from_coefficients(lf, start, co, prec);
}

}  // namespace

TEST_CASE("local field descriptors") {
  auto F3 = Field::make(3, 1);
  CHECK_NOTHROW(LocalField(F3, 2, 2));
  CHECK_THROWS_AS(LocalField(F3, 3, 1), PreconditionError);
  CHECK_THROWS_AS(LocalField(F3, 1, 2), PreconditionError);
  CHECK_THROWS_AS(LocalField(F3, 2, 0), PreconditionError);

  // pi^e = c theta^{-1}
  LocalField lf(F3, 2, 2);
  auto pi = LaurentSeries::monomial(lf, 1, 1);
  CHECK(pi * pi == LaurentSeries::theta_power(lf, -1, 2));
  CHECK(LaurentSeries::theta_power(lf, 1) * LaurentSeries::theta_power(lf, -1) == LaurentSeries::one(lf));
  CHECK(LaurentSeries::theta_power(lf, -1).normalized_valuation() == Rational(1));
  CHECK(pi.normalized_valuation() == Rational(1, 2));
}

TEST_CASE("series arithmetic examples") {
  auto F2 = Field::make(2, 1);
  LocalField K(F2);
  auto t = LaurentSeries::theta_power(K, -1);  // theta^{-1}
  auto one = LaurentSeries::one(K);

  auto geo = inv(one - t, 64);
  CHECK(geo.precision() == 64);
  CHECK(geo.coefficients() == std::vector<Elem>(64, 1));

  CHECK(t * LaurentSeries::theta_power(K, 1) == one);
  CHECK(pow(one + t, 2) == one + t * t);

  auto F5 = Field::make(5, 1);
  LocalField K5(F5);
  auto x = LaurentSeries::from_coefficients(K5, 0, {1, 3, 2});
  
  auto prod = inv(x, 20) * x;
  CHECK(prod.precision() == 20);
  CHECK(prod.coefficients() == std::vector<Elem>{1});
}

TEST_CASE("precision propagation") {
  auto F3 = Field::make(3, 1);
  LocalField K(F3);
  auto a = LaurentSeries::from_coefficients(K, -2, {1, 2, 1}, 5);  // rel 7
  auto b = LaurentSeries::from_coefficients(K, 1, {2, 1}, 4);     // rel 3
  CHECK((a + b).precision() == 4);
  auto ab = a * b;
  CHECK(ab.valuation() == -1);
  CHECK(ab.relative_precision() == 3);
  CHECK(inv(a).relative_precision() == 7);
  CHECK(inv(b).relative_precision() == 3);

  CHECK_THROWS_AS(inv(LaurentSeries::zero(K, 10)), PrecisionError);
  CHECK_THROWS_AS(a + LaurentSeries::one(LocalField(Field::make(2, 1))), PreconditionError);
  CHECK_THROWS_AS(a.coefficient(5), PrecisionError);
  CHECK(a.coefficient(4) == 0);
}

TEST_CASE("valuation is multiplicative and ultrametric") {
  std::mt19937_64 rng(11);
  for (auto lf : {LocalField(Field::make(2, 1)), LocalField(Field::make(3, 1)), LocalField(Field::make(2, 2), 3, 1),
                  LocalField(Field::make(5, 1), 2, 2)}) {
    for (int i = 0; i < 300; ++i) {
      auto f = random_series(lf, rng), g = random_series(lf, rng);
      CHECK((f * g).valuation() == f.valuation() + g.valuation());
      auto s = f + g;
      if (!s.is_zero()) CHECK(s.valuation() >= std::min(f.valuation(), g.valuation()));
      if (f.valuation() != g.valuation()) CHECK(s.valuation() == std::min(f.valuation(), g.valuation()));
      // Frobenius is a ring map.
      CHECK((f + g).frobenius() == f.frobenius() + g.frobenius());
      CHECK((f * g).frobenius() == f.frobenius() * g.frobenius());
      auto p = static_cast<std::int64_t>(lf.residue().characteristic());
      CHECK(agreement(f.frobenius(), pow(f, p)) >= pow(f, p).precision());
    }
  }
}

TEST_CASE("bracket") {
  auto F2 = Field::make(2, 1), F3 = Field::make(3, 1);
  LocalField K2(F2), K3(F3);
  CHECK(bracket(Polynomial::variable(F2)) == LaurentSeries::one(K2));
  CHECK(bracket(Polynomial(F2, {1, 1})) == LaurentSeries::from_coefficients(K2, 0, {1, 1}));
  CHECK(bracket(Polynomial(F3, {0, 1, 1})) == LaurentSeries::from_coefficients(K3, 0, {1, 1}));
  CHECK_THROWS_AS(bracket(Polynomial(F3, {0, 2})), PreconditionError);
  CHECK_THROWS_AS(bracket(Polynomial(F3)), PreconditionError);
}

TEST_CASE("bracket powers agree with polynomial powers") {
  for (auto F : {Field::make(2, 1), Field::make(3, 1)}) {
    LocalField K(F);
    for (unsigned d = 0; d <= 3; ++d)
      for (const auto& a : MonicRange(F, d)) {
        auto u = bracket(a);
        for (std::int64_t k = 1; k <= 10; ++k) {
          auto lhs = pow(u, k);
          auto rhs = LaurentSeries::from_polynomial(K, pow(a, static_cast<std::uint64_t>(k))) *
                     LaurentSeries::theta_power(K, -static_cast<std::int64_t>(d) * k);
          CHECK(lhs == rhs);
        }
      }
  }
}

TEST_CASE("p-adic digits") {
  CHECK(PAdicDigits::from_integer(2, -1) == PAdicDigits(2, {}, Tail::Full));
  CHECK(PAdicDigits::from_integer(2, -2) == PAdicDigits(2, {0}, Tail::Full));
  CHECK(PAdicDigits::from_integer(3, 5) == PAdicDigits(3, {2, 1}, Tail::Zero));
  CHECK(PAdicDigits(2, {1, 1, 1}, Tail::Full) == PAdicDigits(2, {}, Tail::Full));
  for (std::uint64_t q : {2, 3, 4, 9})
    for (std::int64_t y = -300; y <= 300; ++y) {
      auto d = PAdicDigits::from_integer(q, y);
      CHECK(d.to_integer() == y);
      CHECK(d.negated().to_integer() == -y);
      CHECK(d.tail() == (y < 0 ? Tail::Full : Tail::Zero));
    }
  PAdicDigits t(2, {1, 0, 1}, Tail::Truncated);
  CHECK_FALSE(t.to_integer().has_value());
  CHECK_THROWS_AS(t.digit(3), PrecisionError);
  // -5 = ...11011; truncated negation of 5 = 101 gives 011.
  CHECK(t.negated().digits() == std::vector<std::uint64_t>{1, 1, 0});
  CHECK_THROWS_AS(PAdicDigits(2, {2}, Tail::Zero), PreconditionError);
}

TEST_CASE("one-unit powers") {
  auto F2 = Field::make(2, 1);
  LocalField K(F2);
  auto one = LaurentSeries::one(K);
  auto u = one + LaurentSeries::theta_power(K, -1);

  CHECK(one_unit_power(u, PAdicDigits::from_integer(2, 0)) == one);
  auto minus_one = one_unit_power(u, PAdicDigits::from_integer(2, -1), 64);
  CHECK(minus_one == inv(u, 64));

  auto u2 = one_unit_power(u, PAdicDigits::from_integer(2, 2));
  auto u3 = one_unit_power(u, PAdicDigits::from_integer(2, 3));
  CHECK(u2 * u3 == pow(u, 5));

  CHECK_THROWS_AS(one_unit_power(LaurentSeries::theta_power(K, -1), PAdicDigits::from_integer(2, 1)), PreconditionError);
  CHECK_THROWS_AS(one_unit_power(u, PAdicDigits::from_integer(3, 1)), PreconditionError);
}

TEST_CASE("negative-integer digits match negative powers") {
  for (auto F : {Field::make(2, 1), Field::make(3, 1), Field::make(2, 2)}) {
    LocalField K(F);
    for (unsigned d = 1; d <= 2; ++d)
      for (const auto& a : MonicRange(F, d)) {
        auto u = bracket(a);
        for (std::int64_t y = -40; y <= 40; ++y) {
          auto lhs = one_unit_power(u, PAdicDigits::from_integer(F.order(), y), 48);
          auto rhs = pow(u, y, 48);
          CHECK(agreement(lhs, rhs) >= 48);
        }
      }
  }
}

TEST_CASE("truncated exponents cap the precision") {
  auto F3 = Field::make(3, 1);
  LocalField K(F3);
  auto u = LaurentSeries::one(K) + LaurentSeries::theta_power(K, -1, 2);
  // y = 1 + 2*3 + ... truncated after 2 digits: error O(theta^{-9}).
  auto r = one_unit_power(u, PAdicDigits(3, {1, 2}, Tail::Truncated));
  CHECK(r.precision() == 9);
  CHECK(agreement(r, pow(u, 7)) >= 9);
}

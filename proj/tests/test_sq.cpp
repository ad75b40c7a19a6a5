#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "ramify/error.hpp"
#include "ramify/sq/sq.hpp"

using namespace ramify;

namespace {

DigitPermutation swap01() { return DigitPermutation({{0, 1}, {1, 0}}); }

DigitPermutation random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> img(n);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  std::vector<std::pair<std::size_t, std::size_t>> m;
  for (std::size_t i = 0; i < n; ++i) m.push_back({i, img[i]});
  return DigitPermutation(m);
}

// Digit transport done by hand on the base-q expansion of a nonnegative integer.
std::int64_t oracle_action(const DigitPermutation& rho, std::uint64_t q, std::int64_t n) {
  std::int64_t out = 0;
  for (std::size_t i = 0; n; ++i, n /= static_cast<std::int64_t>(q)) {
    std::int64_t w = 1;
    for (std::size_t j = 0; j < rho(i); ++j) w *= static_cast<std::int64_t>(q);
    out += (n % static_cast<std::int64_t>(q)) * w;
  }
  return out;
}

}  // namespace

TEST_CASE("digit permutations") {
  auto s = swap01();
  CHECK(s(0) == 1);
  CHECK(s(1) == 0);
  CHECK(s(7) == 7);
  CHECK(s.support_bound() == 2);
  CHECK(s.to_string() == "0>1,1>0");
  CHECK(DigitPermutation().to_string() == "id");
  CHECK(s.after(s).is_identity());
  CHECK(DigitPermutation({{3, 3}}).is_identity());
  CHECK_THROWS_AS(DigitPermutation({{0, 1}}), PreconditionError);
  CHECK_THROWS_AS(DigitPermutation({{0, 1}, {1, 1}}), PreconditionError);
  CHECK_THROWS_AS(DigitPermutation({{0, 1}, {0, 0}}), PreconditionError);
  DigitPermutation c({{0, 1}, {1, 2}, {2, 0}});
  CHECK(c.after(c.inverse()).is_identity());
}

TEST_CASE("digit action examples") {
  auto s = swap01();
  CHECK(act_integer(DigitPermutation(), 2, 37) == 37);
  CHECK(act_integer(s, 2, 1) == 2);
  CHECK(act_integer(s, 2, -1) == -1);
  CHECK(act_integer(s, 2, -2) == -3);
  CHECK(act_integer(s, 2, 3) == 3);
  CHECK(act_integer(s, 2, 5) == 6);
  CHECK(act_integer(DigitPermutation({{0, 2}, {2, 0}}), 2, 5) == 5);
  CHECK(act_integer(s, 3, 1) == 3);
  CHECK(act_integer(s, 3, 5) == 7);  // 12_3 -> 21_3

  PAdicDigits t(3, {1, 2, 0}, Tail::Truncated);
  auto moved = act_padic(s, t);
  CHECK(moved.digits() == std::vector<std::uint64_t>{2, 1, 0});
  CHECK(moved.tail() == Tail::Truncated);
  CHECK_THROWS_AS(act_padic(DigitPermutation({{0, 5}, {5, 0}}), t), PreconditionError);
}

TEST_CASE("digit action laws") {
  std::mt19937_64 rng(11);
  std::vector<DigitPermutation> perms;
  for (std::size_t i = 0; i < 12; ++i)
    for (std::size_t j = i + 1; j < 12; ++j) perms.push_back(DigitPermutation({{i, j}, {j, i}}));
  for (int t = 0; t < 40; ++t) perms.push_back(random_permutation(rng, 12));

  for (const auto& rho : perms)
    for (std::int64_t y = -1024; y <= 1024; ++y) {
      const auto img = act_integer(rho, 2, y);
      CHECK((img >= 0) == (y >= 0));
      if (y >= 0) CHECK(img == oracle_action(rho, 2, y));
      CHECK(act_integer(rho.inverse(), 2, img) == y);
    }
  for (int t = 0; t < 30; ++t) {
    auto rho = random_permutation(rng, 12);
    auto sigma = random_permutation(rng, 12);
    auto comp = rho.after(sigma);
    for (std::int64_t y = -1024; y <= 1024; ++y)
      CHECK(act_integer(comp, 2, y) == act_integer(rho, 2, act_integer(sigma, 2, y)));
  }
  for (std::uint64_t q : {3, 4}) {
    auto rho = random_permutation(rng, 6);
    for (std::int64_t y = -729; y <= 729; ++y) {
      const auto img = act_integer(rho, q, y);
      CHECK((img >= 0) == (y >= 0));
      CHECK(act_integer(rho.inverse(), q, img) == y);
    }
  }
}

TEST_CASE("monomial actions") {
  auto F2 = Field::make(2, 1);
  LocalField K(F2);
  auto s = swap01();
  auto x = LaurentSeries::theta_power(K, -1) + LaurentSeries::theta_power(K, -3);
  CHECK(act_laurent(s, x, MonomialMode::InverseExponents) ==
        LaurentSeries::theta_power(K, -2) + LaurentSeries::theta_power(K, -3));
  CHECK(act_laurent(DigitPermutation(), x, MonomialMode::InverseExponents) == x);
  CHECK(act_laurent(DigitPermutation(), x, MonomialMode::DirectExponents) == x);
  auto y = LaurentSeries::theta_power(K, 1) + LaurentSeries::theta_power(K, 2);
  CHECK(act_laurent(s, y, MonomialMode::DirectExponents) == LaurentSeries::theta_power(K, 2) + LaurentSeries::theta_power(K, 1));

  auto F3 = Field::make(3, 1);
  LocalField K3(F3);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<Elem> c(0, 2);
  for (int t = 0; t < 30; ++t) {
    auto rho = random_permutation(rng, 4);
    std::vector<Elem> a(20), b(20);
    for (auto& v : a) v = c(rng);
    for (auto& v : b) v = c(rng);
    auto s1 = LaurentSeries::from_coefficients(K3, -5, a);
    auto s2 = LaurentSeries::from_coefficients(K3, 1, b);
    for (auto mode : {MonomialMode::InverseExponents, MonomialMode::DirectExponents}) {
      auto lhs = act_laurent(rho, s1.scaled(2) + s2, mode);
      auto rhs = act_laurent(rho, s1, mode).scaled(2) + act_laurent(rho, s2, mode);
      CHECK(lhs == rhs);
      CHECK(act_laurent(rho.inverse(), act_laurent(rho, s1, mode), mode) == s1);
    }
    // The maximal ideal is stable in inverse mode.
    if (!s2.is_zero()) CHECK(act_laurent(rho, s2, MonomialMode::InverseExponents).valuation() >= 1);
  }

  // Truncated inputs: the image is only known up to a whole block of q^L exponents.
  auto tr = LaurentSeries::from_coefficients(K, 0, {1, 1, 1, 1, 1}, 7);
  auto img = act_laurent(s, tr, MonomialMode::InverseExponents);
  CHECK(img.precision() == 4);
  auto full = act_laurent(s, LaurentSeries::from_coefficients(K, 0, {1, 1, 1, 1, 1, 0, 0, 1, 1}), MonomialMode::InverseExponents);
  CHECK(agreement(img, full) >= 4);
  CHECK_THROWS_AS(act_laurent(s, LaurentSeries::one(LocalField(F3, 2, 1)), MonomialMode::InverseExponents),
                  PreconditionError);
}

TEST_CASE("zero orbit experiment") {
  auto F2 = Field::make(2, 1);
  auto id = zero_orbit_experiment(F2, 7, DigitPermutation(), 30);
  CHECK(id.image_k == 7);
  for (const auto& m : id.modes) {
    CHECK(m.pairs.size() == id.valuations.size());
    for (const auto& p : m.pairs) CHECK_FALSE(p.distance.has_value());
  }
  auto fixed = zero_orbit_experiment(F2, 3, swap01(), 30);
  CHECK(fixed.image_k == 3);
  auto moved = zero_orbit_experiment(F2, 5, swap01(), 30);
  CHECK(moved.image_k == 6);
  CHECK(moved.modes.size() == 2);
  CHECK(moved.valuations.size() == 2);
  CHECK(zero_orbit_experiment(F2, 5, DigitPermutation({{0, 2}, {2, 0}}), 30).image_k == 5);
  CHECK_THROWS_AS(zero_orbit_experiment(F2, 0, swap01(), 30), PreconditionError);
}

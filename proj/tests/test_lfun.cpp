#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ramify/error.hpp"
#include "ramify/lfun/lfun.hpp"
#include "ramify/zeta/zeta.hpp"

using namespace ramify;

namespace {

Polynomial poly(const Field& F, std::vector<Elem> c) { return Polynomial(F, std::move(c)); }

Polynomial residue_from_key(const Field& F, std::uint64_t key) {
  std::vector<Elem> c;
  for (; key; key /= F.order()) c.push_back(key % F.order());
  return Polynomial(F, c);
}

// First monic irreducible of each degree, for a spread of moduli.
std::vector<Polynomial> sample_moduli(const Field& F, unsigned max_degree) {
  std::vector<Polynomial> out;
  for (unsigned d = 1; d <= max_degree; ++d)
    for (const auto& a : MonicRange(F, d))
      if (is_irreducible(a)) {
        out.push_back(a);
        break;
      }
  return out;
}

// Order of P H in (A/f)^*/H without discrete logs: x lies in H iff x^{M/beta} = 1.
std::uint64_t naive_splitting_order(const Polynomial& P, const Polynomial& f, std::uint64_t M, std::uint64_t beta) {
  const auto one = Polynomial::constant(f.field(), 1);
  auto x = P % f;
  for (std::uint64_t t = 1;; ++t) {
    if (powmod(x, M / beta, f) == one) return t;
    x = x * (P % f) % f;
  }
}

}  // namespace

TEST_CASE("character examples") {
  auto F3 = Field::make(3, 1);
  auto F2 = Field::make(2, 1);
  auto f = poly(F3, {1, 0, 1});
  auto triv = make_character(F3, f, 0);
  CHECK(triv.group_order == 8);
  CHECK(triv.generator == poly(F3, {1, 1}));
  for (std::uint64_t key = 1; key < 9; ++key) CHECK(char_eval(triv, residue_from_key(F3, key)) == 1);
  CHECK(char_eval(triv, f * poly(F3, {2, 1})) == 0);

  auto quad = with_index(triv, 4);
  CHECK(quad.order == 2);
  CHECK(quad.value_field.degree() == 1);
  CHECK(char_eval(quad, quad.generator) == 2);
  CHECK(char_eval(quad, Polynomial::constant(F3, 1)) == 1);
  // Squares of units are exactly the kernel.
  for (std::uint64_t key = 1; key < 9; ++key) {
    auto a = residue_from_key(F3, key);
    CHECK(char_eval(quad, a * a) == 1);
  }

  auto cubic = make_character(F2, poly(F2, {1, 1, 1}), 1);
  CHECK(cubic.generator == poly(F2, {0, 1}));
  CHECK(cubic.value_field.order() == 4);
  CHECK(cubic.value_field.multiplicative_order(char_eval(cubic, cubic.generator)) == 3);

  // Linear modulus: the generator may need a degree-one representative.
  auto F5 = Field::make(5, 1);
  auto lin = make_character(F5, poly(F5, {0, 1}), 1);
  CHECK(lin.group_order == 4);
  CHECK(lin.value_field.order() == 5);

  CHECK_THROWS_AS(make_character(F3, poly(F3, {2, 0, 1}), 0), PreconditionError);
  CHECK_THROWS_AS(make_character(F3, f, 8), PreconditionError);
  CHECK_THROWS_AS(make_character(F2, sample_moduli(F2, 12).back(), 0, 1 << 10), BudgetError);
}

TEST_CASE("characters are orthogonal and multiplicative") {
  std::mt19937_64 rng(7);
  for (auto [p, n, dmax] : {std::tuple{2u, 1u, 6u}, {3u, 1u, 4u}, {2u, 2u, 3u}, {5u, 1u, 2u}, {7u, 1u, 2u}}) {
    auto F = Field::make(p, n);
    for (const auto& f : sample_moduli(F, dmax)) {
      auto base = make_character(F, f, 0);
      const auto M = base.group_order;
      if (M > 100) continue;
      for (std::uint64_t j = 1; j < M; ++j) {
        auto psi = with_index(base, j);
        const auto& V = psi.value_field;
        Elem sum = 0;
        for (std::uint64_t key = 1; key <= M; ++key) sum = V.add(sum, char_eval(psi, residue_from_key(F, key)));
        CHECK(sum == 0);
        std::uniform_int_distribution<std::uint64_t> pick(1, M);
        for (int trial = 0; trial < 5; ++trial) {
          auto a = residue_from_key(F, pick(rng));
          auto b = residue_from_key(F, pick(rng));
          CHECK(char_eval(psi, a * b) == V.mul(char_eval(psi, a), char_eval(psi, b)));
        }
        CHECK(V.pow(char_eval(psi, psi.generator), psi.order) == 1);
      }
    }
  }
}

TEST_CASE("local identity for characters trivial on H") {
  for (auto [p, n, dmax] : {std::tuple{2u, 1u, 4u}, {3u, 1u, 2u}, {2u, 2u, 2u}, {5u, 1u, 2u}}) {
    auto F = Field::make(p, n);
    for (const auto& f : sample_moduli(F, dmax)) {
      const auto M = checked_pow(F.order(), static_cast<unsigned>(f.degree())) - 1;
      for (std::uint64_t beta = 1; beta <= M; ++beta) {
        if (M % beta || beta % p == 0) continue;
        auto sub = make_subgroup(F, f, beta);
        auto common = common_value_field(sub);
        auto chars = characters_trivial_on(sub);
        std::vector<Embedding> emb;
        for (const auto& psi : chars) emb.push_back(value_embedding(psi, common));
        for (const auto& P : irreducibles_up_to(F, 3)) {
          if (P == f) continue;
          const auto t = splitting_order(sub, P);
          CHECK(t == naive_splitting_order(P, f, M, beta));
          auto lhs = Polynomial::constant(common, 1);
          for (std::size_t i = 0; i < chars.size(); ++i)
            lhs *= poly(common, {1, common.neg(emb[i](char_eval(chars[i], P)))});
          auto rhs = pow(Polynomial::constant(common, 1) - Polynomial::monomial(common, 1, t), beta / t);
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("L-polynomials") {
  auto F3 = Field::make(3, 1);
  auto f = poly(F3, {1, 0, 1});
  auto triv = make_character(F3, f, 0);
  for (std::uint64_t k : {1, 2, 5}) {
    auto c = l_polynomial(triv, k, 5);
    CHECK(c[0] == Polynomial::constant(F3, 1));
    for (unsigned d = 0; d <= 5; ++d) {
      auto expected = power_sum(F3, d, k);
      if (d >= 2) expected -= pow(f, k) * power_sum(F3, d - 2, k);
      CHECK(c[d] == expected);
    }
  }
  auto quad = with_index(triv, 4);
  auto c = l_polynomial(quad, 2, 2);
  Polynomial c1(F3);
  for (Elem e = 0; e < 3; ++e) {
    auto a = poly(F3, {e, 1});
    c1 += pow(a, 2).scaled(char_eval(quad, a));
  }
  CHECK(c[0] == Polynomial::constant(F3, 1));
  CHECK(c[1] == c1);
  CHECK_THROWS_AS(l_polynomial(quad, 0, 2), PreconditionError);
}

TEST_CASE("subgroup Dedekind zeta") {
  auto F3 = Field::make(3, 1);
  auto f = poly(F3, {1, 0, 1});
  auto full = make_subgroup(F3, f, 1);
  for (std::uint64_t k : {1, 3}) CHECK(first_mismatch(subgroup_dedekind(full, k, 6), power_sum_series(F3, k, 6)) == -1);
  CHECK_THROWS_AS(make_subgroup(F3, f, 5), PreconditionError);
  CHECK_THROWS_AS(make_subgroup(F3, f, 3), PreconditionError);
  CHECK_THROWS_AS(make_subgroup(Field::make(2, 1), poly(Field::make(2, 1), {1, 1, 0, 1}), 2), PreconditionError);

  // A prime that splits completely contributes at x^1 with multiplicity beta.
  auto sub = make_subgroup(F3, f, 2);
  auto z = subgroup_dedekind(sub, 1, 1);
  Polynomial x1(F3);
  for (Elem e = 0; e < 3; ++e) {
    auto P = poly(F3, {e, 1});
    if (splitting_order(sub, P) == 1) x1 += P.scaled(2);
  }
  CHECK(z[1] == x1);
}

TEST_CASE("factorization into L-polynomials") {
  auto F3 = Field::make(3, 1);
  auto F2 = Field::make(2, 1);
  auto f3 = poly(F3, {1, 0, 1});
  for (std::uint64_t beta : {1, 2, 4, 8})
    for (std::uint64_t k : {1, 2, 4}) {
      auto r = verify_factorization(make_subgroup(F3, f3, beta), k, beta == 8 ? 6 : 8);
      CHECK_MESSAGE(r.equal, "beta=", beta, " k=", k, " mismatch at x^", r.first_mismatch);
    }
  auto f2 = poly(F2, {1, 1, 1});
  auto sub = make_subgroup(F2, f2, 3);
  CHECK(common_value_field(sub).order() == 4);
  for (std::uint64_t k : {1, 2, 4}) CHECK(verify_factorization(sub, k, 8).equal);
  auto psi = characters_trivial_on(sub)[1];
  auto c = l_polynomial(psi, 1, 2);
  bool outside_prime_field = false;
  for (const auto& co : c)
    for (auto e : co.coefficients()) outside_prime_field |= !psi.value_field.in_prime_field(e);
  CHECK(outside_prime_field);

  auto F4 = Field::make(2, 2);
  auto f4 = sample_moduli(F4, 2).back();
  for (std::uint64_t beta : {3, 5, 15}) CHECK(verify_factorization(make_subgroup(F4, f4, beta), 1, 4).equal);
}

TEST_CASE("Artin-Schreier extension and the degree-p caveat") {
  auto F2 = Field::make(2, 1);
  auto F3 = Field::make(3, 1);
  auto f2 = poly(F2, {1, 1, 1});
  CHECK(artin_schreier_trace(f2, poly(F2, {0, 1})) == 1);
  for (std::uint64_t k : {1, 2}) CHECK(artin_schreier_dedekind(f2, k, 4)[0] == Polynomial::constant(F2, 1));
  for (std::uint64_t k : {1, 2}) {
    CHECK(caveat_identity_check(f2, k, 8).equal);
    CHECK(caveat_identity_check(poly(F3, {1, 0, 1}), k, 8).equal);
  }
  CHECK(caveat_identity_check(poly(F3, {1, 0, 1}), 2, 6).equal);
  CHECK(caveat_identity_check(poly(F3, {0, 1}), 3, 5).equal);

  // Trace oracle: count roots of W^p - W = 1/f in A/P by brute force.
  for (const auto& P : irreducibles_up_to(F3, 2)) {
    auto f = poly(F3, {1, 0, 1});
    if (P == f) continue;
    auto target = invmod(f % P, P);
    const auto size = checked_pow(3, static_cast<unsigned>(P.degree()));
    int roots = 0;
    for (std::uint64_t key = 0; key < size; ++key) {
      std::vector<Elem> c;
      for (auto x = key; x; x /= 3) c.push_back(x % 3);
      Polynomial w(F3, c);
      if ((powmod(w, 3, P) - w - target) % P == Polynomial(F3)) ++roots;
    }
    CHECK((roots == 3) == (artin_schreier_trace(f, P) == 0));
    CHECK((roots == 0) == (artin_schreier_trace(f, P) != 0));
  }
}

TEST_CASE("Euler factor zeros") {
  auto F3 = Field::make(3, 1);
  auto F2 = Field::make(2, 1);
  auto r = euler_factor_zero_report(poly(F3, {0, 1}), 1);
  CHECK(r.valuation == Rational(1));
  CHECK(r.separable_degree == 1);
  CHECK_FALSE(r.inseparable);
  CHECK(r.verdict == "unramified");

  auto r2 = euler_factor_zero_report(poly(F2, {1, 1, 1}), 3);
  CHECK(r2.inseparable);
  CHECK(r2.separable_degree == 1);
  CHECK(r2.inseparable_degree == 2);
  CHECK(r2.valuation == Rational(3));

  auto r3 = euler_factor_zero_report(poly(F3, {1, 0, 1}), 2);
  CHECK_FALSE(r3.inseparable);
  CHECK(r3.separable_degree == 2);
  CHECK(r3.residue_degree == 1);

  for (auto [p, n] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}})
    for (const auto& f : sample_moduli(Field::make(p, n), 6)) {
      auto rep = euler_factor_zero_report(f, 1);
      CHECK(rep.inseparable == (f.degree() % p == 0));
      CHECK(rep.separable_degree * rep.inseparable_degree == static_cast<std::uint64_t>(f.degree()));
    }
}

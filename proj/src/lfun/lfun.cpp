#include "ramify/lfun/lfun.hpp"

#include <numeric>
#include <stdexcept>

#include "ramify/error.hpp"
#include "ramify/zeta/zeta.hpp"

namespace ramify {

namespace {

void require_prime_modulus(const Field& field, const Polynomial& f) {
  if (!(f.field() == field)) throw PreconditionError("modulus lives over a different field");
  if (f.degree() < 1 || !f.is_monic() || !is_irreducible(f))
    throw PreconditionError("modulus must be monic irreducible of positive degree");
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

bool has_order(const Polynomial& r, std::uint64_t M, const Polynomial& f) {
  const auto one = Polynomial::constant(f.field(), 1);
  if (!(powmod(r, M, f) == one)) return false;
  for (auto l : prime_factors(M))
    if (powmod(r, M / l, f) == one) return false;
  return true;
}

Field extension_of(const Field& base, unsigned m) {
  return Field::make(base.characteristic(), base.degree() * m, 62);
}

}  // namespace

unsigned order_mod(std::uint64_t q, std::uint64_t n) {
  if (n == 0 || std::gcd(q, n) != 1) throw PreconditionError("order of q needs gcd(q, n) = 1");
  if (n == 1) return 1;
  unsigned r = 1;
  for (std::uint64_t x = q % n; x != 1; x = mulmod(x, q, n)) ++r;
  return r;
}

CharacterSpec make_character(const Field& field, const Polynomial& f, std::uint64_t j, std::uint64_t budget) {
  require_prime_modulus(field, f);
  const auto deg = static_cast<unsigned>(f.degree());
  const auto size = checked_pow(field.order(), deg);
  if (size > budget) throw BudgetError("residue table of size " + std::to_string(size) + " exceeds the dlog budget");
  CharacterSpec spec;
  spec.field = field;
  spec.modulus = f;
  spec.group_order = size - 1;
  const auto M = spec.group_order;

  bool found = false;
  for (unsigned d = 0; d <= deg && !found; ++d)
    for (const auto& a : MonicRange(field, d)) {
      auto r = a % f;
      if (!r.is_zero() && has_order(r, M, f)) {
        spec.generator = a;
        found = true;
        break;
      }
    }
  if (!found) throw std::logic_error("no monic generator of (A/f)^*");

  auto table = std::make_shared<std::vector<std::uint64_t>>(size, M);
  const auto g = spec.generator % f;
  auto cur = Polynomial::constant(field, 1);
  for (std::uint64_t t = 0; t < M; ++t) {
    (*table)[polynomial_key(cur)] = t;
    cur = cur * g % f;
  }
  spec.dlog = std::move(table);
  return with_index(spec, j);
}

CharacterSpec with_index(const CharacterSpec& base, std::uint64_t j) {
  const auto M = base.group_order;
  if (j >= std::max<std::uint64_t>(M, 1)) throw PreconditionError("character index must lie in [0, M)");
  CharacterSpec spec = base;
  spec.index = j;
  spec.order = M / std::gcd(j, M);
  if (j == 0) spec.order = 1;
  const auto m = order_mod(base.field.order(), spec.order);
  spec.value_field = extension_of(base.field, m);
  spec.base = ff_embed(base.field, spec.value_field);
  const auto& V = spec.value_field;
  spec.omega = V.pow(V.primitive_element(), (V.order() - 1) / spec.order);
  return spec;
}

std::uint64_t residue_log(const CharacterSpec& spec, const Polynomial& a) {
  auto r = a % spec.modulus;
  if (r.is_zero()) throw PreconditionError("residue is not a unit mod f");
  return (*spec.dlog)[polynomial_key(r)];
}

Elem char_eval(const CharacterSpec& spec, const Polynomial& a) {
  if ((a % spec.modulus).is_zero()) return 0;
  if (spec.trivial()) return 1;
  const auto M = spec.group_order;
  const auto e = mulmod(spec.index, residue_log(spec, a), M) / std::gcd(spec.index, M);
  return spec.value_field.pow(spec.omega, e);
}

XSeries l_polynomial(const CharacterSpec& spec, std::uint64_t k, unsigned max_degree, std::uint64_t budget) {
  if (k < 1) throw PreconditionError("L-polynomial needs k >= 1");
  XSeries c(max_degree + 1, Polynomial(spec.value_field));
  for (unsigned d = 0; d <= max_degree; ++d)
    for (const auto& a : MonicRange(spec.field, d, budget)) {
      const Elem v = char_eval(spec, a);
      if (v != 0) c[d] += pow(a, k).mapped(spec.base).scaled(v);
    }
  return c;
}

SubgroupSpec make_subgroup(const Field& field, const Polynomial& f, std::uint64_t beta, std::uint64_t budget) {
  SubgroupSpec sub{make_character(field, f, 0, budget), beta};
  const auto M = sub.characters.group_order;
  if (beta == 0 || M % beta != 0)
    throw PreconditionError("beta = " + std::to_string(beta) + " does not divide M = " + std::to_string(M));
  if (beta % field.characteristic() == 0) throw PreconditionError("beta must be prime to p");
  return sub;
}

std::uint64_t splitting_order(const SubgroupSpec& sub, const Polynomial& P) {
  const auto s = residue_log(sub.characters, P);
  return sub.beta / std::gcd(s, sub.beta);
}

std::vector<CharacterSpec> characters_trivial_on(const SubgroupSpec& sub) {
  std::vector<CharacterSpec> out;
  const auto step = sub.characters.group_order / sub.beta;
  for (std::uint64_t i = 0; i < sub.beta; ++i) out.push_back(with_index(sub.characters, step * i));
  return out;
}

Field common_value_field(const SubgroupSpec& sub) {
  return extension_of(sub.field(), order_mod(sub.field().order(), sub.beta));
}

Embedding value_embedding(const CharacterSpec& spec, const Field& common) {
  return ff_embed_over(spec.base, ff_embed(spec.field, common));
}

XSeries subgroup_dedekind(const SubgroupSpec& sub, std::uint64_t k, unsigned max_degree, std::uint64_t budget) {
  if (k < 1) throw PreconditionError("Dedekind zeta needs k >= 1");
  XSeries z = xseries_one(sub.field(), max_degree);
  for (const auto& P : irreducibles_up_to(sub.field(), max_degree, budget)) {
    const auto deg = static_cast<std::uint64_t>(P.degree());
    if (P == sub.modulus()) {
      z = xseries_mul(z, geometric_power(pow(P, k), static_cast<unsigned>(deg), 1, max_degree));
      continue;
    }
    const auto t = splitting_order(sub, P);
    if (t * deg > max_degree) continue;
    z = xseries_mul(z, geometric_power(pow(P, t * k), static_cast<unsigned>(t * deg), sub.beta / t, max_degree));
  }
  return z;
}

IdentityReport verify_factorization(const SubgroupSpec& sub, std::uint64_t k, unsigned max_degree,
                                    std::uint64_t budget) {
  const Field common = common_value_field(sub);
  const auto base = ff_embed(sub.field(), common);
  IdentityReport report;
  report.lhs = xseries_mapped(subgroup_dedekind(sub, k, max_degree, budget), base);
  report.rhs = xseries_one(common, max_degree);
  for (const auto& psi : characters_trivial_on(sub)) {
    const XSeries factor = psi.trivial()
                               ? xseries_mapped(power_sum_series(sub.field(), k, max_degree, budget), base)
                               : xseries_mapped(l_polynomial(psi, k, max_degree, budget), value_embedding(psi, common));
    report.rhs = xseries_mul(report.rhs, factor);
  }
  report.first_mismatch = first_mismatch(report.lhs, report.rhs);
  report.equal = report.first_mismatch < 0;
  return report;
}

Elem artin_schreier_trace(const Polynomial& f, const Polynomial& P) {
  const Field& F = P.field();
  auto r = invmod(f % P, P);
  auto sum = r;
  const auto steps = F.degree() * static_cast<unsigned>(P.degree());
  for (unsigned i = 1; i < steps; ++i) {
    r = powmod(r, F.characteristic(), P);
    sum += r;
  }
  if (sum.degree() > 0 || !F.in_prime_field(sum[0])) throw std::logic_error("trace left the prime field");
  return sum[0];
}

XSeries artin_schreier_dedekind(const Polynomial& f, std::uint64_t k, unsigned max_degree, std::uint64_t budget) {
  const Field& F = f.field();
  require_prime_modulus(F, f);
  if (k < 1) throw PreconditionError("Dedekind zeta needs k >= 1");
  const auto p = F.characteristic();
  XSeries z = xseries_one(F, max_degree);
  for (const auto& P : irreducibles_up_to(F, max_degree, budget)) {
    const auto deg = static_cast<unsigned>(P.degree());
    if (P == f)
      z = xseries_mul(z, geometric_power(pow(P, k), deg, 1, max_degree));
    else if (artin_schreier_trace(f, P) == 0)
      z = xseries_mul(z, geometric_power(pow(P, k), deg, p, max_degree));
    else if (p * deg <= max_degree)
      z = xseries_mul(z, geometric_power(pow(P, p * k), static_cast<unsigned>(p * deg), 1, max_degree));
  }
  return z;
}

IdentityReport caveat_identity_check(const Polynomial& f, std::uint64_t k, unsigned max_degree, std::uint64_t budget) {
  const Field& F = f.field();
  const auto p = F.characteristic();
  IdentityReport report;
  report.lhs = artin_schreier_dedekind(f, k, max_degree, budget);
  report.rhs = xseries_mul(xseries_pow(power_sum_series(F, k, max_degree, budget), p),
                           binomial_power(pow(f, k), static_cast<unsigned>(f.degree()), p - 1, max_degree));
  report.first_mismatch = first_mismatch(report.lhs, report.rhs);
  report.equal = report.first_mismatch < 0;
  return report;
}

EulerZeroReport euler_factor_zero_report(const Polynomial& f, std::uint64_t k) {
  const Field& F = f.field();
  require_prime_modulus(F, f);
  if (k < 1) throw PreconditionError("Euler factor needs k >= 1");
  EulerZeroReport r;
  r.degree = static_cast<unsigned>(f.degree());
  r.valuation = Rational(static_cast<std::int64_t>(k));
  const auto p = F.characteristic();
  unsigned d = r.degree;
  while (d % p == 0) {
    d /= static_cast<unsigned>(p);
    r.inseparable_degree *= p;
  }
  r.separable_degree = d;
  r.residue_degree = order_mod(F.order(), d);
  r.inseparable = r.inseparable_degree > 1;
  return r;
}

}  // namespace ramify

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ramify/algebra/embedding.hpp"
#include "ramify/algebra/enumerate.hpp"
#include "ramify/algebra/polynomial.hpp"
#include "ramify/algebra/xseries.hpp"
#include "ramify/rational.hpp"

namespace ramify {

/// The character psi_j of (A/f)^* with psi_j(g^t) = omega^{(j t mod M) n / M}.
struct CharacterSpec {
  Field field;
  Polynomial modulus;
  std::uint64_t group_order = 0;  // M = q^{deg f} - 1
  Polynomial generator;           // first monic of order M, degrees ascending
  std::uint64_t index = 0;        // j
  std::uint64_t order = 1;        // n = M / gcd(j, M)
  Field value_field;              // F_{q^m}, m = ord of q mod n
  Embedding base;                 // F_q -> value field
  Elem omega = 1;
  /// residue key -> t with g^t = residue (M marks the zero residue)
  std::shared_ptr<const std::vector<std::uint64_t>> dlog;

  bool trivial() const { return index == 0; }
};

/// Throws PreconditionError unless f is monic irreducible and j < M;
/// BudgetError when q^{deg f} exceeds `budget`.
CharacterSpec make_character(const Field& field, const Polynomial& f, std::uint64_t j,
                             std::uint64_t budget = kDefaultDlogBound);
/// Same modulus and tables, another index.
CharacterSpec with_index(const CharacterSpec& base, std::uint64_t j);

/// t with g^t = a mod f; throws PreconditionError when f | a.
std::uint64_t residue_log(const CharacterSpec& spec, const Polynomial& a);
/// psi(a) in the value field; zero when f | a.
Elem char_eval(const CharacterSpec& spec, const Polynomial& a);

/// c_d = sum over monic a of degree d of psi(a) a^k, d <= D (psi(f) = 0).
XSeries l_polynomial(const CharacterSpec& spec, std::uint64_t k, unsigned max_degree,
                     std::uint64_t budget = kDefaultEnumerationBudget);

/// H = <g^beta> inside (A/f)^*, quotient of order beta.
struct SubgroupSpec {
  CharacterSpec characters;  // index 0; carries f, g and the log table
  std::uint64_t beta = 1;

  const Field& field() const { return characters.field; }
  const Polynomial& modulus() const { return characters.modulus; }
};

/// Throws PreconditionError unless beta | M and gcd(beta, p) = 1.
SubgroupSpec make_subgroup(const Field& field, const Polynomial& f, std::uint64_t beta,
                           std::uint64_t budget = kDefaultDlogBound);

/// Order of P H in the quotient (A/f)^* / H.
std::uint64_t splitting_order(const SubgroupSpec& sub, const Polynomial& P);

/// The beta characters trivial on H, j = (M / beta) i for i < beta.
std::vector<CharacterSpec> characters_trivial_on(const SubgroupSpec& sub);
/// F_{q^L} holding every value of characters trivial on H.
Field common_value_field(const SubgroupSpec& sub);
/// Value field of `spec` into `common`, compatible with both copies of F_q.
Embedding value_embedding(const CharacterSpec& spec, const Field& common);

/// Euler product over monic irreducibles P of degree <= D of the local
/// factors of the subfield of the f-th cyclotomic function field fixed by H.
XSeries subgroup_dedekind(const SubgroupSpec& sub, std::uint64_t k, unsigned max_degree,
                          std::uint64_t budget = kDefaultEnumerationBudget);

struct IdentityReport {
  bool equal = false;
  long first_mismatch = -1;  // x-degree, -1 when equal
  XSeries lhs;
  XSeries rhs;
};

/// subgroup_dedekind against the product of L-polynomials of the characters
/// trivial on H, all mapped into common_value_field. The trivial character
/// enters in its primitive form (value 1 at f), so it contributes sum S_d(k) x^d.
IdentityReport verify_factorization(const SubgroupSpec& sub, std::uint64_t k, unsigned max_degree,
                                    std::uint64_t budget = kDefaultEnumerationBudget);

/// Absolute trace to F_p of 1/f in A/P; requires P, f coprime.
Elem artin_schreier_trace(const Polynomial& f, const Polynomial& P);

/// Euler product for the extension W^p - W = 1/f, ramified only at f.
XSeries artin_schreier_dedekind(const Polynomial& f, std::uint64_t k, unsigned max_degree,
                                std::uint64_t budget = kDefaultEnumerationBudget);

/// artin_schreier_dedekind against (sum S_d(k) x^d)^p (1 - f^k x^{deg f})^{p-1}.
IdentityReport caveat_identity_check(const Polynomial& f, std::uint64_t k, unsigned max_degree,
                                     std::uint64_t budget = kDefaultEnumerationBudget);

/// Zeros of the Euler factor 1 - f^k x^d, d = deg f = p^s d'.
struct EulerZeroReport {
  unsigned degree = 0;
  Rational valuation;                 // of every zero; equals k
  unsigned separable_degree = 0;      // d'
  std::uint64_t inseparable_degree = 1;  // p^s, the multiplicity of each zero
  unsigned residue_degree = 1;        // ord of q mod d'
  std::string verdict = "unramified";
  bool inseparable = false;
};

EulerZeroReport euler_factor_zero_report(const Polynomial& f, std::uint64_t k);

/// Multiplicative order of q modulo n (n >= 1, gcd(q, n) = 1).
unsigned order_mod(std::uint64_t q, std::uint64_t n);

}  // namespace ramify

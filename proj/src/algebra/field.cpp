#include "ramify/algebra/field.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <unordered_map>

#include "ramify/algebra/polynomial.hpp"
#include "ramify/error.hpp"

namespace ramify {

namespace {

constexpr std::uint64_t kTableBound = std::uint64_t{1} << 16;
constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 62;
constexpr std::uint64_t kMaxCharacteristic = std::uint64_t{1} << 31;

}  // namespace

struct Field::Impl {
  std::uint64_t p = 0;
  unsigned n = 0;
  std::uint64_t q = 0;
  std::vector<std::uint64_t> modulus;
  std::vector<std::uint64_t> ppow;
  bool tables = false;
  std::vector<Elem> exp_table;
  std::vector<std::uint32_t> log_table;
  Elem primitive = 0;
  std::vector<std::uint64_t> unit_primes;

  std::vector<std::uint64_t> digits(Elem a) const {
    std::vector<std::uint64_t> d(n);
    for (unsigned i = 0; i < n; ++i) {
      d[i] = a % p;
      a /= p;
    }
    return d;
  }

  Elem from_digits(const std::vector<std::uint64_t>& d) const {
    Elem a = 0;
    for (unsigned i = d.size(); i-- > 0;) a = a * p + d[i] % p;
    return a;
  }

  Elem add(Elem a, Elem b) const {
    if (p == 2) return a ^ b;
    if (n == 1) {
      Elem s = a + b;
      return s >= p ? s - p : s;
    }
    Elem r = 0;
    for (unsigned i = 0; i < n; ++i) {
      std::uint64_t da = a % p, db = b % p;
      a /= p;
      b /= p;
      std::uint64_t s = da + db;
      if (s >= p) s -= p;
      r += s * ppow[i];
    }
    return r;
  }

  Elem neg(Elem a) const {
    if (p == 2) return a;
    if (n == 1) return a == 0 ? 0 : p - a;
    Elem r = 0;
    for (unsigned i = 0; i < n; ++i) {
      std::uint64_t d = a % p;
      a /= p;
      r += (d == 0 ? 0 : p - d) * ppow[i];
    }
    return r;
  }

  Elem mul_generic(Elem a, Elem b) const {
    if (n == 1) return (a * b) % p;
    auto da = digits(a), db = digits(b);
    std::vector<std::uint64_t> prod(2 * n - 1, 0);
    for (unsigned i = 0; i < n; ++i) {
      if (da[i] == 0) continue;
      for (unsigned j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    }
    for (unsigned k = 2 * n - 1; k-- > n;) {
      std::uint64_t c = prod[k];
      if (c == 0) continue;
      prod[k] = 0;
      for (unsigned j = 0; j < n; ++j) prod[k - n + j] = (prod[k - n + j] + (p - c) * modulus[j]) % p;
    }
    prod.resize(n);
    return from_digits(prod);
  }

  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (tables) {
      std::uint64_t s = std::uint64_t{log_table[a]} + log_table[b];
      return exp_table[s];
    }
    return mul_generic(a, b);
  }

  Elem pow(Elem a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    if (tables) return exp_table[(std::uint64_t{log_table[a]} * (e % (q - 1))) % (q - 1)];
    Elem r = 1;
    while (e) {
      if (e & 1) r = mul_generic(r, a);
      a = mul_generic(a, a);
      e >>= 1;
    }
    return r;
  }

  bool has_full_order(Elem a) const {
    if (a == 0) return false;
    for (auto l : unit_primes)
      if (pow(a, (q - 1) / l) == 1) return false;
    return true;
  }
};

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > kMaxOrder / base) throw BudgetError("integer power exceeds 2^62");
    r *= base;
  }
  return r;
}

Field Field::make(std::uint64_t p, unsigned n, unsigned max_degree) {
  if (!is_prime(p)) throw PreconditionError("characteristic " + std::to_string(p) + " is not prime");
  if (p >= kMaxCharacteristic) throw PreconditionError("characteristic too large");
  if (n < 1 || n > max_degree)
    throw PreconditionError("field degree " + std::to_string(n) + " outside [1, " + std::to_string(max_degree) + "]");
  std::uint64_t q = checked_pow(p, n);

  static std::mutex mu;
  static std::map<std::pair<std::uint64_t, unsigned>, std::shared_ptr<const Impl>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({p, n});
    if (it != cache.end()) return Field(it->second);
  }

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->n = n;
  impl->q = q;
  impl->ppow.resize(n + 1);
  impl->ppow[0] = 1;
  for (unsigned i = 1; i <= n; ++i) impl->ppow[i] = impl->ppow[i - 1] * p;

  if (n == 1) {
    impl->modulus = {0, 1};
  } else {
    Field prime = make(p, 1, max_degree);
    for (std::uint64_t key = 0; key < q; ++key) {
      std::vector<Elem> c(n + 1);
      std::uint64_t k = key;
      for (unsigned i = 0; i < n; ++i) {
        c[i] = k % p;
        k /= p;
      }
      c[n] = 1;
      if (c[0] == 0) continue;
      if (is_irreducible(Polynomial(prime, c))) {
        impl->modulus.assign(c.begin(), c.end());
        break;
      }
    }
  }

  impl->unit_primes = prime_factors(q - 1);
  for (Elem a = 1; a < q; ++a) {
    if (impl->has_full_order(a)) {
      impl->primitive = a;
      break;
    }
  }

  if (q <= kTableBound) {
    impl->exp_table.resize(2 * (q - 1) + 1);
    impl->log_table.assign(q, 0);
    Elem x = 1;
    for (std::uint64_t t = 0; t < q - 1; ++t) {
      impl->exp_table[t] = x;
      impl->exp_table[t + q - 1] = x;
      impl->log_table[x] = static_cast<std::uint32_t>(t);
      x = impl->mul_generic(x, impl->primitive);
    }
    impl->exp_table[2 * (q - 1)] = 1;
    impl->tables = true;
  }

  std::shared_ptr<const Impl> shared = impl;
  std::lock_guard<std::mutex> lock(mu);
  auto [it, inserted] = cache.emplace(std::make_pair(p, n), shared);
  return Field(it->second);
}

std::uint64_t Field::characteristic() const { return impl_->p; }
unsigned Field::degree() const { return impl_->n; }
std::uint64_t Field::order() const { return impl_->q; }
std::span<const std::uint64_t> Field::modulus() const { return impl_->modulus; }
Elem Field::generator() const { return impl_->n == 1 ? 0 : impl_->p; }

Elem Field::add(Elem a, Elem b) const { return impl_->add(a, b); }
Elem Field::neg(Elem a) const { return impl_->neg(a); }
Elem Field::sub(Elem a, Elem b) const { return impl_->add(a, impl_->neg(b)); }
Elem Field::mul(Elem a, Elem b) const { return impl_->mul(a, b); }

Elem Field::inv(Elem a) const {
  if (a == 0) throw PreconditionError("inverse of zero in a finite field");
  if (impl_->tables) return impl_->exp_table[(impl_->q - 1 - impl_->log_table[a]) % (impl_->q - 1)];
  return impl_->pow(a, impl_->q - 2);
}

Elem Field::pow(Elem a, std::uint64_t e) const { return impl_->pow(a, e); }
Elem Field::frobenius(Elem a) const { return impl_->n == 1 ? a : impl_->pow(a, impl_->p); }

Elem Field::from_int(std::int64_t v) const {
  auto p = static_cast<std::int64_t>(impl_->p);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return static_cast<Elem>(r);
}

std::vector<std::uint64_t> Field::digits(Elem a) const { return impl_->digits(a); }

Elem Field::from_digits(std::span<const std::uint64_t> d) const {
  if (d.size() > impl_->n) throw PreconditionError("too many digits for field element");
  std::vector<std::uint64_t> v(d.begin(), d.end());
  for (auto x : v)
    if (x >= impl_->p) throw PreconditionError("digit out of range for field element");
  return impl_->from_digits(v);
}

std::string Field::to_string(Elem a) const {
  if (impl_->n == 1) return std::to_string(a);
  auto d = digits(a);
  std::string s;
  for (unsigned i = 0; i < d.size(); ++i) {
    if (i) s += ':';
    s += std::to_string(d[i]);
  }
  return s;
}

Elem Field::primitive_element() const { return impl_->primitive; }

std::uint64_t Field::multiplicative_order(Elem a) const {
  if (a == 0) throw PreconditionError("zero has no multiplicative order");
  std::uint64_t ord = impl_->q - 1;
  for (auto l : impl_->unit_primes) {
    while (ord % l == 0 && impl_->pow(a, ord / l) == 1) ord /= l;
  }
  return ord;
}

std::uint64_t Field::dlog(Elem g, Elem a, std::uint64_t bound) const {
  if (a == 0) throw PreconditionError("discrete log of zero");
  if (impl_->q > bound) throw BudgetError("field order exceeds discrete-log bound");
  if (!impl_->has_full_order(g)) throw PreconditionError("dlog base is not a primitive element");
  const std::uint64_t n = impl_->q - 1;
  if (impl_->tables && g == impl_->primitive) return impl_->log_table[a] % n;
  auto m = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  std::unordered_map<Elem, std::uint64_t> baby;
  baby.reserve(m);
  Elem x = 1;
  for (std::uint64_t j = 0; j < m; ++j) {
    baby.emplace(x, j);
    x = mul(x, g);
  }
  Elem step = inv(pow(g, m));
  Elem y = a;
  for (std::uint64_t i = 0; i <= m; ++i) {
    auto it = baby.find(y);
    if (it != baby.end()) return (i * m + it->second) % n;
    y = mul(y, step);
  }
  throw PreconditionError("discrete log not found");
}

std::span<const std::uint64_t> Field::unit_group_primes() const { return impl_->unit_primes; }

}  // namespace ramify

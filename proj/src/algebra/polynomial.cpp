#include "ramify/algebra/polynomial.hpp"

#include <algorithm>

#include "ramify/algebra/embedding.hpp"
#include "ramify/error.hpp"

namespace ramify {

Polynomial::Polynomial(Field field, std::vector<Elem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (auto c : coeffs_)
    if (c >= field_.order()) throw PreconditionError("coefficient outside the field");
  normalize();
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Field& field, Elem c) { return Polynomial(field, {c}); }

Polynomial Polynomial::monomial(const Field& field, Elem c, std::size_t degree) {
  std::vector<Elem> v(degree + 1, 0);
  v[degree] = c;
  return Polynomial(field, std::move(v));
}

std::size_t Polynomial::nonzero_terms() const {
  return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](Elem c) { return c != 0; }));
}

Elem Polynomial::evaluate(Elem x) const {
  Elem r = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) r = field_.add(field_.mul(r, x), coeffs_[i]);
  return r;
}

Polynomial Polynomial::derivative() const {
  Polynomial d(field_);
  if (coeffs_.size() <= 1) return d;
  d.coeffs_.resize(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    d.coeffs_[i - 1] = field_.mul(field_.from_int(static_cast<std::int64_t>(i % field_.characteristic())), coeffs_[i]);
  d.normalize();
  return d;
}

Polynomial Polynomial::frobenius() const {
  Polynomial r(field_);
  if (coeffs_.empty()) return r;
  const auto p = field_.characteristic();
  r.coeffs_.assign((coeffs_.size() - 1) * p + 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i * p] = field_.frobenius(coeffs_[i]);
  return r;
}

Polynomial Polynomial::scaled(Elem c) const {
  Polynomial r(field_);
  if (c == 0) return r;
  r.coeffs_.resize(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = field_.mul(c, coeffs_[i]);
  return r;
}

Polynomial Polynomial::shifted(std::size_t k) const {
  Polynomial r(field_);
  if (coeffs_.empty()) return r;
  r.coeffs_.assign(k, 0);
  r.coeffs_.insert(r.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return r;
}

Polynomial Polynomial::truncated(std::size_t len) const {
  Polynomial r(field_);
  r.coeffs_.assign(coeffs_.begin(), coeffs_.begin() + static_cast<long>(std::min(len, coeffs_.size())));
  r.normalize();
  return r;
}

Polynomial Polynomial::monic() const {
  if (coeffs_.empty()) return *this;
  return scaled(field_.inv(leading()));
}

Polynomial Polynomial::mapped(const Embedding& e) const {
  if (!(e.source() == field_)) throw PreconditionError("embedding source does not match polynomial field");
  Polynomial r(e.target());
  r.coeffs_.resize(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = e(coeffs_[i]);
  r.normalize();
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.empty()) return *this;
  if (coeffs_.empty()) field_ = o.field_;
  if (!(field_ == o.field_)) throw PreconditionError("polynomial field mismatch");
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = field_.add(coeffs_[i], o.coeffs_[i]);
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial Polynomial::operator-() const {
  Polynomial r(field_);
  r.coeffs_.resize(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = field_.neg(coeffs_[i]);
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return Polynomial(a.field_.valid() ? a.field_ : b.field_);
  if (!(a.field_ == b.field_)) throw PreconditionError("polynomial field mismatch");
  const Field& F = a.field_;
  // Iterate over the sparser operand's nonzero terms.
  const Polynomial& sparse = a.nonzero_terms() <= b.nonzero_terms() ? a : b;
  const Polynomial& dense = (&sparse == &a) ? b : a;
  std::vector<Elem> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < sparse.coeffs_.size(); ++i) {
    Elem s = sparse.coeffs_[i];
    if (s == 0) continue;
    Elem* dst = out.data() + i;
    if (s == 1) {
      for (std::size_t j = 0; j < dense.coeffs_.size(); ++j) dst[j] = F.add(dst[j], dense.coeffs_[j]);
    } else {
      for (std::size_t j = 0; j < dense.coeffs_.size(); ++j) {
        Elem d = dense.coeffs_[j];
        if (d != 0) dst[j] = F.add(dst[j], F.mul(s, d));
      }
    }
  }
  Polynomial r(F);
  r.coeffs_ = std::move(out);
  r.normalize();
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  const Field& F = b.field();
  if (a.is_zero()) return {Polynomial(F), Polynomial(F)};
  if (!(a.field() == F)) throw PreconditionError("polynomial field mismatch");
  std::vector<Elem> r = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  if (r.size() < bc.size()) return {Polynomial(F), a};
  std::vector<Elem> q(r.size() - db, 0);
  const Elem inv_lead = F.inv(bc.back());
  for (std::size_t k = r.size(); k-- > db;) {
    Elem c = r[k];
    if (c == 0) continue;
    Elem t = F.mul(c, inv_lead);
    q[k - db] = t;
    Elem nt = F.neg(t);
    for (std::size_t j = 0; j <= db; ++j)
      if (bc[j] != 0) r[k - db + j] = F.add(r[k - db + j], F.mul(nt, bc[j]));
  }
  r.resize(db);
  return {Polynomial(F, std::move(q)), Polynomial(F, std::move(r))};
}

Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).remainder; }

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial pow(const Polynomial& a, std::uint64_t k) {
  const Field& F = a.field();
  if (k == 0) return Polynomial::constant(F, 1);
  if (a.is_zero()) return a;
  const auto p = F.characteristic();
  Polynomial result = Polynomial::constant(F, 1);
  Polynomial frob = a;
  while (k) {
    std::uint64_t digit = k % p;
    k /= p;
    if (digit) {
      // frob^digit by square-and-multiply; digit < p.
      Polynomial term = Polynomial::constant(F, 1), base = frob;
      std::uint64_t e = digit;
      while (e) {
        if (e & 1) term *= base;
        e >>= 1;
        if (e) base = base * base;
      }
      result *= term;
    }
    if (k) frob = frob.frobenius();
  }
  return result;
}

Polynomial powmod(Polynomial a, std::uint64_t k, const Polynomial& m) {
  Polynomial r = Polynomial::constant(m.field(), 1) % m;
  a = a % m;
  while (k) {
    if (k & 1) r = (r * a) % m;
    k >>= 1;
    if (k) a = (a * a) % m;
  }
  return r;
}

Polynomial invmod(const Polynomial& a, const Polynomial& m) {
  const Field& F = m.field();
  Polynomial r0 = m, r1 = a % m;
  Polynomial s0(F), s1 = Polynomial::constant(F, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Polynomial s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw PreconditionError("polynomial not invertible modulo m");
  return (s0.scaled(F.inv(r0.leading()))) % m;
}

bool is_irreducible(const Polynomial& f) {
  if (!f.is_monic() || f.degree() < 1) throw PreconditionError("irreducibility test needs a monic polynomial of degree >= 1");
  const Field& F = f.field();
  const auto n = static_cast<unsigned>(f.degree());
  const std::uint64_t q = F.order();
  const Polynomial x = Polynomial::variable(F) % f;
  // h[j] = theta^(q^j) mod f.
  std::vector<Polynomial> h(n + 1);
  h[0] = x;
  for (unsigned j = 1; j <= n; ++j) h[j] = powmod(h[j - 1], q, f);
  if (!(h[n] == x)) return false;
  for (auto l : prime_factors(n)) {
    Polynomial g = gcd(h[n / l] - x, f);
    if (g.degree() != 0) return false;
  }
  return true;
}

bool is_squarefree(const Polynomial& f) {
  if (f.degree() < 1) return true;
  return gcd(f, f.derivative()).degree() == 0;
}

std::uint64_t polynomial_key(const Polynomial& f) {
  std::uint64_t key = 0;
  const auto q = f.field().order();
  const auto& c = f.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) key = key * q + c[i];
  return key;
}

std::string to_string(const Polynomial& f, const std::string& var) {
  if (f.is_zero()) return "0";
  const Field& F = f.field();
  std::string s;
  const auto& c = f.coefficients();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!s.empty()) s += '+';
    std::string coeff = F.to_string(c[i]);
    if (i == 0) {
      s += coeff;
    } else {
      if (c[i] != 1) s += coeff + '*';
      s += var;
      if (i > 1) s += '^' + std::to_string(i);
    }
  }
  return s;
}

}  // namespace ramify

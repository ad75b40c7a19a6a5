#include "ramify/algebra/enumerate.hpp"

#include "ramify/error.hpp"

namespace ramify {

MonicRange::MonicRange(Field field, unsigned degree, std::uint64_t budget) : field_(std::move(field)), degree_(degree) {
  const std::uint64_t q = field_.order();
  count_ = 1;
  for (unsigned i = 0; i < degree; ++i) {
    if (count_ > budget / q) throw BudgetError("monic enumeration of degree " + std::to_string(degree) + " exceeds budget");
    count_ *= q;
  }
  if (count_ > budget) throw BudgetError("monic enumeration exceeds budget");
}

Polynomial MonicRange::at(std::uint64_t index) const {
  std::vector<Elem> c(degree_ + 1);
  for (unsigned i = 0; i < degree_; ++i) {
    c[i] = index % field_.order();
    index /= field_.order();
  }
  c[degree_] = 1;
  return Polynomial(field_, std::move(c));
}

MonicRange::iterator::iterator(const MonicRange* range, std::uint64_t index) : range_(range), index_(index) {
  if (index_ < range_->size()) {
    current_ = range_->at(index_);
    digits_ = current_.coefficients();
  }
}

MonicRange::iterator& MonicRange::iterator::operator++() {
  ++index_;
  if (index_ >= range_->size()) return *this;
  const std::uint64_t q = range_->field().order();
  for (unsigned i = 0; i < range_->degree(); ++i) {
    if (++digits_[i] < q) break;
    digits_[i] = 0;
  }
  current_ = Polynomial(range_->field(), digits_);
  return *this;
}

std::vector<Polynomial> irreducibles_up_to(const Field& field, unsigned max_degree, std::uint64_t budget) {
  std::vector<Polynomial> out;
  for (unsigned d = 1; d <= max_degree; ++d) {
    MonicRange range(field, d, budget);
    for (const auto& f : range) {
      // Irreducibles of degree >= 2 have a nonzero constant term.
      if (d >= 2 && f[0] == 0) continue;
      if (is_irreducible(f)) out.push_back(f);
    }
  }
  return out;
}

std::uint64_t necklace_count(std::uint64_t q, unsigned d) {
  auto mobius = [](unsigned n) {
    int m = 1;
    for (unsigned p = 2; p * p <= n; ++p) {
      if (n % p == 0) {
        n /= p;
        if (n % p == 0) return 0;
        m = -m;
      }
    }
    if (n > 1) m = -m;
    return m;
  };
  std::int64_t total = 0;
  for (unsigned e = 1; e <= d; ++e)
    if (d % e == 0) total += mobius(e) * static_cast<std::int64_t>(checked_pow(q, d / e));
  return static_cast<std::uint64_t>(total) / d;
}

}  // namespace ramify

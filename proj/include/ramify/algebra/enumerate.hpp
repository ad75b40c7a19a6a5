#pragma once

#include <cstdint>
#include <iterator>
#include <vector>

#include "ramify/algebra/polynomial.hpp"

namespace ramify {

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 24;

/// All q^d monic polynomials of degree d over F_q, in base-q counting order
/// of the non-leading coefficients (constant term is the least significant
/// digit). Random access by index lets callers partition the range.
class MonicRange {
 public:
  /// Throws BudgetError when q^d exceeds `budget`.
  MonicRange(Field field, unsigned degree, std::uint64_t budget = kDefaultEnumerationBudget);

  std::uint64_t size() const { return count_; }
  unsigned degree() const { return degree_; }
  const Field& field() const { return field_; }
  Polynomial at(std::uint64_t index) const;

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Polynomial;
    using difference_type = std::ptrdiff_t;
    using pointer = const Polynomial*;
    using reference = const Polynomial&;

    iterator() = default;
    iterator(const MonicRange* range, std::uint64_t index);
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.index_ == b.index_; }

   private:
    const MonicRange* range_ = nullptr;
    std::uint64_t index_ = 0;
    std::vector<Elem> digits_;
    Polynomial current_;
  };

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(this, count_); }

 private:
  Field field_;
  unsigned degree_;
  std::uint64_t count_;
};

/// Every monic irreducible of degree 1..max_degree, ordered by degree and then
/// by enumeration order.
std::vector<Polynomial> irreducibles_up_to(const Field& field, unsigned max_degree,
                                           std::uint64_t budget = kDefaultEnumerationBudget);

/// Number of monic irreducibles of degree d by the necklace formula.
std::uint64_t necklace_count(std::uint64_t q, unsigned d);

}  // namespace ramify

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace ramify {

/// How the digit sequence continues past the explicit window.
enum class Tail {
  Zero,       ///< all zero: a nonnegative integer
  Full,       ///< all q-1: a negative integer
  Truncated,  ///< unknown: a truncation of an arbitrary element of Z_p
};

/// y = sum_i c_i q^i in Z_p with base-q digits and a tail marker.
///
/// For Zero and Full tails, trailing digits equal to the tail digit are
/// dropped so each integer has one representation.
class PAdicDigits {
 public:
  PAdicDigits(std::uint64_t base, std::vector<std::uint64_t> digits, Tail tail);

  static PAdicDigits from_integer(std::uint64_t base, std::int64_t y);

  std::uint64_t base() const { return base_; }
  const std::vector<std::uint64_t>& digits() const { return digits_; }
  Tail tail() const { return tail_; }
  std::size_t length() const { return digits_.size(); }

  /// Digit i; past the window this is the tail digit (throws for Truncated).
  std::uint64_t digit(std::size_t i) const;
  std::optional<std::int64_t> to_integer() const;
  /// Explicit window widened to at least `length` digits (not renormalized).
  std::vector<std::uint64_t> padded_digits(std::size_t length) const;
  PAdicDigits negated() const;

  friend bool operator==(const PAdicDigits& a, const PAdicDigits& b) {
    return a.base_ == b.base_ && a.tail_ == b.tail_ && a.digits_ == b.digits_;
  }

 private:
  std::uint64_t base_;
  std::vector<std::uint64_t> digits_;
  Tail tail_;
};

}  // namespace ramify

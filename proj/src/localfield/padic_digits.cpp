#include "ramify/localfield/padic_digits.hpp"

#include "ramify/error.hpp"

namespace ramify {

PAdicDigits::PAdicDigits(std::uint64_t base, std::vector<std::uint64_t> digits, Tail tail)
    : base_(base), digits_(std::move(digits)), tail_(tail) {
  if (base_ < 2) throw PreconditionError("digit base must be at least 2");
  for (auto d : digits_)
    if (d >= base_) throw PreconditionError("digit out of range for base");
  if (tail_ != Tail::Truncated) {
    const std::uint64_t t = tail_ == Tail::Zero ? 0 : base_ - 1;
    while (!digits_.empty() && digits_.back() == t) digits_.pop_back();
  }
}

PAdicDigits PAdicDigits::from_integer(std::uint64_t base, std::int64_t y) {
  std::vector<std::uint64_t> d;
  if (y >= 0) {
    auto v = static_cast<std::uint64_t>(y);
    while (v) {
      d.push_back(v % base);
      v /= base;
    }
    return PAdicDigits(base, std::move(d), Tail::Zero);
  }
  // y = (y + q^L) - q^L with 0 <= y + q^L < q^L.
  auto m = static_cast<std::uint64_t>(-(y + 1)) + 1;  // |y| without overflow
  std::uint64_t ql = 1;
  std::size_t len = 0;
  while (ql < m) {
    ql *= base;
    ++len;
  }
  std::uint64_t v = ql - m;
  for (std::size_t i = 0; i < len; ++i) {
    d.push_back(v % base);
    v /= base;
  }
  return PAdicDigits(base, std::move(d), Tail::Full);
}

std::uint64_t PAdicDigits::digit(std::size_t i) const {
  if (i < digits_.size()) return digits_[i];
  switch (tail_) {
    case Tail::Zero:
      return 0;
    case Tail::Full:
      return base_ - 1;
    case Tail::Truncated:
      break;
  }
  throw PrecisionError("digit requested beyond a truncated window");
}

std::optional<std::int64_t> PAdicDigits::to_integer() const {
  if (tail_ == Tail::Truncated) return std::nullopt;
  __int128 v = 0, ql = 1;
  for (auto d : digits_) {
    v += static_cast<__int128>(d) * ql;
    ql *= base_;
    if (ql > (static_cast<__int128>(1) << 63)) return std::nullopt;
  }
  if (tail_ == Tail::Full) v -= ql;
  if (v > INT64_MAX || v < INT64_MIN) return std::nullopt;
  return static_cast<std::int64_t>(v);
}

std::vector<std::uint64_t> PAdicDigits::padded_digits(std::size_t length) const {
  std::vector<std::uint64_t> d = digits_;
  while (d.size() < length) d.push_back(digit(d.size()));
  return d;
}

PAdicDigits PAdicDigits::negated() const {
  if (tail_ != Tail::Truncated) {
    auto v = to_integer();
    if (!v || *v == INT64_MIN) throw PreconditionError("integer too large to negate");
    return from_integer(base_, -*v);
  }
  // Complement plus one inside the window; the carry out is unknown tail.
  std::vector<std::uint64_t> d(digits_.size());
  std::uint64_t carry = 1;
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    std::uint64_t c = base_ - 1 - digits_[i] + carry;
    carry = c / base_;
    d[i] = c % base_;
  }
  return PAdicDigits(base_, std::move(d), Tail::Truncated);
}

}  // namespace ramify

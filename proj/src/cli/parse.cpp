#include "ramify/cli/parse.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "ramify/error.hpp"

namespace ramify {

namespace {

std::string strip(const std::string& s) {
  std::string r;
  for (char c : s)
    if (c != ' ' && c != '\t') r += c;
  return r;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out(1);
  for (char c : s) {
    if (c == sep)
      out.emplace_back();
    else
      out.back() += c;
  }
  return out;
}

std::uint64_t parse_unsigned(const std::string& s, const std::string& what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("bad " + what + ": '" + s + "'");
  return v;
}

// term -> (coefficient, exponent)
std::pair<Elem, std::int64_t> parse_term(const Field& F, const std::string& term, bool signed_exponents) {
  if (term.empty()) throw ParseError("empty term");
  std::string coeff, power;
  auto t = term.find('t');
  if (t == std::string::npos) {
    coeff = term;
  } else {
    coeff = term.substr(0, t);
    power = term.substr(t + 1);
    if (!coeff.empty()) {
      if (coeff.back() != '*') throw ParseError("expected '*' before t in '" + term + "'");
      coeff.pop_back();
      if (coeff.empty()) throw ParseError("missing coefficient before '*' in '" + term + "'");
    }
  }
  Elem c = coeff.empty() ? 1 : parse_element(F, coeff);
  std::int64_t e = 0;
  if (t != std::string::npos) {
    e = 1;
    if (!power.empty()) {
      if (power[0] != '^') throw ParseError("expected '^' after t in '" + term + "'");
      std::string digits = power.substr(1);
      bool negative = !digits.empty() && digits[0] == '-';
      if (negative) {
        if (!signed_exponents) throw ParseError("negative exponent in polynomial '" + term + "'");
        digits.erase(0, 1);
      }
      auto u = parse_unsigned(digits, "exponent");
      if (u > (std::uint64_t{1} << 40)) throw ParseError("exponent too large: " + digits);
      e = negative ? -static_cast<std::int64_t>(u) : static_cast<std::int64_t>(u);
    }
  }
  return {c, e};
}

std::map<std::int64_t, Elem> parse_terms(const Field& F, const std::string& text, bool signed_exponents) {
  std::string s = strip(text);
  if (s.empty()) throw ParseError("empty polynomial");
  std::map<std::int64_t, Elem> terms;
  for (const auto& term : split(s, '+')) {
    auto [c, e] = parse_term(F, term, signed_exponents);
    terms[e] = F.add(terms[e], c);
  }
  return terms;
}

}  // namespace

Elem parse_element(const Field& F, const std::string& text) {
  std::string s = strip(text);
  const auto p = F.characteristic();
  auto parts = split(s, ':');
  if (parts.size() > F.degree()) throw ParseError("too many digits in '" + s + "'");
  std::vector<std::uint64_t> d;
  for (const auto& part : parts) {
    auto v = parse_unsigned(part, "coefficient");
    if (v >= p) throw ParseError("coefficient out of range: " + part + " >= " + std::to_string(p));
    d.push_back(v);
  }
  return F.from_digits(d);
}

Polynomial parse_polynomial(const Field& F, const std::string& text) {
  auto terms = parse_terms(F, text, false);
  std::vector<Elem> c(static_cast<std::size_t>(terms.rbegin()->first) + 1, 0);
  for (auto [e, v] : terms) c[static_cast<std::size_t>(e)] = v;
  return Polynomial(F, std::move(c));
}

LaurentSeries parse_laurent(const LocalField& lf, const std::string& text) {
  const Field& F = lf.residue();
  std::string s = strip(text);
  if (s.empty()) throw ParseError("empty series");
  std::map<std::int64_t, Elem> terms;
  std::int64_t prec = kExactPrecision;
  for (const auto& term : split(s, '+')) {
    if (term.rfind("O(", 0) == 0) {
      if (term.back() != ')') throw ParseError("unclosed O( in '" + term + "'");
      auto [c, e] = parse_term(F, term.substr(2, term.size() - 3), true);
      if (c != 1) throw ParseError("O( takes a bare power of t, got '" + term + "'");
      prec = std::min(prec, -e);
      continue;
    }
    auto [c, e] = parse_term(F, term, true);
    terms[e] = F.add(terms[e], c);
  }
  auto x = LaurentSeries::zero(lf);
  for (auto [e, v] : terms)
    if (v) x += LaurentSeries::theta_power(lf, e, v);
  return x.truncated(prec);
}

std::vector<LaurentSeries> parse_local_polynomial(const LocalField& lf, const std::string& text) {
  std::vector<LaurentSeries> out;
  for (const auto& item : split(text, ';'))
    out.push_back(strip(item).empty() ? LaurentSeries::zero(lf) : parse_laurent(lf, item));
  return out;
}

DigitPermutation parse_permutation(const std::string& text) {
  std::string s = strip(text);
  if (s.empty() || s == "id") return {};
  std::vector<std::pair<std::size_t, std::size_t>> map;
  for (const auto& item : split(s, ',')) {
    auto arrow = item.find('>');
    if (arrow == std::string::npos) throw ParseError("expected 'i>j' in permutation, got '" + item + "'");
    auto i = parse_unsigned(item.substr(0, arrow), "digit position");
    auto j = parse_unsigned(item.substr(arrow + 1), "digit position");
    if (i > 4096 || j > 4096) throw ParseError("digit position too large in '" + item + "'");
    map.emplace_back(i, j);
  }
  try {
    return DigitPermutation(map);
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("not a permutation: ") + e.what());
  }
}

PAdicDigits parse_digits(std::uint64_t q, const std::string& text) {
  std::string s = strip(text);
  Tail tail = Tail::Truncated;
  if (auto semi = s.find(';'); semi != std::string::npos) {
    std::string t = s.substr(semi + 1);
    s.erase(semi);
    if (t == "zero")
      tail = Tail::Zero;
    else if (t == "full")
      tail = Tail::Full;
    else if (t != "trunc")
      throw ParseError("unknown digit tail '" + t + "'");
  }
  std::vector<std::uint64_t> d;
  if (!s.empty())
    for (const auto& item : split(s, ',')) {
      auto v = parse_unsigned(item, "digit");
      if (v >= q) throw ParseError("digit out of range: " + item + " >= " + std::to_string(q));
      d.push_back(v);
    }
  return PAdicDigits(q, std::move(d), tail);
}

std::int64_t parse_integer(const std::string& text) {
  std::string s = strip(text);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) throw ParseError("bad integer: '" + s + "'");
  return v;
}

}  // namespace ramify

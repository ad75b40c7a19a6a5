#include "ramify/sq/sq.hpp"

#include <set>

#include "ramify/error.hpp"
#include "ramify/newton/newton.hpp"
#include "ramify/zeta/zeta.hpp"

namespace ramify {

DigitPermutation::DigitPermutation(const std::vector<std::pair<std::size_t, std::size_t>>& map) {
  std::set<std::size_t> domain, image;
  for (auto [i, j] : map) {
    if (!domain.insert(i).second) throw PreconditionError("position " + std::to_string(i) + " listed twice");
    if (!image.insert(j).second) throw PreconditionError("image " + std::to_string(j) + " listed twice");
    if (i != j) map_[i] = j;
  }
  if (domain != image) throw PreconditionError("digit map does not permute its domain");
}

std::size_t DigitPermutation::operator()(std::size_t i) const {
  auto it = map_.find(i);
  return it == map_.end() ? i : it->second;
}

std::size_t DigitPermutation::support_bound() const { return map_.empty() ? 0 : map_.rbegin()->first + 1; }

DigitPermutation DigitPermutation::inverse() const {
  std::vector<std::pair<std::size_t, std::size_t>> inv;
  for (auto [i, j] : map_) inv.push_back({j, i});
  return DigitPermutation(inv);
}

DigitPermutation DigitPermutation::after(const DigitPermutation& other) const {
  const std::size_t n = std::max(support_bound(), other.support_bound());
  std::vector<std::pair<std::size_t, std::size_t>> m;
  for (std::size_t i = 0; i < n; ++i) m.push_back({i, (*this)(other(i))});
  return DigitPermutation(m);
}

std::string DigitPermutation::to_string() const {
  if (map_.empty()) return "id";
  std::string s;
  for (auto [i, j] : map_) {
    if (!s.empty()) s += ",";
    s += std::to_string(i) + ">" + std::to_string(j);
  }
  return s;
}

PAdicDigits act_padic(const DigitPermutation& rho, const PAdicDigits& y) {
  const std::size_t L = rho.support_bound();
  if (y.tail() == Tail::Truncated && L > y.length())
    throw PreconditionError("permutation support exceeds the truncated digit window");
  const auto d = y.padded_digits(std::max(L, y.length()));
  std::vector<std::uint64_t> out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out[rho(i)] = d[i];
  return PAdicDigits(y.base(), std::move(out), y.tail());
}

std::int64_t act_integer(const DigitPermutation& rho, std::uint64_t q, std::int64_t n) {
  auto v = act_padic(rho, PAdicDigits::from_integer(q, n)).to_integer();
  if (!v) throw PreconditionError("digit action leaves the 64-bit range");
  return *v;
}

std::string to_string(MonomialMode m) {
  return m == MonomialMode::InverseExponents ? "inverse-exponents" : "direct-exponents";
}

LaurentSeries act_laurent(const DigitPermutation& rho, const LaurentSeries& s, MonomialMode mode) {
  const LocalField& lf = s.field();
  if (lf.ramification() != 1) throw PreconditionError("monomial action needs an unramified field");
  const auto q = lf.residue().order();
  const bool inverse = mode == MonomialMode::InverseExponents;
  std::int64_t prec = kExactPrecision;
  if (!s.is_exact()) {
    const std::size_t L = rho.support_bound();
    std::int64_t block = 1;
    for (std::size_t i = 0; i < L; ++i) {
      if (block > (std::int64_t{1} << 40) / static_cast<std::int64_t>(q))
        throw PreconditionError("permutation support too wide for the exponent window");
      block *= static_cast<std::int64_t>(q);
    }
    const std::int64_t N = s.precision();
    prec = inverse ? block * floor_div(N, block) : block * (-floor_div(-N, block) - 1) + 1;
  }
  LaurentSeries out = LaurentSeries::zero(lf, prec);
  const auto& c = s.coefficients();
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    const std::int64_t m = s.leading_exponent() + static_cast<std::int64_t>(j);  // pi-exponent: theta^{-m}
    const std::int64_t image = inverse ? act_integer(rho, q, m) : -act_integer(rho, q, -m);
    if (image < prec) out += LaurentSeries::monomial(lf, c[j], image).truncated(prec);
  }
  return out;
}

OrbitReport zero_orbit_experiment(const Field& field, std::uint64_t k, const DigitPermutation& rho, std::int64_t prec) {
  if (k < 1) throw PreconditionError("orbit experiment needs k >= 1");
  OrbitReport r;
  r.k = k;
  const auto image = act_integer(rho, field.order(), static_cast<std::int64_t>(k));
  if (image < 1) throw PreconditionError("rho_*(k) must be a positive integer");
  r.image_k = static_cast<std::uint64_t>(image);

  LocalField K(field);
  auto witnesses = [&](std::uint64_t kk, std::vector<Rational>& vals) {
    const auto f = to_local(K, special_polynomial(field, kk).coefficients);
    std::vector<LaurentSeries> out;
    for (const auto& z : classify_zeroes(f, prec)) {
      for (std::int64_t i = 0; i < z.count; ++i) vals.push_back(z.valuation);
      for (const auto& w : z.witnesses) {
        if (w.field() == K)
          out.push_back(w);
        else
          r.notes.push_back("z_" + std::to_string(kk) + ": zero outside K skipped");
      }
      if (static_cast<std::int64_t>(z.witnesses.size()) < z.count)
        r.notes.push_back("z_" + std::to_string(kk) + ": " + to_string(z.verdict) + " zero without witness");
    }
    return out;
  };
  const auto source = witnesses(k, r.valuations);
  const auto target = witnesses(r.image_k, r.image_valuations);

  for (MonomialMode mode : {MonomialMode::InverseExponents, MonomialMode::DirectExponents}) {
    OrbitMode om{mode, {}};
    for (std::size_t i = 0; i < source.size(); ++i) {
      OrbitPair pair;
      pair.source = i;
      pair.source_valuation = source[i].normalized_valuation();
      const LaurentSeries moved = act_laurent(rho, source[i], mode);
      bool first = true;
      for (std::size_t j = 0; j < target.size(); ++j) {
        const LaurentSeries diff = moved - target[j];
        const std::optional<std::int64_t> d =
            diff.is_zero() ? std::nullopt : std::optional<std::int64_t>(diff.valuation());
        const bool better = first || (!d && pair.distance) || (d && pair.distance && *d > *pair.distance);
        if (better) {
          pair.nearest = j;
          pair.distance = d;
          pair.precision = diff.precision();
          first = false;
        }
      }
      if (!first) om.pairs.push_back(pair);
    }
    r.modes.push_back(std::move(om));
  }
  return r;
}

}  // namespace ramify

#include "ramify/newton/newton.hpp"

#include <numeric>
#include <optional>
#include <stdexcept>

#include "ramify/algebra/embedding.hpp"
#include "ramify/algebra/xseries.hpp"
#include "ramify/error.hpp"

namespace ramify {

namespace {

const LocalField& field_of(const LocalPolynomial& f) {
  if (f.empty()) throw PreconditionError("empty polynomial");
  return f.front().field();
}

// Slope times e, which must be an integer for residuals and lifts.
std::int64_t pi_slope(const LocalPolynomial& f, const Segment& s) {
  const Rational scaled = s.slope * field_of(f).ramification();
  if (!is_integral(scaled)) throw PreconditionError("segment slope is not integral");
  return scaled.numerator();
}

Rational hull_height(const NewtonPolygon& np, std::int64_t i) {
  for (const auto& s : np.segments)
    if (i >= s.start && i <= s.start + s.length) {
      const Rational v0 = np.vertices.front().valuation;
      Rational h = v0;
      for (const auto& t : np.segments) {
        if (t.start >= s.start) break;
        h += t.slope * t.length;
      }
      return h + s.slope * (i - s.start);
    }
  return np.vertices.front().valuation;
}

LocalPolynomial derivative(const LocalPolynomial& g) {
  LocalPolynomial d;
  const Field& F = field_of(g).residue();
  for (std::size_t i = 1; i < g.size(); ++i) d.push_back(g[i].scaled(F.from_int(static_cast<std::int64_t>(i))));
  if (d.empty()) d.push_back(LaurentSeries::zero(field_of(g)));
  return d;
}

// Newton on g(u) = pi^{-b} f(pi^mu u), whose coefficients are integral and
// whose residue has u0 as a simple root.
LaurentSeries lift(const LocalPolynomial& f, std::int64_t mu, std::int64_t b, Elem u0, std::int64_t prec,
                   std::vector<std::int64_t>* log) {
  const LocalField& lf = field_of(f);
  const std::int64_t P = std::max<std::int64_t>(prec - b, 1);
  LocalPolynomial g;
  for (std::size_t i = 0; i < f.size(); ++i)
    g.push_back(f[i].shifted(mu * static_cast<std::int64_t>(i) - b).truncated(P));
  const LocalPolynomial dg = derivative(g);
  LaurentSeries u = LaurentSeries::constant(lf, u0).truncated(P);
  std::int64_t previous = -1;
  while (true) {
    const LaurentSeries value = evaluate(g, u).truncated(P);
    const std::int64_t v = value.valuation();
    if (log) log->push_back(v + b);
    if (v >= P) break;
    if (v <= previous) throw PrecisionError("stalled: v(f) did not increase");
    previous = v;
    const LaurentSeries slope = evaluate(dg, u);
    if (slope.is_zero() || slope.valuation() != 0) throw PrecisionError("stalled: derivative is not a unit");
    u = (u - value * inv(slope, P)).truncated(P);
  }
  LaurentSeries rho = u.shifted(mu);
  if (evaluate(f, rho).valuation() < prec) throw PrecisionError("stalled: root fails the substitution check");
  return rho;
}

struct SegmentLine {
  std::int64_t mu;  // root valuation in pi-units
  std::int64_t b;   // height of the line at index 0
};

SegmentLine line_of(const LocalPolynomial& f, const Segment& s) {
  const std::int64_t slope = pi_slope(f, s);
  return {-slope, f[static_cast<std::size_t>(s.start)].valuation() - slope * s.start};
}

// f(a + y) as a polynomial in y.
LocalPolynomial taylor_shift(const LocalPolynomial& f, const LaurentSeries& a) {
  const LocalField& lf = field_of(f);
  const Field& F = lf.residue();
  const std::size_t n = f.size();
  std::vector<LaurentSeries> powers{LaurentSeries::one(lf)};
  for (std::size_t i = 1; i < n; ++i) powers.push_back(powers.back() * a);
  LocalPolynomial out(n, LaurentSeries::zero(lf));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = j; i < n; ++i) {
      const auto c = binomial_mod(i, j, F.characteristic());
      if (c) out[j] += (f[i] * powers[i - j]).scaled(F.from_int(static_cast<std::int64_t>(c)));
    }
  return out;
}

// Smallest r with every root of R in F_{Q^r}.
unsigned splitting_degree(const Polynomial& R) {
  const Field& F = R.field();
  const auto u = Polynomial::variable(F);
  const auto h = static_cast<std::uint64_t>(R.degree());
  Polynomial w = u % R;
  for (unsigned r = 1; r <= 64; ++r) {
    w = powmod(w, F.order(), R);
    if (powmod(w - u, h, R).is_zero()) return r;
  }
  throw BudgetError("residual splitting field is too large");
}

struct RootMult {
  Elem root;
  unsigned multiplicity;
};

std::vector<RootMult> roots_with_multiplicity(Polynomial R) {
  const Field& F = R.field();
  std::vector<RootMult> out;
  for (Elem x = 0; x < F.order(); ++x) {
    if (R.evaluate(x) != 0) continue;
    const Polynomial lin(F, {F.neg(x), 1});
    unsigned m = 0;
    while (true) {
      auto dm = divmod(R, lin);
      if (!dm.remainder.is_zero()) break;
      R = dm.quotient;
      ++m;
    }
    out.push_back({x, m});
  }
  return out;
}

unsigned relative_degree(const Field& big, const Field& small) { return big.degree() / small.degree(); }

struct Classified {
  std::size_t zero_roots = 0;
  std::vector<ZeroReport> reports;
};

Classified classify_impl(const LocalPolynomial& input, const Field& base, const Embedding& from_base,
                         std::int64_t prec, unsigned depth, std::uint64_t bound, std::optional<Rational> above) {
  Classified result;
  LocalPolynomial f = input;
  while (f.size() > 1 && f.front().is_zero()) {
    f.erase(f.begin());
    ++result.zero_roots;
  }
  const LocalField& lf = field_of(f);
  const Field& F = lf.residue();
  const NewtonPolygon np = newton_polygon(f);
  for (const auto& seg : np.segments) {
    ZeroReport rep;
    rep.valuation = -seg.slope;
    rep.count = seg.length;
    if (above && !(rep.valuation > *above)) continue;
    if (!is_integral(seg.slope)) {
      const auto den = seg.slope.denominator();
      rep.ramification_index = den;
      rep.verdict = den % static_cast<std::int64_t>(F.characteristic()) == 0 ? Verdict::WildFlag : Verdict::TameRamified;
      result.reports.push_back(std::move(rep));
      continue;
    }
    const SegmentLine line = line_of(f, seg);
    auto lift_into = [&](const LocalPolynomial& g, Elem u0, ZeroReport& r) {
      std::vector<std::int64_t> steps;
      try {
        r.witnesses.push_back(lift(g, line.mu, line.b, u0, prec, &steps));
      } catch (const PrecisionError& e) {
        r.log.push_back(e.what());
      }
      std::string s = "v(f(x_n)):";
      for (auto v : steps) s += " " + std::to_string(v);
      r.log.push_back(s);
    };
    if (seg.length == 1) {
      rep.verdict = Verdict::UnramifiedSimple;
      rep.residue_field_degree = relative_degree(F, base);
      const auto i0 = static_cast<std::size_t>(seg.start);
      lift_into(f, F.neg(F.div(f[i0].leading_coefficient(), f[i0 + 1].leading_coefficient())), rep);
      result.reports.push_back(std::move(rep));
      continue;
    }

    const Polynomial R = residual_polynomial(f, seg);
    const unsigned r = splitting_degree(R);
    const Field C = Field::make(F.characteristic(), F.degree() * r, 62);
    if (C.order() > bound) {
      rep.log.push_back("residual root search in a field of order " + std::to_string(C.order()) + " exceeds the bound");
      result.reports.push_back(std::move(rep));
      continue;
    }
    const Embedding base_to_c = ff_embed(base, C);
    const Embedding to_c = ff_embed_over(from_base, base_to_c);
    const LocalField lc = lf.extended(to_c);
    LocalPolynomial g;
    for (const auto& c : f) g.push_back(c.mapped(to_c));
    const auto roots = roots_with_multiplicity(R.mapped(to_c));

    ZeroReport simple = rep;
    simple.verdict = Verdict::Unramified;
    simple.residue_field_degree = relative_degree(C, base);
    simple.count = 0;
    for (const auto& [root, m] : roots)
      if (m == 1) {
        ++simple.count;
        lift_into(g, root, simple);
      }
    if (simple.count) result.reports.push_back(std::move(simple));

    for (const auto& [root, m] : roots) {
      if (m == 1) continue;
      ZeroReport rest = rep;
      rest.count = m;
      if (depth == 0) {
        rest.verdict = Verdict::Undetermined;
        rest.log.push_back("repeated residual root; recursion depth exhausted");
        result.reports.push_back(std::move(rest));
        continue;
      }
      const LaurentSeries a = LaurentSeries::monomial(lc, root, line.mu);
      const Classified sub = classify_impl(taylor_shift(g, a), base, base_to_c, prec, depth - 1, bound,
                                           Rational(line.mu, lf.ramification()));
      if (sub.zero_roots) {
        ZeroReport exact = rep;
        exact.verdict = Verdict::Unramified;
        exact.count = static_cast<std::int64_t>(sub.zero_roots);
        exact.residue_field_degree = relative_degree(C, base);
        exact.witnesses.assign(sub.zero_roots, a);
        exact.log.push_back("exact root of multiplicity " + std::to_string(sub.zero_roots));
        result.reports.push_back(std::move(exact));
      }
      for (ZeroReport s : sub.reports) {
        s.valuation = rep.valuation;
        if (s.verdict == Verdict::UnramifiedSimple) s.verdict = Verdict::Unramified;
        for (auto& w : s.witnesses) w = a.mapped(ff_embed_over(base_to_c, ff_embed(base, w.field().residue()))) + w;
        s.log.insert(s.log.begin(), "shifted by a repeated residual root");
        result.reports.push_back(std::move(s));
      }
    }
  }
  return result;
}

}  // namespace

LocalPolynomial to_local(const LocalField& lf, const std::vector<Polynomial>& coeffs) {
  LocalPolynomial out;
  for (const auto& c : coeffs) out.push_back(LaurentSeries::from_polynomial(lf, c));
  return out;
}

LaurentSeries evaluate(const LocalPolynomial& f, const LaurentSeries& x) {
  if (f.empty()) return LaurentSeries::zero(x.field());
  LaurentSeries acc = f.back();
  for (std::size_t i = f.size() - 1; i-- > 0;) acc = acc * x + f[i];
  return acc;
}

NewtonPolygon newton_polygon(const LocalPolynomial& f) {
  const LocalField& lf = field_of(f);
  const std::int64_t e = lf.ramification();
  if (f.front().is_zero()) {
    if (f.front().is_exact()) throw PreconditionError("constant coefficient vanishes");
    throw PrecisionError("constant coefficient is not certified nonzero");
  }
  NewtonPolygon np;
  np.input_length = f.size();
  std::size_t last = f.size() - 1;
  while (last > 0 && f[last].is_zero() && f[last].is_exact()) --last;

  std::vector<Vertex> hull;
  auto turns_left = [](const Vertex& a, const Vertex& b, const Vertex& c) {
    return (b.valuation - a.valuation) * (c.index - a.index) < (c.valuation - a.valuation) * (b.index - a.index);
  };
  for (std::size_t i = 0; i <= last; ++i) {
    if (f[i].is_zero()) continue;
    Vertex v{static_cast<std::int64_t>(i), f[i].normalized_valuation()};
    while (hull.size() >= 2 && !turns_left(hull[hull.size() - 2], hull.back(), v)) hull.pop_back();
    hull.push_back(v);
  }
  np.vertices = hull;
  for (std::size_t j = 1; j < hull.size(); ++j) {
    const auto len = hull[j].index - hull[j - 1].index;
    np.segments.push_back({hull[j - 1].index, len, (hull[j].valuation - hull[j - 1].valuation) / len});
  }
  for (std::size_t i = 1; i <= last; ++i) {
    if (!f[i].is_zero() || f[i].is_exact()) continue;
    const auto idx = static_cast<std::int64_t>(i);
    if (idx > hull.back().index || !(Rational(f[i].precision(), e) > hull_height(np, idx)))
      throw PrecisionError("insufficient precision to certify the Newton polygon at index " + std::to_string(i));
  }
  return np;
}

RhCheck rh_check(const NewtonPolygon& np) {
  RhCheck r;
  for (const auto& s : np.segments) {
    r.all_lengths_one = r.all_lengths_one && s.length == 1;
    r.all_slopes_integral = r.all_slopes_integral && is_integral(s.slope);
  }
  return r;
}

Polynomial residual_polynomial(const LocalPolynomial& f, const Segment& s) {
  const std::int64_t slope = pi_slope(f, s);
  const Field& F = field_of(f).residue();
  const auto i0 = static_cast<std::size_t>(s.start);
  const std::int64_t v0 = f[i0].valuation();
  std::vector<Elem> r(static_cast<std::size_t>(s.length) + 1, 0);
  for (std::size_t t = 0; t < r.size(); ++t) {
    const auto& c = f[i0 + t];
    const std::int64_t height = v0 + slope * static_cast<std::int64_t>(t);
    if (c.is_zero()) {
      if (c.precision() <= height) throw PrecisionError("coefficient too imprecise for the residual polynomial");
      continue;
    }
    if (c.valuation() == height) r[t] = c.leading_coefficient();
  }
  if (r.front() == 0 || r.back() == 0) throw PreconditionError("segment endpoints are not hull vertices");
  return Polynomial(F, r);
}

LaurentSeries extract_root(const LocalPolynomial& f, const Segment& s, std::int64_t prec,
                           std::vector<std::int64_t>* log) {
  if (s.length != 1) throw PreconditionError("root extraction needs a segment of length one");
  const SegmentLine line = line_of(f, s);
  const Field& F = field_of(f).residue();
  const auto i0 = static_cast<std::size_t>(s.start);
  const Elem u0 = F.neg(F.div(f[i0].leading_coefficient(), f[i0 + 1].leading_coefficient()));
  return lift(f, line.mu, line.b, u0, prec, log);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::UnramifiedSimple: return "unramified_simple";
    case Verdict::Unramified: return "unramified";
    case Verdict::TameRamified: return "tame_ramified";
    case Verdict::WildFlag: return "wild_flag";
    case Verdict::Undetermined: return "undetermined";
  }
  return "undetermined";
}

std::vector<ZeroReport> classify_zeroes(const LocalPolynomial& f, std::int64_t prec, unsigned depth,
                                        std::uint64_t search_bound) {
  const LocalField& lf = field_of(f);
  if (lf.ramification() != 1) throw PreconditionError("classification works over unramified fields");
  for (const auto& c : f)
    if (!c.is_exact()) throw PreconditionError("classification needs exact coefficients");
  if (f.front().is_zero()) throw PreconditionError("constant coefficient vanishes");
  const Field& F = lf.residue();
  return classify_impl(f, F, identity_embedding(F), prec, depth, search_bound, std::nullopt).reports;
}

ReconstructionReport reconstruct(const LocalPolynomial& f, const std::vector<ZeroReport>& reports) {
  ReconstructionReport out;
  const LocalField& lf = field_of(f);
  const Field& base = lf.residue();
  std::vector<LaurentSeries> roots;
  unsigned degree = base.degree();
  out.complete = true;
  for (const auto& r : reports) {
    if (static_cast<std::int64_t>(r.witnesses.size()) != r.count) out.complete = false;
    for (const auto& w : r.witnesses) {
      roots.push_back(w);
      degree = std::lcm(degree, w.field().residue().degree());
    }
  }
  const Field common = Field::make(base.characteristic(), degree, 62);
  const Embedding into = ff_embed(base, common);
  const LocalField lc = lf.extended(into);

  LocalPolynomial prod{f.front().mapped(into)};
  for (const auto& w : roots) {
    const Embedding e = ff_embed_over(ff_embed(base, w.field().residue()), into);
    const LaurentSeries rho = w.mapped(e);
    const std::int64_t rel = rho.is_exact() ? kDefaultRelativePrecision : rho.relative_precision();
    const LaurentSeries c = -inv(rho, rel);
    LocalPolynomial next(prod.size() + 1, LaurentSeries::zero(lc));
    for (std::size_t i = 0; i < prod.size(); ++i) {
      next[i] += prod[i];
      next[i + 1] += prod[i] * c;
    }
    prod = std::move(next);
  }
  out.absolute_precision = kExactPrecision;
  out.relative_precision = kExactPrecision;
  const std::size_t n = std::max(prod.size(), f.size());
  for (std::size_t i = 0; i < n; ++i) {
    const LaurentSeries target = i < f.size() ? f[i].mapped(into) : LaurentSeries::zero(lc);
    const LaurentSeries got = i < prod.size() ? prod[i] : LaurentSeries::zero(lc);
    const std::int64_t a = agreement(got, target);
    out.absolute_precision = std::min(out.absolute_precision, a);
    if (!target.is_zero()) out.relative_precision = std::min(out.relative_precision, a - target.valuation());
  }
  out.product = std::move(prod);
  return out;
}

}  // namespace ramify

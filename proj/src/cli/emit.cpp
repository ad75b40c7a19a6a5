#include "ramify/cli/emit.hpp"

#include <numeric>
#include <sstream>

namespace ramify {

Json to_json(const Rational& r) { return Json{{"num", r.numerator()}, {"den", r.denominator()}}; }

Json element_json(const Field& field, Elem a) {
  Json d = Json::array();
  for (auto x : field.digits(a)) d.push_back(x);
  return d;
}

Json to_json(const Polynomial& f) {
  Json c = Json::array();
  for (auto a : f.coefficients()) c.push_back(element_json(f.field(), a));
  return c;
}

Json to_json(const XSeries& s) {
  Json c = Json::array();
  for (const auto& f : s) c.push_back(to_json(f));
  return c;
}

Json to_json(const LaurentSeries& s) {
  Json j;
  j["ram_index"] = s.field().ramification();
  j["v0"] = s.is_zero() ? (s.is_exact() ? 0 : s.precision()) : s.leading_exponent();
  j["prec"] = s.is_exact() ? Json(nullptr) : Json(s.precision());
  Json c = Json::array();
  for (auto a : s.coefficients()) c.push_back(element_json(s.field().residue(), a));
  j["coeffs"] = std::move(c);
  return j;
}

Json to_json(const PAdicDigits& y) {
  Json j;
  j["base"] = y.base();
  j["digits"] = y.digits();
  j["tail"] = y.tail() == Tail::Zero ? "zero" : y.tail() == Tail::Full ? "full" : "trunc";
  auto v = y.to_integer();
  j["integer"] = v ? Json(*v) : Json(nullptr);
  return j;
}

Json to_json(const NewtonPolygon& np) {
  Json j;
  j["input_length"] = np.input_length;
  Json v = Json::array();
  for (const auto& x : np.vertices) v.push_back(Json{{"index", x.index}, {"valuation", to_json(x.valuation)}});
  j["vertices"] = std::move(v);
  Json s = Json::array();
  for (const auto& x : np.segments)
    s.push_back(Json{{"start", x.start}, {"length", x.length}, {"slope", to_json(x.slope)}});
  j["segments"] = std::move(s);
  return j;
}

Json to_json(const RhCheck& rh) {
  return Json{{"all_lengths_one", rh.all_lengths_one}, {"all_slopes_integral", rh.all_slopes_integral}};
}

Json to_json(const ZeroReport& r) {
  Json j;
  j["valuation"] = to_json(r.valuation);
  j["count"] = r.count;
  j["verdict"] = to_string(r.verdict);
  j["ramification_index"] = r.ramification_index;
  j["residue_field_degree"] = r.residue_field_degree;
  Json w = Json::array();
  for (const auto& s : r.witnesses) w.push_back(to_json(s));
  j["witnesses"] = std::move(w);
  j["log"] = r.log;
  return j;
}

Json to_json(const ReconstructionReport& r) {
  return Json{{"complete", r.complete},
              {"absolute_precision", r.absolute_precision},
              {"relative_precision", r.relative_precision}};
}

Json to_json(const IdentityReport& r) {
  Json j;
  j["equal"] = r.equal;
  j["first_mismatch"] = r.first_mismatch < 0 ? Json(nullptr) : Json(r.first_mismatch);
  j["lhs"] = to_json(r.lhs);
  j["rhs"] = to_json(r.rhs);
  return j;
}

Json to_json(const EulerZeroReport& r) {
  Json j;
  j["degree"] = r.degree;
  j["valuation"] = to_json(r.valuation);
  j["separable_degree"] = r.separable_degree;
  j["inseparable_degree"] = r.inseparable_degree;
  j["residue_degree"] = r.residue_degree;
  j["verdict"] = r.verdict;
  j["inseparable"] = r.inseparable;
  return j;
}

Json to_json(const PeriodReport& r) {
  Json j;
  j["period"] = to_json(r.period);
  j["valuation"] = to_json(r.valuation);
  j["valuation_ok"] = r.valuation_ok;
  j["power_in_k"] = r.power_in_k;
  j["exp_at_period"] = to_json(r.exp_at_period);
  j["exp_valuation"] = to_json(r.exp_valuation);
  j["exp_vanishes"] = r.exp_vanishes;
  return j;
}

Json to_json(const OrbitReport& r) {
  Json j;
  j["k"] = r.k;
  j["image_k"] = r.image_k;
  Json v = Json::array(), w = Json::array();
  for (const auto& x : r.valuations) v.push_back(to_json(x));
  for (const auto& x : r.image_valuations) w.push_back(to_json(x));
  j["valuations"] = std::move(v);
  j["image_valuations"] = std::move(w);
  Json modes = Json::array();
  for (const auto& m : r.modes) {
    Json pairs = Json::array();
    for (const auto& p : m.pairs)
      pairs.push_back(Json{{"source", p.source},
                           {"source_valuation", to_json(p.source_valuation)},
                           {"nearest", p.nearest},
                           {"distance", p.distance ? Json(*p.distance) : Json(nullptr)},
                           {"precision", p.precision}});
    modes.push_back(Json{{"mode", to_string(m.mode)}, {"pairs", std::move(pairs)}});
  }
  j["modes"] = std::move(modes);
  j["notes"] = r.notes;
  return j;
}

std::string to_string(const Rational& r) {
  auto s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += '/' + std::to_string(r.denominator());
  return s;
}

std::string newton_svg(const NewtonPolygon& np, const std::string& title) {
  std::int64_t L = 1;
  for (const auto& v : np.vertices) L = std::lcm(L, v.valuation.denominator());
  const std::int64_t u = 40 * L;
  std::int64_t i0 = 0, i1 = 0;
  Rational vmin = 0, vmax = 0;
  if (!np.vertices.empty()) {
    i0 = np.vertices.front().index;
    i1 = np.vertices.back().index;
    vmin = vmax = np.vertices.front().valuation;
    for (const auto& v : np.vertices) {
      vmin = std::min(vmin, v.valuation);
      vmax = std::max(vmax, v.valuation);
    }
  }
  auto X = [&](std::int64_t i) { return 40 + u * (i - i0); };
  auto Y = [&](const Rational& v) { return boost::rational_cast<std::int64_t>(40 + u * (vmax - v)); };
  const std::int64_t width = 80 + u * (i1 - i0);
  const std::int64_t height = boost::rational_cast<std::int64_t>(80 + u * (vmax - vmin));

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
    << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  o << "<title>" << title << "</title>\n";
  o << "<!-- x = 40 + " << u << "*(i - " << i0 << "), y = 40 + " << u << "*(" << to_string(vmax) << " - v) -->\n";
  o << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
  for (std::size_t k = 0; k < np.vertices.size(); ++k) {
    if (k) o << ' ';
    o << X(np.vertices[k].index) << ',' << Y(np.vertices[k].valuation);
  }
  o << "\"/>\n";
  for (const auto& v : np.vertices) {
    o << "<g class=\"vertex\"><circle cx=\"" << X(v.index) << "\" cy=\"" << Y(v.valuation)
      << "\" r=\"4\" fill=\"red\"/><text x=\"" << X(v.index) + 6 << "\" y=\"" << Y(v.valuation) - 6
      << "\" font-size=\"12\">(" << v.index << ", " << to_string(v.valuation) << ")</text></g>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace ramify

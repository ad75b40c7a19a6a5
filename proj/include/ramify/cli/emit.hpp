#pragma once

#include <string>

#include <json.hpp>

#include "ramify/carlitz/carlitz.hpp"
#include "ramify/lfun/lfun.hpp"
#include "ramify/newton/newton.hpp"
#include "ramify/sq/sq.hpp"
#include "ramify/zeta/zeta.hpp"

namespace ramify {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json element_json(const Field& field, Elem a);
Json to_json(const Polynomial& f);
Json to_json(const XSeries& s);
/// {ram_index, v0, prec, coeffs}; prec is null for exact series.
Json to_json(const LaurentSeries& s);
Json to_json(const PAdicDigits& y);
Json to_json(const NewtonPolygon& np);
Json to_json(const RhCheck& rh);
Json to_json(const ZeroReport& r);
Json to_json(const ReconstructionReport& r);
Json to_json(const IdentityReport& r);
Json to_json(const EulerZeroReport& r);
Json to_json(const PeriodReport& r);
Json to_json(const OrbitReport& r);

std::string to_string(const Rational& r);

/// One polyline through the hull vertices and one labeled circle per vertex.
/// With L the lcm of the vertex valuation denominators and u = 40 L, a point
/// (i, v) maps to x = 40 + u (i - i_min), y = 40 + u (v_max - v), so every
/// coordinate is an integer.
std::string newton_svg(const NewtonPolygon& np, const std::string& title);

}  // namespace ramify

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ramify/algebra/polynomial.hpp"
#include "ramify/localfield/laurent_series.hpp"
#include "ramify/rational.hpp"

namespace ramify {

/// c_0 + c_1 x + ... with coefficients in a local field.
using LocalPolynomial = std::vector<LaurentSeries>;

/// Exact images of coefficients in F[theta].
LocalPolynomial to_local(const LocalField& lf, const std::vector<Polynomial>& coeffs);
/// Horner evaluation.
LaurentSeries evaluate(const LocalPolynomial& f, const LaurentSeries& x);

struct Vertex {
  std::int64_t index = 0;
  Rational valuation;  // normalized: v(1/theta) = 1
};

/// Roots of a slope-lambda segment have valuation -lambda.
struct Segment {
  std::int64_t start = 0;
  std::int64_t length = 0;
  Rational slope;
};

struct NewtonPolygon {
  std::size_t input_length = 0;
  std::vector<Vertex> vertices;
  std::vector<Segment> segments;  // slopes strictly increasing
};

/// Lower convex hull of (i, v(c_i)). Throws PreconditionError for empty input
/// or c_0 = 0, and PrecisionError when an inexact zero coefficient could
/// reach the hull.
NewtonPolygon newton_polygon(const LocalPolynomial& f);

struct RhCheck {
  bool all_lengths_one = true;
  bool all_slopes_integral = true;
};
RhCheck rh_check(const NewtonPolygon& np);

/// Residues of the coefficients on the segment line, as a degree-h
/// polynomial in u. Requires an integral slope in pi-units.
Polynomial residual_polynomial(const LocalPolynomial& f, const Segment& s);

/// Newton iteration for the simple root on a length-one segment, started at
/// -c_{i0}/c_{i0+1}. The result satisfies v(f(rho)) >= prec. `log` receives
/// v(f(x_n)) per step. Throws PrecisionError("stalled") when a step fails to
/// raise v(f).
LaurentSeries extract_root(const LocalPolynomial& f, const Segment& s, std::int64_t prec,
                           std::vector<std::int64_t>* log = nullptr);

enum class Verdict { UnramifiedSimple, Unramified, TameRamified, WildFlag, Undetermined };
std::string to_string(Verdict v);

struct ZeroReport {
  Rational valuation;
  std::int64_t count = 0;
  Verdict verdict = Verdict::Undetermined;
  std::int64_t ramification_index = 1;     // slope denominator for ramified verdicts
  unsigned residue_field_degree = 0;       // over F_q, unramified verdicts only
  std::vector<LaurentSeries> witnesses;    // one per zero when lifted
  std::vector<std::string> log;
};

inline constexpr unsigned kDefaultClassifyDepth = 3;
inline constexpr std::uint64_t kDefaultRootSearchBound = std::uint64_t{1} << 20;

/// Reports ordered by segment slope. Requires exact coefficients over an
/// unramified field F_{q^m}((1/theta)); stalled lifts are logged, not thrown.
std::vector<ZeroReport> classify_zeroes(const LocalPolynomial& f, std::int64_t prec,
                                        unsigned depth = kDefaultClassifyDepth,
                                        std::uint64_t search_bound = kDefaultRootSearchBound);

struct ReconstructionReport {
  bool complete = false;               // every zero had a witness
  std::int64_t absolute_precision = 0; // min over coefficients of agreement
  std::int64_t relative_precision = 0; // min over nonzero c_i of agreement - v(c_i)
  LocalPolynomial product;             // c_0 prod (1 - x / rho)
};

ReconstructionReport reconstruct(const LocalPolynomial& f, const std::vector<ZeroReport>& reports);

}  // namespace ramify

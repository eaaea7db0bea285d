#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "npcurve/numeric.hpp"
#include "npcurve/zeta.hpp"

namespace npcurve {

// A maximal run of equal slopes num/den (lowest terms, 0 <= num <= den).
struct SlopeRun {
  std::int64_t num = 0;
  std::int64_t den = 1;
  std::int64_t mult = 0;

  Rat slope() const { return Rat(num, den); }
  friend bool operator==(const SlopeRun& a, const SlopeRun& b) {
    return a.num == b.num && a.den == b.den && a.mult == b.mult;
  }
};

// Lower convex hull of the p-adic valuations of the L-polynomial
// coefficients, normalized so slope 1 corresponds to valuation q. Runs are
// ascending; breaks are the hull vertices (lattice points, endpoints
// included), running from (0,0) to (2g,g).
struct NewtonPolygon {
  std::int64_t g = 0;
  std::vector<SlopeRun> runs;
  std::vector<std::pair<std::int64_t, std::int64_t>> breaks;

  friend bool operator==(const NewtonPolygon& a, const NewtonPolygon& b) {
    return a.g == b.g && a.runs == b.runs;
  }
  friend bool operator!=(const NewtonPolygon& a, const NewtonPolygon& b) {
    return !(a == b);
  }
};

// Hull of the points (i, v_p(c_i)/r) for c_i != 0, q = p^r. Checks that the
// break vertices are lattice points (NonIntegralBreakPoint), that slopes lie
// in [0,1] (InvalidSlopeData), and that multiplicities satisfy
// mult(s) = mult(1-s) (AsymmetricSlopes).
NewtonPolygon newton_polygon(const LPolynomial& L);

// Builds a polygon from an explicit slope multiset (any order), with the
// same three validations.
NewtonPolygon np_from_slopes(const std::vector<Rat>& slopes);

// Multiplicity of slope 0: the length of the initial horizontal segment.
std::int64_t p_rank(const NewtonPolygon& np);

// True iff every slope equals 1/2 (vacuously true for g = 0).
bool is_supersingular(const NewtonPolygon& np);

// Exact hull height at abscissa x, 0 <= x <= 2g.
Rat hull_value(const NewtonPolygon& np, const Rat& x);

// Partial order: a <= b iff the hull of a lies on or above the hull of b
// everywhere. The supersingular polygon is minimal, the ordinary polygon
// maximal. Errors: GenusOutOfRange when genera differ.
bool np_leq(const NewtonPolygon& a, const NewtonPolygon& b);

// Adds e slopes of 0 and e slopes of 1 (genus g+e). e >= 0.
NewtonPolygon xi_plus_e(const NewtonPolygon& np, std::int64_t e);

// Slopes 0^g, 1^g.
NewtonPolygon ordinary_np(std::int64_t g);

// Slopes (1/2)^2g.
NewtonPolygon sigma_np(std::int64_t g);

// Every symmetric polygon of the given genus with integral break vertices,
// sorted by descending lexicographic order on the ascending slope tuple (a
// linear extension of np_leq: the supersingular polygon comes first, the
// ordinary polygon last). Errors: GenusOutOfRange outside 1..12.
std::vector<NewtonPolygon> enumerate_symmetric(std::int64_t g);

// "NP{0^2, (1/2)^2, 1^2}"; a run of multiplicity 1 drops its exponent.
std::string to_string(const NewtonPolygon& np);

}  // namespace npcurve

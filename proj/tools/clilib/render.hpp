#pragma once

#include <string>

#include "npcurve/npoly.hpp"
#include "npcurve/zeta.hpp"

namespace npcli {

// Lower hull plot, one column per x-unit: '*' break vertices, 'o' other
// integral hull points, '.' fractional hull heights (at floor), followed by
// the axis and the exact break list.
std::string render_hull(const npcurve::NewtonPolygon& np);

// "1 + 2*T + 2*T^2"; zero terms skipped, unit coefficients implicit.
std::string lpoly_pretty(const npcurve::LPolynomial& L);

std::string rat_str(const npcurve::Rat& value);

}  // namespace npcli

#pragma once

#include <cstdint>
#include <vector>

#include "npcurve/curves.hpp"
#include "npcurve/numeric.hpp"

namespace npcurve {

// Numerator L(T) of the zeta function: degree 2g, constant term 1, with the
// functional equation c_{2g-i} = q^(g-i) c_i baked in. All coefficients are
// exact unbounded integers.
struct LPolynomial {
  FieldSpec base;                  // F_q, q = p^r
  std::int64_t g = 0;
  std::vector<BigInt> coeffs;      // c_0..c_{2g}
  std::vector<BigInt> power_sums;  // a_1..a_g, a_s = q^s + 1 - N_s
  std::vector<BigInt> counts;      // N_1..N_g

  BigInt q() const { return BigInt(base.cardinality()); }
};

// Counts N_1..N_g, recovers c_1..c_g by Newton's identities
//   i*c_i = -(a_1 c_{i-1} + a_2 c_{i-2} + ... + a_i c_0),
// then fills c_{g+1}..c_{2g} by the functional equation. Genus 0 returns the
// empty product L = 1 without counting.
// Errors: WeilBoundViolation when |a_s| > 2g*q^(s/2) (checked exactly as
// a_s^2 <= 4g^2 q^s), NonIntegralNewtonStep when the division by i is not
// exact, CapExceeded when a required field exceeds opts.cap.
LPolynomial l_polynomial(const CurveSpec& curve, const CountOptions& opts = {});

// N_s predicted by L via the inverse recurrence
//   a_s = -(s*c_s + a_1 c_{s-1} + ... + a_{s-1} c_1), c_k = 0 for k > 2g,
// which continues as a linear recurrence beyond s = 2g.
BigInt predicted_point_count(const LPolynomial& L, std::int64_t s);

// Recomputes N_s by direct counting and compares with the prediction.
// Errors: ZetaInconsistency carrying both values on mismatch.
void predict_and_check(const CurveSpec& curve, const LPolynomial& L, std::int64_t s,
                       const CountOptions& opts = {});

// g = 1 only: supersingular iff p | a where a = -c_1 is the trace of
// Frobenius. Errors: NotElliptic.
bool is_supersingular_elliptic(const LPolynomial& L);

}  // namespace npcurve

#include "npcurve/zeta.hpp"

#include <string>

#include "npcurve/error.hpp"

namespace npcurve {

LPolynomial l_polynomial(const CurveSpec& curve, const CountOptions& opts) {
  validate(curve);
  LPolynomial L;
  L.base = curve.base;
  L.g = genus(curve);
  const BigInt q(curve.base.cardinality());

  if (L.g == 0) {
    L.coeffs = {BigInt(1)};
    return L;
  }

  const std::int64_t g = L.g;
  L.coeffs.assign(static_cast<std::size_t>(2 * g + 1), BigInt(0));
  L.coeffs[0] = 1;
  L.power_sums.reserve(static_cast<std::size_t>(g));
  L.counts.reserve(static_cast<std::size_t>(g));

  BigInt qs(1);  // q^s
  for (std::int64_t s = 1; s <= g; ++s) {
    qs *= q;
    const BigInt ns = n_points(curve, s, opts);
    const BigInt a = qs + 1 - ns;
    // Weil bound |a_s| <= 2g sqrt(q^s), compared exactly by squaring.
    if (a * a > BigInt(4) * g * g * qs) {
      fail(ErrorCode::WeilBoundViolation,
           "point count N_" + std::to_string(s) + " = " + to_string(ns) +
               " violates the Weil bound for genus " + std::to_string(g));
    }
    L.counts.push_back(ns);
    L.power_sums.push_back(a);

    // i*c_i = -sum_{s=1}^{i} a_s c_{i-s}
    BigInt acc(0);
    for (std::int64_t j = 1; j <= s; ++j)
      acc += L.power_sums[static_cast<std::size_t>(j - 1)] *
             L.coeffs[static_cast<std::size_t>(s - j)];
    acc = -acc;
    if (acc % s != 0) {
      fail(ErrorCode::NonIntegralNewtonStep,
           "coefficient recurrence yields non-integer c_" + std::to_string(s));
    }
    L.coeffs[static_cast<std::size_t>(s)] = acc / s;
  }

  // Functional equation: c_j = q^(j-g) c_{2g-j} for j > g.
  BigInt qpow(1);
  for (std::int64_t j = g + 1; j <= 2 * g; ++j) {
    qpow *= q;
    L.coeffs[static_cast<std::size_t>(j)] =
        qpow * L.coeffs[static_cast<std::size_t>(2 * g - j)];
  }
  return L;
}

BigInt predicted_point_count(const LPolynomial& L, std::int64_t s) {
  if (s <= 0) fail(ErrorCode::ZetaInconsistency, "extension degree must be positive");
  const BigInt q(L.base.cardinality());
  const std::int64_t deg = 2 * L.g;

  // Run the power-sum recurrence a_s = -(s c_s + sum_{j<s} a_j c_{s-j}) out
  // to s, with c_k = 0 past the degree.
  std::vector<BigInt> a;
  a.reserve(static_cast<std::size_t>(s));
  for (std::int64_t i = 1; i <= s; ++i) {
    BigInt acc(0);
    if (i <= deg) acc += BigInt(i) * L.coeffs[static_cast<std::size_t>(i)];
    for (std::int64_t j = 1; j < i; ++j) {
      const std::int64_t k = i - j;
      if (k <= deg)
        acc += a[static_cast<std::size_t>(j - 1)] * L.coeffs[static_cast<std::size_t>(k)];
    }
    a.push_back(-acc);
  }
  BigInt qs(1);
  for (std::int64_t i = 0; i < s; ++i) qs *= q;
  return qs + 1 - a.back();
}

void predict_and_check(const CurveSpec& curve, const LPolynomial& L, std::int64_t s,
                       const CountOptions& opts) {
  const BigInt predicted = predicted_point_count(L, s);
  const BigInt counted = n_points(curve, s, opts);
  if (predicted != counted) {
    fail(ErrorCode::ZetaInconsistency,
         "N_" + std::to_string(s) + " mismatch: zeta predicts " + to_string(predicted) +
             ", direct count gives " + to_string(counted));
  }
}

bool is_supersingular_elliptic(const LPolynomial& L) {
  if (L.g != 1) fail(ErrorCode::NotElliptic, "supersingularity test requires genus 1");
  const BigInt a = -L.coeffs[1];  // trace of Frobenius
  return a % BigInt(L.base.p()) == 0;
}

}  // namespace npcurve

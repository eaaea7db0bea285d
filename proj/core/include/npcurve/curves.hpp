#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "npcurve/ffield.hpp"
#include "npcurve/options.hpp"
#include "npcurve/poly.hpp"

namespace npcurve {

enum class CurveFamily { LinearizedAS, Hyperelliptic, Hermitian, Legendre };

// A(y) = f(x) where A(y) = y^(p^h) + y for h > 1 (only f = x^(p^h+1) is
// admitted there) and A(y) = y^p - y for h = 1 (general tame rational f).
struct LinearizedASData {
  std::uint32_t h = 1;
  RationalFn f;
};

// y^2 = f(x), odd characteristic, squarefree f of odd degree d; g = (d-1)/2.
struct HyperellipticData {
  FPoly f;
};

// y^q + y = x^(q+1) over F_q; g = q(q-1)/2; one point at infinity.
struct HermitianData {
  std::uint64_t q = 0;
};

// y^2 = x(x-1)(x-lambda), lambda outside {0,1}; g = 1.
struct LegendreData {
  FieldElement lambda;
};

struct CurveSpec {
  FieldSpec base;
  std::variant<LinearizedASData, HyperellipticData, HermitianData, LegendreData> data;

  CurveFamily family() const;
  std::string to_string() const;  // round-trips through the curve grammar
};

CurveSpec make_as(const FieldSpec& base, const RationalFn& f);       // h = 1
CurveSpec make_linearized(std::uint32_t h, const FieldSpec& base);   // f = x^(p^h+1)
CurveSpec make_hermitian(std::uint64_t q);
CurveSpec make_hyperelliptic(const FieldSpec& base, const FPoly& f);
CurveSpec make_legendre(const FieldElement& lambda);

// Rejects with distinct codes: DegenerateLambda, NotSquarefree,
// EvenDegreeModel, EvenCharacteristic, WildPoleOrder, ReducibleCurve,
// UnsupportedLinearized, NotPolynomial, PoleNotRational.
void validate(const CurveSpec& curve);

// Genus of the smooth projective model. For h = 1 linearized curves with
// pole orders d_P (finite poles and infinity together):
// 2g = (p-1) * (sum over P of (d_P+1) - 2).
std::int64_t genus(const CurveSpec& curve);

// Solutions over F_{q^s}. Linearized families count by the additive-map
// method: precompute kernel size kappa and the image set of A over F_{q^s};
// x contributes kappa exactly when f(x) lies in the image. Square models
// count y^2 = f(x) through a squaring table. Errors: CapExceeded when q^s
// exceeds opts.cap.
std::uint64_t affine_count(const CurveSpec& curve, std::uint32_t s, const CountOptions& opts = {});

// Points above x = infinity on the smooth model over F_{q^s}: 1 when f has a
// pole at infinity (total ramification), otherwise the number of solutions
// of A(y) = f(infinity); 1 for the odd-degree square models.
std::uint64_t points_at_infinity(const CurveSpec& curve, std::uint32_t s,
                                 const CountOptions& opts = {});

// affine_count + points_at_infinity in a single pass.
std::uint64_t n_points(const CurveSpec& curve, std::uint32_t s, const CountOptions& opts = {});

}  // namespace npcurve

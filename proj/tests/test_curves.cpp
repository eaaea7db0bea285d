#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "npcurve/curves.hpp"
#include "npcurve/error.hpp"
#include "oracles.hpp"

using namespace npcurve;

namespace {

RationalFn poly_expr(const FieldSpec& F, std::initializer_list<std::pair<std::uint64_t, std::size_t>> terms) {
  FPoly out = FPoly::zero(F);
  for (const auto& [coeff, deg] : terms) out = out + FPoly::monomial(F, coeff, deg);
  return RationalFn::from_poly(out);
}

// f = poly + c/(x - b) style pieces for pole-bearing test curves.
RationalFn with_pole(const RationalFn& f, std::uint64_t c, std::uint64_t b) {
  const FieldSpec& F = f.spec();
  const FPoly den = FPoly::monomial(F, 1, 1) - FPoly::constant(F, b);
  return f + RationalFn::from(FPoly::constant(F, c), den);
}

// Places of the smooth model sitting above finite poles of f (one each, the
// pole orders being coprime to p). Square models take polynomial f only.
std::uint64_t finite_pole_places(const CurveSpec& curve) {
  if (curve.family() != CurveFamily::LinearizedAS) return 0;
  const auto& f = std::get<LinearizedASData>(curve.data).f;
  return decompose(f).finite_poles.size();
}

ErrorCode code_of(const CurveSpec& curve) {
  try {
    validate(curve);
  } catch (const Error& e) {
    return e.code();
  }
  throw std::runtime_error("expected validate to throw");
}

}  // namespace

TEST_CASE("genus formulas") {
  const FieldSpec F2 = make_field(2, 1);
  const FieldSpec F3 = make_field(3, 1);
  const FieldSpec F5 = make_field(5, 1);

  CHECK(genus(make_as(F2, poly_expr(F2, {{1, 3}}))) == 1);
  CHECK(genus(make_as(F2, poly_expr(F2, {{1, 5}}))) == 2);
  CHECK(genus(make_as(F2, poly_expr(F2, {{1, 23}, {1, 21}, {1, 17}, {1, 7}, {1, 5}}))) == 11);
  CHECK(genus(make_as(F2, poly_expr(F2, {{1, 25}, {1, 9}}))) == 12);
  CHECK(genus(make_as(F3, poly_expr(F3, {{1, 4}}))) == 3);
  // Two poles: x (order 1 at infinity) + 1/x (order 1 at zero).
  CHECK(genus(make_as(F2, with_pole(poly_expr(F2, {{1, 1}}), 1, 0))) == 1);
  // Pure 1/x has genus 0.
  CHECK(genus(make_as(F2, with_pole(RationalFn::from_poly(FPoly::zero(F2)), 1, 0))) == 0);

  CHECK(genus(make_hermitian(2)) == 1);
  CHECK(genus(make_hermitian(3)) == 3);
  CHECK(genus(make_hermitian(4)) == 6);
  CHECK(genus(make_linearized(2, make_field(2, 2))) == 6);

  CHECK(genus(make_hyperelliptic(F5, poly_expr(F5, {{1, 3}, {1, 1}}).num)) == 1);
  CHECK(genus(make_hyperelliptic(F5, poly_expr(F5, {{1, 5}, {1, 1}, {1, 0}}).num)) == 2);
  CHECK(genus(make_hyperelliptic(F5, poly_expr(F5, {{1, 7}, {2, 1}, {1, 0}}).num)) == 3);

  CHECK(genus(make_legendre(FieldElement(make_field(7, 2), 3))) == 1);
}

TEST_CASE("validation rejections carry the right codes") {
  const FieldSpec F2 = make_field(2, 1);
  const FieldSpec F4 = make_field(2, 2);
  const FieldSpec F5 = make_field(5, 1);
  const FieldSpec F9 = make_field(3, 2);

  // Wild pole: f = x^2 over F_2 has a pole of order 2 = p at infinity.
  CHECK(code_of(make_as(F2, poly_expr(F2, {{1, 2}}))) == ErrorCode::WildPoleOrder);
  // Constant f: disjoint lines (trace 0) or constant-field extension.
  CHECK(code_of(make_as(F4, poly_expr(F4, {{1, 0}}))) == ErrorCode::ReducibleCurve);
  CHECK(code_of(make_as(F2, poly_expr(F2, {{1, 0}}))) == ErrorCode::ReducibleCurve);
  CHECK(code_of(make_as(F2, RationalFn::from_poly(FPoly::zero(F2)))) == ErrorCode::ReducibleCurve);
  // h > 1 admits only the Hermitian-shape right side.
  CHECK(code_of(CurveSpec{F4, LinearizedASData{2, poly_expr(F4, {{1, 3}})}}) ==
        ErrorCode::UnsupportedLinearized);
  // Square models: even characteristic, even degree, repeated roots.
  CHECK(code_of(make_hyperelliptic(F4, poly_expr(F4, {{1, 3}}).num)) ==
        ErrorCode::EvenCharacteristic);
  CHECK(code_of(make_hyperelliptic(F5, poly_expr(F5, {{1, 2}, {1, 0}}).num)) ==
        ErrorCode::EvenDegreeModel);
  CHECK(code_of(make_hyperelliptic(F5, poly_expr(F5, {{1, 3}}).num)) == ErrorCode::NotSquarefree);
  // Legendre needs lambda outside {0,1}.
  CHECK(code_of(make_legendre(FieldElement(F9, 1))) == ErrorCode::DegenerateLambda);
  CHECK(code_of(make_legendre(FieldElement(F9, 0))) == ErrorCode::DegenerateLambda);

  // All shipped families pass.
  validate(make_as(F2, poly_expr(F2, {{1, 3}, {1, 1}})));
  validate(make_hermitian(4));
  validate(make_hyperelliptic(F5, poly_expr(F5, {{1, 3}, {1, 1}}).num));
  validate(make_legendre(FieldElement(F9, 3)));
}

TEST_CASE("counting matches brute-force pair enumeration") {
  const FieldSpec F2 = make_field(2, 1);
  const FieldSpec F3 = make_field(3, 1);
  const FieldSpec F4 = make_field(2, 2);
  const FieldSpec F5 = make_field(5, 1);
  const FieldSpec F9 = make_field(3, 2);

  const std::vector<CurveSpec> corpus = {
      make_as(F2, poly_expr(F2, {{1, 3}})),
      make_as(F2, poly_expr(F2, {{1, 3}, {1, 1}})),
      make_as(F2, with_pole(poly_expr(F2, {{1, 1}}), 1, 0)),
      make_as(F2, with_pole(RationalFn::from_poly(FPoly::zero(F2)), 1, 0)),
      make_as(F2, with_pole(with_pole(poly_expr(F2, {{1, 3}}), 1, 0), 1, 1)),
      make_as(F3, poly_expr(F3, {{1, 4}})),
      make_as(F3, poly_expr(F3, {{1, 2}, {1, 1}})),
      make_as(F3, with_pole(poly_expr(F3, {{2, 1}}), 1, 1)),
      make_as(F4, poly_expr(F4, {{2, 3}})),  // t*x^3 over F_4
      make_as(F5, poly_expr(F5, {{1, 2}})),
      make_hermitian(2),
      make_hermitian(3),
      make_hermitian(4),
      make_linearized(2, F4),
      make_hyperelliptic(F5, poly_expr(F5, {{1, 3}, {1, 1}}).num),
      make_hyperelliptic(F5, poly_expr(F5, {{1, 5}, {1, 1}, {1, 0}}).num),
      make_hyperelliptic(F9, poly_expr(F9, {{1, 3}, {1, 1}}).num),
      make_legendre(FieldElement(F9, 3)),
      make_legendre(FieldElement(make_field(5, 2), 2)),
  };

  for (const CurveSpec& curve : corpus) {
    validate(curve);
    const std::uint64_t q = curve.base.cardinality();
    for (std::uint32_t s = 1; s <= 6; ++s) {
      std::uint64_t qs = 1;
      bool fits = true;
      for (std::uint32_t i = 0; i < s && fits; ++i) {
        fits = qs <= 4096 / q;
        qs *= q;
      }
      if (!fits || qs > 4096) break;
      CAPTURE(curve.to_string());
      CAPTURE(s);
      const std::uint64_t direct = affine_count(curve, s);
      if (qs <= 1024) CHECK(direct == oracles::brute_affine_pairs(curve, s));
      CHECK(direct == oracles::brute_affine_tabulated(curve, s));
      CHECK(n_points(curve, s) ==
            direct + finite_pole_places(curve) + points_at_infinity(curve, s));
    }
  }
}

TEST_CASE("points at infinity") {
  const FieldSpec F2 = make_field(2, 1);
  // Pole at infinity: totally ramified, one point.
  CHECK(points_at_infinity(make_as(F2, poly_expr(F2, {{1, 3}})), 1) == 1);
  CHECK(points_at_infinity(make_hermitian(4), 3) == 1);
  // f = 1/x is finite at infinity with value 0: y^2 - y = 0 has two roots.
  const CurveSpec finite_at_inf =
      make_as(F2, with_pole(RationalFn::from_poly(FPoly::zero(F2)), 1, 0));
  CHECK(points_at_infinity(finite_at_inf, 1) == 2);
  // Square models with odd degree: one point.
  const FieldSpec F5 = make_field(5, 1);
  CHECK(points_at_infinity(make_hyperelliptic(F5, poly_expr(F5, {{1, 3}, {1, 1}}).num), 2) == 1);
}

TEST_CASE("thread counts do not change answers") {
  const CurveSpec curve = make_hermitian(4);
  for (std::uint32_t s = 1; s <= 5; ++s) {
    CountOptions serial;
    CountOptions parallel;
    parallel.threads = 4;
    CHECK(n_points(curve, s, serial) == n_points(curve, s, parallel));
  }
}

TEST_CASE("cap rejection") {
  CountOptions tight;
  tight.cap = 100;
  CHECK_THROWS_AS(affine_count(make_hermitian(4), 4, tight), Error);
  try {
    affine_count(make_hermitian(4), 4, tight);
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapExceeded);
  }
}

TEST_CASE("family accessors and string forms") {
  const FieldSpec F2 = make_field(2, 1);
  const CurveSpec as_curve = make_as(F2, poly_expr(F2, {{1, 3}, {1, 1}}));
  CHECK(as_curve.family() == CurveFamily::LinearizedAS);
  CHECK(as_curve.to_string() == "as p=2 q=2 f=x+x^3");

  CHECK(make_hermitian(3).to_string() == "hermitian q=3");
  CHECK(make_linearized(2, make_field(2, 2)).to_string() == "lin h=2 q=4");

  const FieldSpec F5 = make_field(5, 1);
  CHECK(make_hyperelliptic(F5, poly_expr(F5, {{1, 3}, {1, 1}}).num).to_string() ==
        "hyp q=5 f=x+x^3");

  const FieldSpec F9 = make_field(3, 2);
  CHECK(make_legendre(FieldElement(F9, 5)).to_string() == "legendre p=3 lambda=2+t");
}

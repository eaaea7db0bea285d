#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "npcurve/curves.hpp"
#include "npcurve/error.hpp"
#include "npcurve/zeta.hpp"
#include "oracles.hpp"

using namespace npcurve;

namespace {

RationalFn poly_expr(const FieldSpec& F, std::initializer_list<std::pair<std::uint64_t, std::size_t>> terms) {
  FPoly out = FPoly::zero(F);
  for (const auto& [coeff, deg] : terms) out = out + FPoly::monomial(F, coeff, deg);
  return RationalFn::from_poly(out);
}

std::vector<BigInt> coeffs_of(std::initializer_list<long long> v) {
  std::vector<BigInt> out;
  for (long long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("frozen numerators for the pinned families") {
  CHECK(l_polynomial(make_hermitian(2)).coeffs == coeffs_of({1, 0, 2}));
  CHECK(l_polynomial(make_hermitian(3)).coeffs == coeffs_of({1, 0, 9, 0, 27, 0, 27}));
  CHECK(l_polynomial(make_hermitian(4)).coeffs ==
        coeffs_of({1, 0, 24, 0, 240, 0, 1280, 0, 3840, 0, 6144, 0, 4096}));

  const FieldSpec F2 = make_field(2, 1);
  CHECK(l_polynomial(make_as(F2, poly_expr(F2, {{1, 3}}))).coeffs == coeffs_of({1, 0, 2}));
  CHECK(l_polynomial(make_as(F2, poly_expr(F2, {{1, 3}, {1, 1}}))).coeffs ==
        coeffs_of({1, 2, 2}));

  const FieldSpec F9 = make_field(3, 2);
  CHECK(l_polynomial(make_hyperelliptic(F9, poly_expr(F9, {{1, 5}, {1, 1}}).num)).coeffs ==
        coeffs_of({1, 4, 22, 36, 81}));

  const FieldSpec F25 = make_field(5, 2);
  // lambda = 1 + t.
  const LPolynomial leg = l_polynomial(make_legendre(FieldElement(F25, 6)));
  CHECK(leg.g == 1);
  CHECK(leg.counts.at(0) == 28);
}

TEST_CASE("functional equation and degree bookkeeping") {
  const FieldSpec F2 = make_field(2, 1);
  const FieldSpec F3 = make_field(3, 1);
  const FieldSpec F5 = make_field(5, 1);
  const std::vector<CurveSpec> corpus = {
      make_as(F2, poly_expr(F2, {{1, 3}})),
      make_as(F2, poly_expr(F2, {{1, 5}})),
      make_as(F2, poly_expr(F2, {{1, 3}, {1, 1}})),
      make_as(F3, poly_expr(F3, {{1, 4}})),
      make_as(F5, poly_expr(F5, {{1, 2}})),
      make_hermitian(2),
      make_hermitian(3),
      make_hermitian(4),
      make_hyperelliptic(F5, poly_expr(F5, {{1, 5}, {1, 1}, {1, 0}}).num),
      make_legendre(FieldElement(make_field(3, 2), 3)),
  };

  for (const CurveSpec& curve : corpus) {
    const LPolynomial L = l_polynomial(curve);
    CAPTURE(curve.to_string());
    const BigInt q(curve.base.cardinality());
    CHECK(static_cast<int64_t>(L.coeffs.size()) == 2 * L.g + 1);
    CHECK(L.coeffs.front() == 1);
    // c_{2g-i} = q^{g-i} c_i.
    for (int64_t i = 0; i <= L.g; ++i) {
      CHECK(L.coeffs.at(2 * L.g - i) == big_pow(q, static_cast<uint32_t>(L.g - i)) * L.coeffs.at(i));
    }
    // The numerator reproduces every count it was built from, plus fresh ones.
    for (uint32_t s = 1; s <= static_cast<uint32_t>(L.g); ++s) {
      CHECK(predicted_point_count(L, s) == BigInt(L.counts.at(s - 1)));
    }
    for (int64_t s = L.g + 1; s <= L.g + 2; ++s) {
      BigInt qs = big_pow(q, static_cast<uint32_t>(s));
      if (qs > BigInt(1) << 24) break;
      CHECK_NOTHROW(predict_and_check(curve, L, s));
    }
  }
}

TEST_CASE("genus zero has trivial numerator") {
  const FieldSpec F2 = make_field(2, 1);
  // f = 1/x: genus 0, so L = 1 and N_s = q^s + 1.
  const RationalFn f =
      RationalFn::from(FPoly::constant(F2, 1), FPoly::monomial(F2, 1, 1));
  const CurveSpec curve = make_as(F2, f);
  const LPolynomial L = l_polynomial(curve);
  CHECK(L.g == 0);
  CHECK(L.coeffs == coeffs_of({1}));
  for (uint32_t s = 1; s <= 8; ++s) {
    CHECK(predicted_point_count(L, s) == big_pow(BigInt(2), s) + 1);
    CHECK(BigInt(n_points(curve, s)) == big_pow(BigInt(2), s) + 1);
  }
}

TEST_CASE("supersingular elliptic detection") {
  const FieldSpec F2 = make_field(2, 1);
  CHECK(is_supersingular_elliptic(l_polynomial(make_as(F2, poly_expr(F2, {{1, 3}})))));
  // x^3 + x still has trace -2, divisible by p = 2; x + 1/x has trace -1.
  CHECK(is_supersingular_elliptic(l_polynomial(make_as(F2, poly_expr(F2, {{1, 3}, {1, 1}})))));
  const RationalFn x_plus_inv =
      poly_expr(F2, {{1, 1}}) + RationalFn::from(FPoly::constant(F2, 1), FPoly::monomial(F2, 1, 1));
  CHECK_FALSE(is_supersingular_elliptic(l_polynomial(make_as(F2, x_plus_inv))));
  // Genus 2 input is rejected.
  try {
    is_supersingular_elliptic(l_polynomial(make_as(F2, poly_expr(F2, {{1, 5}}))));
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotElliptic);
  }
}

TEST_CASE("tampered numerators are caught") {
  const CurveSpec curve = make_hermitian(2);
  LPolynomial L = l_polynomial(curve);
  L.coeffs.at(1) += 1;
  try {
    predict_and_check(curve, L, 2);
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ZetaInconsistency);
  }
}

TEST_CASE("point counts obey the Weil bound en route") {
  // The builder rejects impossible counts; a healthy run never throws.
  const FieldSpec F3 = make_field(3, 1);
  const LPolynomial L = l_polynomial(make_as(F3, poly_expr(F3, {{1, 4}})));
  CHECK(L.g == 3);
  // |N_s - (q^s + 1)| <= 2 g q^{s/2} checked post hoc for the stored counts.
  for (uint32_t s = 1; s <= static_cast<uint32_t>(L.g); ++s) {
    const double qs = std::pow(3.0, s);
    const double dev = std::abs(static_cast<double>(L.counts.at(s - 1)) - (qs + 1.0));
    CHECK(dev <= 2.0 * static_cast<double>(L.g) * std::sqrt(qs) + 1e-9);
  }
}

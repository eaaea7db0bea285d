#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "npcurve/curves.hpp"
#include "npcurve/error.hpp"
#include "npcurve/npoly.hpp"
#include "npcurve/zeta.hpp"
#include "oracles.hpp"

using namespace npcurve;

namespace {

RationalFn poly_expr(const FieldSpec& F, std::initializer_list<std::pair<std::uint64_t, std::size_t>> terms) {
  FPoly out = FPoly::zero(F);
  for (const auto& [coeff, deg] : terms) out = out + FPoly::monomial(F, coeff, deg);
  return RationalFn::from_poly(out);
}

std::vector<Rat> flat_slopes(const NewtonPolygon& np) {
  std::vector<Rat> out;
  for (const SlopeRun& run : np.runs)
    for (std::int64_t i = 0; i < run.mult; ++i) out.push_back(run.slope());
  return out;
}

ErrorCode code_of_slopes(const std::vector<Rat>& slopes) {
  try {
    np_from_slopes(slopes);
  } catch (const Error& e) {
    return e.code();
  }
  throw std::runtime_error("expected np_from_slopes to throw");
}

}  // namespace

TEST_CASE("hull matches a direct gift-wrap of the valuation points") {
  const FieldSpec F2 = make_field(2, 1);
  const FieldSpec F3 = make_field(3, 1);
  const FieldSpec F5 = make_field(5, 1);
  const FieldSpec F9 = make_field(3, 2);
  const RationalFn x_plus_inv =
      poly_expr(F2, {{1, 1}}) + RationalFn::from(FPoly::constant(F2, 1), FPoly::monomial(F2, 1, 1));

  const std::vector<CurveSpec> corpus = {
      make_hermitian(2),
      make_hermitian(3),
      make_hermitian(4),
      make_as(F2, poly_expr(F2, {{1, 3}})),
      make_as(F2, poly_expr(F2, {{1, 5}})),
      make_as(F2, poly_expr(F2, {{1, 3}, {1, 1}})),
      make_as(F2, x_plus_inv),
      make_as(F2, poly_expr(F2, {{1, 23}, {1, 21}, {1, 17}, {1, 7}, {1, 5}})),
      make_as(F2, poly_expr(F2, {{1, 25}, {1, 9}})),
      make_as(F3, poly_expr(F3, {{1, 4}})),
      make_as(F5, poly_expr(F5, {{1, 2}})),
      make_hyperelliptic(F9, poly_expr(F9, {{1, 5}, {1, 1}}).num),
      make_legendre(FieldElement(F9, 3)),
  };

  for (const CurveSpec& curve : corpus) {
    const LPolynomial L = l_polynomial(curve);
    const NewtonPolygon np = newton_polygon(L);
    CAPTURE(curve.to_string());
    CHECK(np.g == L.g);

    const BigInt p(curve.base.p());
    std::vector<std::pair<std::int64_t, Rat>> pts;
    for (std::size_t i = 0; i < L.coeffs.size(); ++i)
      if (L.coeffs[i] != 0)
        pts.emplace_back(static_cast<std::int64_t>(i),
                         Rat(p_valuation(L.coeffs[i], p), BigInt(curve.base.r())));
    const auto hull = oracles::brute_hull_breaks(pts);

    REQUIRE(hull.size() == np.breaks.size());
    for (std::size_t i = 0; i < hull.size(); ++i) {
      CHECK(hull[i].first == np.breaks[i].first);
      CHECK(hull[i].second == Rat(np.breaks[i].second));
    }
    REQUIRE(!np.breaks.empty());
    CHECK(np.breaks.front() == std::pair<std::int64_t, std::int64_t>(0, 0));
    CHECK(np.breaks.back() == std::pair<std::int64_t, std::int64_t>(2 * np.g, np.g));
  }
}

TEST_CASE("frozen polygons for the pinned curves") {
  const FieldSpec F2 = make_field(2, 1);
  const NewtonPolygon blache1 = newton_polygon(
      l_polynomial(make_as(F2, poly_expr(F2, {{1, 23}, {1, 21}, {1, 17}, {1, 7}, {1, 5}}))));
  CHECK(blache1.runs == std::vector<SlopeRun>{{5, 11, 11}, {6, 11, 11}});
  CHECK(p_rank(blache1) == 0);
  CHECK_FALSE(is_supersingular(blache1));

  const NewtonPolygon blache2 =
      newton_polygon(l_polynomial(make_as(F2, poly_expr(F2, {{1, 25}, {1, 9}}))));
  CHECK(blache2.runs == std::vector<SlopeRun>{{5, 12, 12}, {7, 12, 12}});

  const NewtonPolygon herm = newton_polygon(l_polynomial(make_hermitian(3)));
  CHECK(herm.runs == std::vector<SlopeRun>{{1, 2, 6}});
  CHECK(is_supersingular(herm));
  CHECK(p_rank(herm) == 0);

  const RationalFn x_plus_inv =
      poly_expr(F2, {{1, 1}}) + RationalFn::from(FPoly::constant(F2, 1), FPoly::monomial(F2, 1, 1));
  const NewtonPolygon ord = newton_polygon(l_polynomial(make_as(F2, x_plus_inv)));
  CHECK(ord == ordinary_np(1));
  CHECK(p_rank(ord) == 1);
}

TEST_CASE("round trip through the slope multiset") {
  for (std::int64_t g = 1; g <= 6; ++g) {
    for (const NewtonPolygon& np : enumerate_symmetric(g)) {
      std::vector<Rat> slopes = flat_slopes(np);
      CHECK(static_cast<std::int64_t>(slopes.size()) == 2 * g);
      // Shuffle determinism is irrelevant; reversed order suffices to prove
      // the builder sorts for itself.
      std::vector<Rat> reversed(slopes.rbegin(), slopes.rend());
      CHECK(np_from_slopes(reversed) == np);
    }
  }
}

TEST_CASE("hull evaluation") {
  const NewtonPolygon np = np_from_slopes({Rat(0), Rat(1, 3), Rat(1, 3), Rat(1, 3),
                                           Rat(2, 3), Rat(2, 3), Rat(2, 3), Rat(1)});
  CHECK(np.g == 4);
  for (const auto& [x, y] : np.breaks) CHECK(hull_value(np, Rat(x)) == Rat(y));
  CHECK(hull_value(np, Rat(1, 2)) == Rat(0));
  CHECK(hull_value(np, Rat(3, 2)) == Rat(1, 6));
  CHECK(hull_value(np, Rat(8)) == Rat(4));
  CHECK_THROWS_AS(hull_value(np, Rat(9)), Error);
  CHECK_THROWS_AS(hull_value(np, Rat(-1)), Error);
}

TEST_CASE("np_leq is a partial order with the expected extremes") {
  for (std::int64_t g = 1; g <= 5; ++g) {
    const std::vector<NewtonPolygon> all = enumerate_symmetric(g);
    const NewtonPolygon sigma = sigma_np(g);
    const NewtonPolygon ord = ordinary_np(g);
    CHECK(all.front() == sigma);
    CHECK(all.back() == ord);
    for (std::size_t i = 0; i < all.size(); ++i) {
      CHECK(np_leq(all[i], all[i]));
      CHECK(np_leq(sigma, all[i]));
      CHECK(np_leq(all[i], ord));
      for (std::size_t j = 0; j < all.size(); ++j) {
        const bool ij = np_leq(all[i], all[j]);
        if (i != j && ij) {
          // Antisymmetry and consistency with the listing order.
          CHECK_FALSE(np_leq(all[j], all[i]));
          CHECK(i < j);
        }
        if (!ij) continue;
        for (std::size_t k = 0; k < all.size(); ++k)
          if (np_leq(all[j], all[k])) CHECK(np_leq(all[i], all[k]));
      }
    }
  }
}

TEST_CASE("enumeration sizes for small genus") {
  CHECK(enumerate_symmetric(1).size() == 2);
  CHECK(enumerate_symmetric(2).size() == 3);
  CHECK(enumerate_symmetric(3).size() == 5);
  CHECK(enumerate_symmetric(4).size() == 8);
  CHECK(enumerate_symmetric(5).size() == 13);
  CHECK_THROWS_AS(enumerate_symmetric(0), Error);
  CHECK_THROWS_AS(enumerate_symmetric(13), Error);
}

TEST_CASE("xi_plus_e pads with ordinary slopes") {
  for (std::int64_t g = 1; g <= 5; ++g) {
    for (const NewtonPolygon& np : enumerate_symmetric(g)) {
      for (std::int64_t e = 0; e <= 3; ++e) {
        const NewtonPolygon padded = xi_plus_e(np, e);
        CHECK(padded.g == g + e);
        CHECK(p_rank(padded) == p_rank(np) + e);
        const std::vector<Rat> base = flat_slopes(np);
        std::multiset<Rat> want(base.begin(), base.end());
        for (std::int64_t i = 0; i < e; ++i) {
          want.insert(Rat(0));
          want.insert(Rat(1));
        }
        std::vector<Rat> got = flat_slopes(padded);
        CHECK(std::multiset<Rat>(got.begin(), got.end()) == want);
      }
    }
  }
}

TEST_CASE("slope data validation") {
  CHECK(code_of_slopes({Rat(2), Rat(-1)}) == ErrorCode::InvalidSlopeData);
  CHECK(code_of_slopes({Rat(0), Rat(0)}) == ErrorCode::AsymmetricSlopes);
  CHECK(code_of_slopes({Rat(1, 3), Rat(2, 3)}) == ErrorCode::NonIntegralBreakPoint);
  CHECK(np_from_slopes({}).g == 0);  // genus 0 is a legitimate degenerate hull
  CHECK(is_supersingular(np_from_slopes({})));
  CHECK_THROWS_AS(np_leq(sigma_np(2), sigma_np(3)), Error);
}

TEST_CASE("printed forms") {
  CHECK(to_string(sigma_np(2)) == "NP{(1/2)^4}");
  CHECK(to_string(ordinary_np(3)) == "NP{0^3, 1^3}");
  CHECK(to_string(np_from_slopes({Rat(0), Rat(1, 2), Rat(1, 2), Rat(1)})) ==
        "NP{0, (1/2)^2, 1}");
}

// Throughput benchmarks for the hot paths: field arithmetic, point counting,
// the zeta-to-polygon pipeline, and the combinatorial enumerations.
#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "npcurve/construct.hpp"
#include "npcurve/curves.hpp"
#include "npcurve/eo.hpp"
#include "npcurve/ffield.hpp"
#include "npcurve/npoly.hpp"
#include "npcurve/poly.hpp"
#include "npcurve/zeta.hpp"

namespace {

using namespace npcurve;

CurveSpec slope_test_curve() {
  const FieldSpec F2 = make_field(2, 1);
  FPoly f = FPoly::zero(F2);
  for (std::size_t d : {23, 21, 17, 7, 5}) f = f + FPoly::monomial(F2, 1, d);
  return make_as(F2, RationalFn::from_poly(f));
}

void BM_FieldMul(benchmark::State& state) {
  const FieldSpec F = make_field(2, static_cast<std::uint32_t>(state.range(0)));
  const std::uint64_t n = F.cardinality();
  std::vector<FieldElement> elems;
  elems.reserve(256);
  for (std::uint64_t i = 1; i <= 256; ++i) elems.emplace_back(F, 1 + (i * 2654435761u) % (n - 1));
  for (auto _ : state) {
    FieldElement acc = elems[0];
    for (const FieldElement& e : elems) acc = acc * e;
    benchmark::DoNotOptimize(acc.packed());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(elems.size()));
}

void BM_AffineCountHermitian4(benchmark::State& state) {
  const CurveSpec curve = make_hermitian(4);
  const std::uint32_t s = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(affine_count(curve, s));
}

void BM_ZetaHermitian4(benchmark::State& state) {
  const CurveSpec curve = make_hermitian(4);
  for (auto _ : state) benchmark::DoNotOptimize(l_polynomial(curve).coeffs.size());
}

void BM_ClassifySlopes(benchmark::State& state) {
  const CurveSpec curve = slope_test_curve();
  for (auto _ : state) {
    const NewtonPolygon np = newton_polygon(l_polynomial(curve));
    benchmark::DoNotOptimize(np.runs.size());
  }
}

void BM_EnumeratePolygons(benchmark::State& state) {
  const std::int64_t g = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_symmetric(g).size());
}

void BM_EnumerateEO(benchmark::State& state) {
  const std::int64_t g = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_eo(g).size());
}

void BM_ProductPlan(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ckp_plan(2, 9999).inventory.size());
}

BENCHMARK(BM_FieldMul)->Arg(8)->Arg(13)->Arg(16);
BENCHMARK(BM_AffineCountHermitian4)->Arg(4)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ZetaHermitian4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClassifySlopes)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumeratePolygons)->Arg(8)->Arg(12);
BENCHMARK(BM_EnumerateEO)->Arg(12)->Arg(16);
BENCHMARK(BM_ProductPlan);

}  // namespace

BENCHMARK_MAIN();

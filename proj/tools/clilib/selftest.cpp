#include "selftest.hpp"

#include <functional>
#include <sstream>

#include <json.hpp>

#include "npcurve/construct.hpp"
#include "npcurve/eo.hpp"
#include "npcurve/error.hpp"
#include "npcurve/npoly.hpp"
#include "npcurve/strata.hpp"
#include "npcurve/zeta.hpp"
#include "textio.hpp"

namespace npcli {

using json = nlohmann::json;
using namespace npcurve;

namespace {

struct Failure : std::runtime_error {
  explicit Failure(const std::string& what) : std::runtime_error(what) {}
};

template <typename A, typename B>
void expect_eq(const A& got, const B& want, const std::string& what) {
  if (!(got == want)) {
    std::ostringstream os;
    os << what << ": got " << got << ", want " << want;
    throw Failure(os.str());
  }
}

void expect(bool cond, const std::string& what) {
  if (!cond) throw Failure(what);
}

std::vector<BigInt> coeffs_from_json(const json& arr) {
  std::vector<BigInt> out;
  for (const auto& item : arr) out.emplace_back(item.get<std::string>());
  return out;
}

void check_curve_entry(const json& entry, const CountOptions& opts) {
  const CurveSpec curve = parse_curve(entry.at("curve").get<std::string>());
  expect_eq(genus(curve), entry.at("genus").get<std::int64_t>(), "genus");
  const LPolynomial L = l_polynomial(curve, opts);
  const NewtonPolygon np = newton_polygon(L);
  const json& want = entry.at("expect");
  if (want.contains("l_polynomial")) {
    const std::vector<BigInt> expected = coeffs_from_json(want.at("l_polynomial"));
    expect(L.coeffs == expected, "L-polynomial coefficients differ");
  }
  if (want.contains("slopes")) {
    std::vector<SlopeRun> expected;
    for (const auto& item : want.at("slopes"))
      expected.push_back(SlopeRun{item.at(0).get<std::int64_t>(), item.at(1).get<std::int64_t>(),
                                  item.at(2).get<std::int64_t>()});
    expect(np.runs == expected, "slope runs differ: got " + to_string(np));
  }
  if (want.contains("supersingular"))
    expect_eq(is_supersingular(np), want.at("supersingular").get<bool>(), "supersingular");
}

void check_igusa_entry(const json& entry, const CountOptions& opts) {
  const IgusaCounts counts = igusa_counts(entry.at("p").get<std::uint64_t>(), opts);
  const json& want = entry.at("expect");
  expect_eq(counts.lambda_count, want.at("lambda_count").get<std::int64_t>(), "lambda_count");
  expect_eq(counts.iso_class_count, want.at("iso_class_count").get<std::int64_t>(),
            "iso_class_count");
  expect_eq(counts.lambda_count, std::int64_t((counts.p - 1) / 2), "lambda_count vs (p-1)/2");
}

void check_congruence_entry(const json& entry, const CountOptions& opts) {
  const std::string f = entry.at("f").get<std::string>();
  const std::uint64_t modulus = entry.at("modulus").get<std::uint64_t>();
  const std::uint64_t residue = entry.at("residue").get<std::uint64_t>();
  auto run = [&](std::uint64_t p, bool want_ss) {
    const CurveSpec curve = parse_curve("hyp q=" + std::to_string(p) + " f=" + f);
    const LPolynomial L = l_polynomial(curve, opts);
    const bool by_trace = is_supersingular_elliptic(L);
    const bool by_polygon = is_supersingular(newton_polygon(L));
    expect_eq(by_trace, by_polygon, "trace vs polygon disagree at p=" + std::to_string(p));
    expect_eq(by_trace, want_ss, "supersingularity at p=" + std::to_string(p));
    expect_eq(p % modulus == residue, want_ss, "congruence rule at p=" + std::to_string(p));
  };
  for (const auto& p : entry.at("supersingular_primes")) run(p.get<std::uint64_t>(), true);
  for (const auto& p : entry.at("ordinary_primes")) run(p.get<std::uint64_t>(), false);
}

// The two golden tables, frozen column by column.
struct GoldenRow {
  const char* name;
  std::int64_t codim, f, a;
  std::vector<std::int64_t> nu, mu;
  const char* dieudonne;
};

const std::vector<GoldenRow>& golden_rows(std::int64_t g) {
  static const std::vector<GoldenRow> g2 = {
      {"L^2", 0, 2, 0, {1, 2}, {}, "D(L)^2"},
      {"L + I_{1,1}", 1, 1, 1, {1, 1}, {1}, "D(L) + D_{1,1}"},
      {"I_{2,1}", 2, 0, 1, {0, 1}, {2}, "E/E(F^2+V^2)"},
      {"(I_{1,1})^2", 3, 0, 2, {0, 0}, {2, 1}, "(D_{1,1})^2"},
  };
  static const std::vector<GoldenRow> g3 = {
      {"L^3", 0, 3, 0, {1, 2, 3}, {}, "D(L)^3"},
      {"L^2 + I_{1,1}", 1, 2, 1, {1, 2, 2}, {1}, "D(L)^2 + D_{1,1}"},
      {"L + I_{2,1}", 2, 1, 1, {1, 1, 2}, {2}, "D(L) + E/E(F^2+V^2)"},
      {"L + (I_{1,1})^2", 3, 1, 2, {1, 1, 1}, {2, 1}, "D(L) + (D_{1,1})^2"},
      {"I_{3,1}", 3, 0, 1, {0, 1, 2}, {3}, "E/E(F^3+V^3)"},
      {"I_{3,2}", 4, 0, 2, {0, 1, 1}, {3, 1}, "E/E(F^2+V) + E/E(V^2+F)"},
      {"I_{1,1} + I_{2,1}", 5, 0, 2, {0, 0, 1}, {3, 2}, "D_{1,1} + E/E(F^2+V^2)"},
      {"(I_{1,1})^3", 6, 0, 3, {0, 0, 0}, {3, 2, 1}, "(D_{1,1})^3"},
  };
  return g == 2 ? g2 : g3;
}

void check_golden(std::int64_t g) {
  const std::vector<EORow> table = golden_eo_table(g);
  const std::vector<GoldenRow>& want = golden_rows(g);
  expect_eq(table.size(), want.size(), "row count");
  for (std::size_t i = 0; i < table.size(); ++i) {
    const std::string at = " in row " + std::to_string(i);
    expect_eq(table[i].name, std::string(want[i].name), "name" + at);
    expect_eq(table[i].codim, want[i].codim, "codim" + at);
    expect_eq(table[i].p_rank, want[i].f, "p_rank" + at);
    expect_eq(table[i].a_number, want[i].a, "a_number" + at);
    expect(table[i].nu == want[i].nu, "nu differs" + at);
    expect(table[i].mu == want[i].mu, "mu differs" + at);
    expect_eq(table[i].dieudonne, std::string(want[i].dieudonne), "dieudonne" + at);
  }
}

void check_ecidim() {
  const NewtonPolygon np4 = np_from_slopes(parse_slopes("1/4^4,3/4^4"));
  expect_eq(sdim(np4), std::int64_t(6), "sdim g=4");
  expect_eq(central_leaf_dim(np4), std::int64_t(5), "c g=4");
  expect_eq(isogeny_leaf_dim(np4), std::int64_t(1), "i g=4");
  const NewtonPolygon np5 = np_from_slopes(parse_slopes("2/5^5,3/5^5"));
  expect_eq(sdim(np5), std::int64_t(7), "sdim g=5");
  expect_eq(central_leaf_dim(np5), std::int64_t(3), "c g=5");
  expect_eq(isogeny_leaf_dim(np5), std::int64_t(4), "i g=5");
}

void check_extreme_dims() {
  for (std::int64_t g = 1; g <= 12; ++g) {
    expect_eq(sdim(ordinary_np(g)), g * (g + 1) / 2, "ordinary sdim g=" + std::to_string(g));
    expect_eq(sdim(sigma_np(g)), g * g / 4, "supersingular sdim g=" + std::to_string(g));
  }
}

void check_ckp_identity() {
  // Admissible delta <= 10^4: every base-p digit is 0 or 1. The plan itself
  // recomputes the genus sum and throws on any mismatch.
  const std::vector<std::pair<std::uint64_t, std::int64_t>> want = {
      {2, 10000}, {3, 511}, {5, 63}, {7, 31}};
  for (const auto& [p, count] : want) {
    std::int64_t admissible = 0;
    for (std::uint64_t delta = 1; delta <= 10000; ++delta) {
      bool ok = true;
      for (std::uint64_t d = delta; d != 0; d /= p) ok = ok && d % p <= 1;
      if (!ok) continue;
      ckp_plan(p, delta);
      ++admissible;
    }
    expect_eq(admissible, count, "admissible count p=" + std::to_string(p));
  }
}

void check_ckp_instantiation(const CountOptions& opts) {
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> cases = {
      {2, 1}, {2, 2}, {2, 3}, {3, 1}};
  for (const auto& [p, delta] : cases) {
    const CKPPlan plan = ckp_plan(p, delta);
    const VerifyReport report = verify_supersingular_factors(instantiate_factors(plan), opts);
    expect_eq(report.skipped, std::int64_t(0),
              "skipped factors at p=" + std::to_string(p) + " delta=" + std::to_string(delta));
    expect(report.verified > 0, "no factors verified");
  }
}

void check_np_order_example() {
  const NewtonPolygon a = np_from_slopes(parse_slopes("1/3^3,1/2^2,2/3^3"));
  const NewtonPolygon b = np_from_slopes(parse_slopes("1/4^4,3/4^4"));
  expect(np_leq(a, b), "expected a <= b");
  expect(!np_leq(b, a), "expected not b <= a");
}

void check_enumeration_counts() {
  const std::vector<std::size_t> want = {2, 3, 5, 8, 13};
  for (std::int64_t g = 1; g <= 5; ++g)
    expect_eq(enumerate_symmetric(g).size(), want[std::size_t(g - 1)],
              "polygon count g=" + std::to_string(g));
}

void check_branch_p_rank() {
  // Z/2 cover of an ordinary genus-1 base, 3 branch points: 2*(0-1)+3+1 = 2.
  expect_eq(ds_p_rank(2, 0, {2, 2, 2}), std::int64_t(2), "order-2 cover");
  // Totally ramified p-cover of the line with B branch points has p-rank
  // (B-1)(p-1).
  for (std::uint64_t p : {2, 3, 5}) {
    for (std::uint64_t B = 1; B <= 4; ++B) {
      std::vector<std::uint64_t> ram(B, p);
      expect_eq(ds_p_rank(p, 0, ram), std::int64_t((B - 1) * (p - 1)),
                "line cover p=" + std::to_string(p) + " B=" + std::to_string(B));
    }
  }
}

void check_elliptic_trace(const CountOptions& opts) {
  // y^2 - y = x^3 over F_2: N_1 = 3, a = 0, L = 1 + 2T^2.
  const CurveSpec curve = parse_curve("as p=2 q=2 f=x^3");
  const LPolynomial L = l_polynomial(curve, opts);
  expect_eq(L.counts[0], BigInt(3), "N_1");
  expect(L.coeffs == std::vector<BigInt>{1, 0, 2}, "L differs");
  expect(is_supersingular_elliptic(L), "not supersingular");
  predict_and_check(curve, L, L.g + 1, opts);
}

void check_delta_threshold() {
  expect_eq(first_g_exceeding_moduli_dim(), std::int64_t(9), "threshold genus");
  expect(delta_g(8) <= 3 * 8 - 3, "delta_8 should not exceed 21");
  expect(delta_g(9) > 3 * 9 - 3, "delta_9 should exceed 24");
}

}  // namespace

std::vector<CheckResult> run_selftest(const CountOptions& opts) {
  std::vector<std::pair<std::string, std::function<void()>>> checks;

  const json catalog = json::parse(catalog_json());
  expect_eq(catalog.at("version").get<int>(), 1, "catalog version");
  for (const auto& entry : catalog.at("entries")) {
    const std::string id = entry.at("id").get<std::string>();
    const std::string kind = entry.at("kind").get<std::string>();
    if (kind == "curve")
      checks.emplace_back("catalog-" + id, [entry, opts] { check_curve_entry(entry, opts); });
    else if (kind == "igusa")
      checks.emplace_back("catalog-" + id, [entry, opts] { check_igusa_entry(entry, opts); });
    else if (kind == "congruence")
      checks.emplace_back("catalog-" + id, [entry, opts] { check_congruence_entry(entry, opts); });
    else
      throw Failure("unknown catalog kind '" + kind + "'");
  }

  checks.emplace_back("elliptic-trace", [opts] { check_elliptic_trace(opts); });
  checks.emplace_back("eo-golden-g2", [] { check_golden(2); });
  checks.emplace_back("eo-golden-g3", [] { check_golden(3); });
  checks.emplace_back("stratum-leaf-dims", check_ecidim);
  checks.emplace_back("stratum-extremes", check_extreme_dims);
  checks.emplace_back("codim-threshold", check_delta_threshold);
  checks.emplace_back("genus-identity", check_ckp_identity);
  checks.emplace_back("supersingular-covers", [opts] { check_ckp_instantiation(opts); });
  checks.emplace_back("polygon-order", check_np_order_example);
  checks.emplace_back("polygon-counts", check_enumeration_counts);
  checks.emplace_back("branch-p-rank", check_branch_p_rank);

  std::vector<CheckResult> results;
  for (auto& [name, body] : checks) {
    CheckResult result;
    result.name = name;
    try {
      body();
    } catch (const std::exception& e) {
      result.ok = false;
      result.detail = e.what();
    }
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace npcli

#include "run.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "npcurve/construct.hpp"
#include "npcurve/eo.hpp"
#include "npcurve/error.hpp"
#include "npcurve/npoly.hpp"
#include "npcurve/strata.hpp"
#include "npcurve/zeta.hpp"
#include "render.hpp"
#include "selftest.hpp"
#include "textio.hpp"

namespace npcli {

using json = nlohmann::ordered_json;
using namespace npcurve;

namespace {

std::string dec(const BigInt& value) { return to_string(value); }

json big_list(const std::vector<BigInt>& values) {
  json arr = json::array();
  for (const BigInt& v : values) arr.push_back(dec(v));
  return arr;
}

json slopes_json(const NewtonPolygon& np) {
  json arr = json::array();
  for (const SlopeRun& run : np.runs) arr.push_back(json::array({run.num, run.den, run.mult}));
  return arr;
}

json breaks_json(const NewtonPolygon& np) {
  json arr = json::array();
  for (const auto& [x, y] : np.breaks) arr.push_back(json::array({x, y}));
  return arr;
}

json int_list(const std::vector<std::int64_t>& values) {
  json arr = json::array();
  for (std::int64_t v : values) arr.push_back(v);
  return arr;
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

// Left-justified text table with two-space gutters.
std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::ostringstream os;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    os << line << "\n";
  }
  return os.str();
}

struct Common {
  std::string format = "text";
  std::uint64_t cap = CountOptions{}.cap;
  std::uint32_t threads = 1;

  bool is_json() const { return format == "json"; }
  CountOptions opts() const { return CountOptions{cap, threads}; }
};

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  cmd->add_option("--cap", common.cap, "Largest field enumeration allowed")
      ->capture_default_str();
  cmd->add_option("--threads", common.threads, "Worker threads for point counting")
      ->check(CLI::Range(std::uint32_t(1), std::uint32_t(256)))
      ->capture_default_str();
}

void extra_checks(const CurveSpec& curve, const LPolynomial& L, std::int64_t extra,
                  const CountOptions& opts) {
  for (std::int64_t j = 1; j <= extra; ++j) predict_and_check(curve, L, L.g + j, opts);
}

// ---- count ----------------------------------------------------------

int cmd_count(const std::string& curve_text, std::int64_t s_max, const Common& common,
              std::ostream& out) {
  const CurveSpec curve = parse_curve(curve_text);
  validate(curve);
  const std::int64_t g = genus(curve);
  if (s_max <= 0) s_max = std::max<std::int64_t>(g, 1);
  const CountOptions opts = common.opts();
  std::vector<BigInt> counts;
  for (std::int64_t s = 1; s <= s_max; ++s)
    counts.emplace_back(n_points(curve, static_cast<std::uint32_t>(s), opts));

  if (common.is_json()) {
    json doc;
    doc["curve"] = curve.to_string();
    doc["q"] = curve.base.cardinality();
    doc["g"] = g;
    doc["N"] = big_list(counts);
    emit(out, doc);
  } else {
    out << "curve: " << curve.to_string() << "\n";
    out << "q = " << curve.base.cardinality() << ", g = " << g << "\n";
    for (std::int64_t s = 1; s <= s_max; ++s)
      out << "N_" << s << " = " << counts[std::size_t(s - 1)] << "\n";
  }
  return 0;
}

// ---- zeta -----------------------------------------------------------

int cmd_zeta(const std::string& curve_text, std::int64_t extra, const Common& common,
             std::ostream& out) {
  const CurveSpec curve = parse_curve(curve_text);
  const CountOptions opts = common.opts();
  const LPolynomial L = l_polynomial(curve, opts);
  extra_checks(curve, L, extra, opts);

  if (common.is_json()) {
    json doc;
    doc["curve"] = curve.to_string();
    doc["q"] = curve.base.cardinality();
    doc["g"] = L.g;
    doc["N"] = big_list(L.counts);
    doc["L"] = big_list(L.coeffs);
    emit(out, doc);
  } else {
    out << "curve: " << curve.to_string() << "\n";
    out << "q = " << curve.base.cardinality() << ", g = " << L.g << "\n";
    for (std::size_t s = 0; s < L.counts.size(); ++s)
      out << "N_" << s + 1 << " = " << L.counts[s] << "\n";
    out << "L(T) = " << lpoly_pretty(L) << "\n";
  }
  return 0;
}

// ---- np / classify --------------------------------------------------

int cmd_np(const std::string& curve_text, std::int64_t extra, const Common& common,
           std::ostream& out) {
  const CurveSpec curve = parse_curve(curve_text);
  const CountOptions opts = common.opts();
  const LPolynomial L = l_polynomial(curve, opts);
  extra_checks(curve, L, extra, opts);
  const NewtonPolygon np = newton_polygon(L);

  if (common.is_json()) {
    json doc;
    doc["curve"] = curve.to_string();
    doc["q"] = curve.base.cardinality();
    doc["g"] = np.g;
    doc["slopes"] = slopes_json(np);
    doc["breaks"] = breaks_json(np);
    doc["p_rank"] = p_rank(np);
    doc["supersingular"] = is_supersingular(np);
    emit(out, doc);
  } else {
    out << "curve: " << curve.to_string() << "\n";
    out << "q = " << curve.base.cardinality() << ", g = " << np.g << "\n";
    out << "slopes: " << to_string(np) << "\n";
    out << "p-rank = " << p_rank(np) << ", supersingular = "
        << (is_supersingular(np) ? "true" : "false") << "\n";
    out << render_hull(np);
  }
  return 0;
}

int cmd_classify(const std::string& curve_text, std::int64_t extra, const Common& common,
                 std::ostream& out) {
  const CurveSpec curve = parse_curve(curve_text);
  const CountOptions opts = common.opts();
  const LPolynomial L = l_polynomial(curve, opts);
  extra_checks(curve, L, extra, opts);
  const NewtonPolygon np = newton_polygon(L);

  if (common.is_json()) {
    json doc;
    doc["curve"] = curve.to_string();
    doc["q"] = curve.base.cardinality();
    doc["g"] = np.g;
    doc["p_rank"] = p_rank(np);
    doc["supersingular"] = is_supersingular(np);
    doc["slopes"] = slopes_json(np);
    emit(out, doc);
  } else {
    out << "curve: " << curve.to_string() << "\n";
    out << "q = " << curve.base.cardinality() << ", g = " << np.g << "\n";
    out << "slopes: " << to_string(np) << "\n";
    out << "p-rank = " << p_rank(np) << "\n";
    out << "supersingular = " << (is_supersingular(np) ? "true" : "false") << "\n";
  }
  return 0;
}

// ---- eo -------------------------------------------------------------

json eo_row_json(const EOType& nu, const std::string& dieudonne) {
  json row;
  row["name"] = eo_name(nu);
  row["codim"] = eo_codim(nu);
  row["p_rank"] = eo_p_rank(nu);
  row["a_number"] = eo_a_number(nu);
  row["nu"] = int_list(nu);
  row["mu"] = int_list(young_type(nu));
  if (!dieudonne.empty()) row["dieudonne"] = dieudonne;
  return row;
}

std::vector<std::string> eo_row_text(const EOType& nu, const std::string& dieudonne) {
  std::vector<std::string> row = {eo_name(nu),
                                  std::to_string(eo_codim(nu)),
                                  std::to_string(eo_p_rank(nu)),
                                  std::to_string(eo_a_number(nu)),
                                  to_string(nu),
                                  to_string_young(young_type(nu))};
  if (!dieudonne.empty()) row.push_back(dieudonne);
  return row;
}

int cmd_eo(std::int64_t g, bool do_enumerate, bool do_golden, const std::string& nu_text,
           const Common& common, std::ostream& out) {
  if (!nu_text.empty()) {
    const EOType nu = parse_nu(nu_text);
    validate_eo(nu);
    if (common.is_json()) {
      json doc = eo_row_json(nu, "");
      doc["dim"] = eo_dim(nu);
      emit(out, doc);
    } else {
      out << "nu = " << to_string(nu) << "\n";
      out << "name = " << eo_name(nu) << "\n";
      out << "mu = " << to_string_young(young_type(nu)) << "\n";
      out << "p-rank = " << eo_p_rank(nu) << ", a-number = " << eo_a_number(nu) << "\n";
      out << "dim = " << eo_dim(nu) << ", codim = " << eo_codim(nu) << "\n";
    }
    return 0;
  }

  if (do_golden) {
    const std::vector<EORow> rows = golden_eo_table(g);
    if (common.is_json()) {
      json doc;
      doc["g"] = g;
      json arr = json::array();
      for (const EORow& row : rows) arr.push_back(eo_row_json(row.nu, row.dieudonne));
      doc["rows"] = arr;
      emit(out, doc);
    } else {
      std::vector<std::vector<std::string>> text = {
          {"name", "codim", "f", "a", "nu", "mu", "dieudonne"}};
      for (const EORow& row : rows) text.push_back(eo_row_text(row.nu, row.dieudonne));
      out << table(text);
    }
    return 0;
  }

  if (!do_enumerate) throw ParseFailure("eo needs one of --enumerate, --golden, --nu");
  const std::vector<EOType> types = enumerate_eo(g);
  if (common.is_json()) {
    json doc;
    doc["g"] = g;
    json arr = json::array();
    for (const EOType& nu : types) arr.push_back(eo_row_json(nu, ""));
    doc["rows"] = arr;
    emit(out, doc);
  } else {
    std::vector<std::vector<std::string>> text = {{"name", "codim", "f", "a", "nu", "mu"}};
    for (const EOType& nu : types) text.push_back(eo_row_text(nu, ""));
    out << table(text);
  }
  return 0;
}

// ---- strata ---------------------------------------------------------

json stratum_json(const NewtonPolygon& np) {
  const StratumReport report = stratum_report(np);
  json doc;
  doc["polygon"] = to_string(np);
  doc["g"] = report.g;
  doc["sdim"] = report.sdim;
  doc["codim"] = report.codim;
  doc["p_rank"] = report.p_rank;
  doc["supersingular"] = report.supersingular;
  if (report.has_leaf_dims) {
    doc["central_leaf"] = report.central_leaf;
    doc["isogeny_leaf"] = report.isogeny_leaf;
  }
  return doc;
}

std::vector<std::string> stratum_text_row(const NewtonPolygon& np) {
  const StratumReport report = stratum_report(np);
  std::vector<std::string> row = {to_string(np),
                                  std::to_string(report.sdim),
                                  std::to_string(report.codim),
                                  std::to_string(report.p_rank),
                                  report.supersingular ? "yes" : "no"};
  if (report.has_leaf_dims) {
    row.push_back(std::to_string(report.central_leaf));
    row.push_back(std::to_string(report.isogeny_leaf));
  } else {
    row.push_back("-");
    row.push_back("-");
  }
  return row;
}

int cmd_strata(std::int64_t g, bool do_all, const std::string& example,
               const std::string& slopes_text, bool delta_table, std::int64_t p_rank_f,
               const Common& common, std::ostream& out) {
  if (!example.empty()) {
    if (example != "ecidim") throw ParseFailure("unknown example '" + example + "'");
    const NewtonPolygon np4 = np_from_slopes(parse_slopes("1/4^4,3/4^4"));
    const NewtonPolygon np5 = np_from_slopes(parse_slopes("2/5^5,3/5^5"));
    if (common.is_json()) {
      json doc = json::array({stratum_json(np4), stratum_json(np5)});
      emit(out, doc);
    } else {
      for (const NewtonPolygon* np : {&np4, &np5}) {
        const StratumReport r = stratum_report(*np);
        out << to_string(*np) << ": (sdim, central, isogeny) = (" << r.sdim << ", "
            << r.central_leaf << ", " << r.isogeny_leaf << ")\n";
      }
    }
    return 0;
  }

  if (!slopes_text.empty()) {
    const NewtonPolygon np = np_from_slopes(parse_slopes(slopes_text));
    if (common.is_json()) {
      emit(out, stratum_json(np));
    } else {
      const StratumReport r = stratum_report(np);
      out << "polygon: " << to_string(np) << "\n";
      out << "g = " << r.g << ", sdim = " << r.sdim << ", codim = " << r.codim << "\n";
      out << "p-rank = " << r.p_rank << ", supersingular = "
          << (r.supersingular ? "true" : "false") << "\n";
      if (r.has_leaf_dims)
        out << "central leaf = " << r.central_leaf << ", isogeny leaf = " << r.isogeny_leaf
            << "\n";
    }
    return 0;
  }

  if (delta_table) {
    const std::int64_t g_max = g > 0 ? g : 12;
    if (common.is_json()) {
      json doc;
      json arr = json::array();
      for (std::int64_t k = 1; k <= g_max; ++k) {
        json row;
        row["g"] = k;
        row["delta"] = delta_g(k);
        row["moduli_dim"] = 3 * k - 3;
        row["exceeds"] = k >= 2 && delta_g(k) > 3 * k - 3;
        arr.push_back(row);
      }
      doc["rows"] = arr;
      doc["first_g_exceeding"] = first_g_exceeding_moduli_dim();
      emit(out, doc);
    } else {
      std::vector<std::vector<std::string>> rows = {{"g", "delta_g", "3g-3", "exceeds"}};
      for (std::int64_t k = 1; k <= g_max; ++k)
        rows.push_back({std::to_string(k), std::to_string(delta_g(k)),
                        std::to_string(3 * k - 3),
                        k >= 2 && delta_g(k) > 3 * k - 3 ? "yes" : "no"});
      out << table(rows);
      out << "first g with delta_g > 3g-3: " << first_g_exceeding_moduli_dim() << "\n";
    }
    return 0;
  }

  if (p_rank_f >= 0) {
    if (g <= 0) throw ParseFailure("--p-rank needs --g");
    const PRankStratumDims dims = p_rank_stratum_dims(g, p_rank_f);
    if (common.is_json()) {
      json doc;
      doc["g"] = g;
      doc["f"] = p_rank_f;
      doc["abelian"] = dims.abelian;
      doc["curve"] = dims.curve;
      doc["hyperelliptic"] = dims.hyperelliptic;
      emit(out, doc);
    } else {
      out << "g = " << g << ", f = " << p_rank_f << "\n";
      out << "abelian stratum dim = " << dims.abelian << "\n";
      out << "curve stratum dim = " << dims.curve << "\n";
      out << "hyperelliptic stratum dim = " << dims.hyperelliptic << "\n";
    }
    return 0;
  }

  if (!do_all || g <= 0)
    throw ParseFailure("strata needs --example, --slopes, --delta-table, --p-rank, or --g with --all");
  const std::vector<NewtonPolygon> polygons = enumerate_symmetric(g);
  if (common.is_json()) {
    json doc;
    doc["g"] = g;
    json arr = json::array();
    for (const NewtonPolygon& np : polygons) arr.push_back(stratum_json(np));
    doc["rows"] = arr;
    emit(out, doc);
  } else {
    std::vector<std::vector<std::string>> rows = {
        {"polygon", "sdim", "codim", "f", "ss", "central", "isogeny"}};
    for (const NewtonPolygon& np : polygons) rows.push_back(stratum_text_row(np));
    out << table(rows);
  }
  return 0;
}

// ---- construct ------------------------------------------------------

json plan_json(const CKPPlan& plan) {
  json doc;
  doc["p"] = plan.p;
  doc["delta"] = std::to_string(plan.delta);
  doc["genus_target"] = dec(plan.genus_target);
  doc["base_degree"] = dec(plan.base_degree);
  json runs = json::array();
  for (const CKPRun& run : plan.runs) {
    json r;
    r["start"] = run.start;
    r["length"] = run.length;
    r["u"] = run.u;
    runs.push_back(r);
  }
  doc["runs"] = runs;
  json inv = json::array();
  for (const CKPFactorClass& cls : plan.inventory) {
    json c;
    c["run"] = cls.run_index;
    c["count"] = dec(cls.count);
    c["genus_each"] = dec(cls.genus_each);
    inv.push_back(c);
  }
  doc["inventory"] = inv;
  return doc;
}

int cmd_construct(std::uint64_t p, std::uint64_t delta, bool do_instantiate, bool do_verify,
                  const Common& common, std::ostream& out) {
  const CKPPlan plan = ckp_plan(p, delta);
  const bool build = do_instantiate || do_verify;
  std::vector<CKPFactor> factors;
  if (build) factors = instantiate_factors(plan);

  if (common.is_json()) {
    json doc = plan_json(plan);
    if (build) {
      json arr = json::array();
      for (const CKPFactor& factor : factors) {
        json f;
        f["curve"] = factor.curve.to_string();
        f["run"] = factor.run_index;
        f["genus"] = dec(factor.expected_genus);
        arr.push_back(f);
      }
      doc["factors"] = arr;
    }
    if (do_verify) {
      const VerifyReport report = verify_supersingular_factors(factors, common.opts());
      json v;
      v["verified"] = report.verified;
      v["skipped"] = report.skipped;
      json arr = json::array();
      for (const FactorReport& fr : report.factors) {
        json f;
        f["curve"] = fr.curve;
        f["genus"] = fr.genus;
        f["status"] = fr.status == FactorStatus::VerifiedSupersingular ? "supersingular"
                                                                       : "skipped-cap";
        arr.push_back(f);
      }
      v["factors"] = arr;
      doc["verify"] = v;
    }
    emit(out, doc);
  } else {
    out << "p = " << plan.p << ", delta = " << plan.delta << "\n";
    out << "genus target = " << plan.genus_target << "\n";
    out << "base field degree = " << plan.base_degree << "\n";
    std::vector<std::vector<std::string>> rows = {{"run", "start", "length", "u", "count",
                                                   "genus each"}};
    for (std::size_t i = 0; i < plan.runs.size(); ++i)
      rows.push_back({std::to_string(i), std::to_string(plan.runs[i].start),
                      std::to_string(plan.runs[i].length), std::to_string(plan.runs[i].u),
                      dec(plan.inventory[i].count), dec(plan.inventory[i].genus_each)});
    out << table(rows);
    if (build) {
      out << "factors:\n";
      for (const CKPFactor& factor : factors)
        out << "  " << factor.curve.to_string() << "  (run " << factor.run_index << ", g = "
            << factor.expected_genus << ")\n";
    }
    if (do_verify) {
      const VerifyReport report = verify_supersingular_factors(factors, common.opts());
      out << "verify:\n";
      for (const FactorReport& fr : report.factors)
        out << "  " << fr.curve << "  "
            << (fr.status == FactorStatus::VerifiedSupersingular ? "supersingular"
                                                                 : "skipped (cap)")
            << "\n";
      out << "verified = " << report.verified << ", skipped = " << report.skipped << "\n";
    }
  }
  return 0;
}

// ---- selftest -------------------------------------------------------

int cmd_selftest(const Common& common, std::ostream& out) {
  const std::vector<CheckResult> results = run_selftest(common.opts());
  std::int64_t failed = 0;
  for (const CheckResult& r : results)
    if (!r.ok) ++failed;

  if (common.is_json()) {
    json doc;
    json arr = json::array();
    for (const CheckResult& r : results) {
      json c;
      c["name"] = r.name;
      c["ok"] = r.ok;
      if (!r.ok) c["detail"] = r.detail;
      arr.push_back(c);
    }
    doc["checks"] = arr;
    doc["passed"] = std::int64_t(results.size()) - failed;
    doc["failed"] = failed;
    emit(out, doc);
  } else {
    for (const CheckResult& r : results) {
      if (r.ok)
        out << "ok " << r.name << "\n";
      else
        out << "FAIL " << r.name << ": " << r.detail << "\n";
    }
    out << results.size() - failed << "/" << results.size() << " checks passed\n";
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zeta functions, Newton polygons, and moduli strata of curves over finite fields"};
  app.require_subcommand(1);

  struct {
    Common common;
    std::string curve;
    std::int64_t s_max = 0;
  } count;
  struct {
    Common common;
    std::string curve;
    std::int64_t extra = 0;
  } zeta, np, classify;
  struct {
    Common common;
    std::int64_t g = 0;
    bool enumerate = false;
    bool golden = false;
    std::string nu;
  } eo;
  struct {
    Common common;
    std::int64_t g = 0;
    bool all = false;
    std::string example;
    std::string slopes;
    bool delta_table = false;
    std::int64_t p_rank = -1;
  } strata;
  struct {
    Common common;
    std::uint64_t p = 0;
    std::uint64_t delta = 0;
    bool instantiate = false;
    bool verify = false;
  } construct;
  Common catalog_common, selftest_common;

  CLI::App* c_count = app.add_subcommand("count", "Point counts N_s over field extensions");
  add_common(c_count, count.common);
  c_count->add_option("--curve", count.curve, "Curve specification")->required();
  c_count->add_option("--s-max", count.s_max, "Largest extension degree (default: genus)");

  CLI::App* c_zeta = app.add_subcommand("zeta", "L-polynomial of the zeta function");
  add_common(c_zeta, zeta.common);
  c_zeta->add_option("--curve", zeta.curve, "Curve specification")->required();
  c_zeta->add_option("--verify-extra", zeta.extra, "Check predicted N_s for g+1..g+k");

  CLI::App* c_np = app.add_subcommand("np", "Newton polygon of the L-polynomial");
  add_common(c_np, np.common);
  c_np->add_option("--curve", np.curve, "Curve specification")->required();
  c_np->add_option("--verify-extra", np.extra, "Check predicted N_s for g+1..g+k");

  CLI::App* c_classify =
      app.add_subcommand("classify", "p-rank, supersingularity, and slope multiset");
  add_common(c_classify, classify.common);
  c_classify->add_option("--curve", classify.curve, "Curve specification")->required();
  c_classify->add_option("--verify-extra", classify.extra, "Check predicted N_s for g+1..g+k");

  CLI::App* c_eo = app.add_subcommand("eo", "Ekedahl-Oort final types");
  add_common(c_eo, eo.common);
  c_eo->add_option("--g", eo.g, "Genus");
  c_eo->add_flag("--enumerate", eo.enumerate, "List all 2^g final types");
  c_eo->add_flag("--golden", eo.golden, "Classification table for g in {2,3}");
  c_eo->add_option("--nu", eo.nu, "Single final type, e.g. 0,1,1");

  CLI::App* c_strata = app.add_subcommand("strata", "Stratum dimensions in moduli of abelian varieties");
  add_common(c_strata, strata.common);
  c_strata->add_option("--g", strata.g, "Genus");
  c_strata->add_flag("--all", strata.all, "Every symmetric polygon of genus g");
  c_strata->add_option("--example", strata.example, "Named worked example (ecidim)");
  c_strata->add_option("--slopes", strata.slopes, "Slope multiset, e.g. 1/4^4,3/4^4");
  c_strata->add_flag("--delta-table", strata.delta_table,
                     "Supersingular codimension against moduli dimension");
  c_strata->add_option("--p-rank", strata.p_rank, "p-rank stratum dimensions for this f");

  CLI::App* c_construct =
      app.add_subcommand("construct", "Supersingular Artin-Schreier cover plans");
  add_common(c_construct, construct.common);
  c_construct->add_option("--p", construct.p, "Characteristic")->required();
  c_construct->add_option("--delta", construct.delta, "Discriminant parameter")->required();
  c_construct->add_flag("--instantiate", construct.instantiate, "Build the factor curves");
  c_construct->add_flag("--verify", construct.verify,
                        "Check each factor's polygon (implies --instantiate)");

  CLI::App* c_catalog = app.add_subcommand("catalog", "Built-in worked-example catalog");
  add_common(c_catalog, catalog_common);

  CLI::App* c_selftest = app.add_subcommand("selftest", "Run the worked-example oracle suite");
  add_common(c_selftest, selftest_common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (c_count->parsed()) return cmd_count(count.curve, count.s_max, count.common, out);
    if (c_zeta->parsed()) return cmd_zeta(zeta.curve, zeta.extra, zeta.common, out);
    if (c_np->parsed()) return cmd_np(np.curve, np.extra, np.common, out);
    if (c_classify->parsed())
      return cmd_classify(classify.curve, classify.extra, classify.common, out);
    if (c_eo->parsed())
      return cmd_eo(eo.g, eo.enumerate, eo.golden, eo.nu, eo.common, out);
    if (c_strata->parsed())
      return cmd_strata(strata.g, strata.all, strata.example, strata.slopes, strata.delta_table,
                        strata.p_rank, strata.common, out);
    if (c_construct->parsed())
      return cmd_construct(construct.p, construct.delta, construct.instantiate, construct.verify,
                           construct.common, out);
    if (c_catalog->parsed()) {
      out << catalog_json();
      return 0;
    }
    if (c_selftest->parsed()) return cmd_selftest(selftest_common, out);
    err << "parse error: no subcommand\n";
    return 2;
  } catch (const ParseFailure& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace npcli

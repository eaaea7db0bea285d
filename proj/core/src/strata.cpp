#include "npcurve/strata.hpp"

#include <string>

#include "npcurve/error.hpp"

namespace npcurve {

std::int64_t sdim(const NewtonPolygon& np) {
  std::int64_t total = 0;
  for (std::int64_t x = 1; x <= np.g; ++x) {
    const std::int64_t floor_y = static_cast<std::int64_t>(rat_ceil(hull_value(np, Rat(x))));
    if (x > floor_y) total += x - floor_y;
  }
  return total;
}

std::int64_t np_codim(const NewtonPolygon& np) {
  return np.g * (np.g + 1) / 2 - sdim(np);
}

namespace {

// Extracts (m, n) with slopes n/(m+n) < m/(m+n); throws otherwise.
void two_slope_shape(const NewtonPolygon& np, std::int64_t& m, std::int64_t& n) {
  if (np.runs.size() != 2)
    fail(ErrorCode::NotTwoSlopeShape, "polygon must carry exactly two distinct slopes");
  const SlopeRun& low = np.runs[0];
  n = low.num;
  m = low.den - low.num;
  if (n < 1 || m <= n)
    fail(ErrorCode::NotTwoSlopeShape,
         "slopes must be n/(m+n) and m/(m+n) with m > n >= 1, got lower slope " +
             std::to_string(low.num) + "/" + std::to_string(low.den));
}

}  // namespace

std::int64_t central_leaf_dim(const NewtonPolygon& np) {
  std::int64_t m = 0, n = 0;
  two_slope_shape(np, m, n);
  const std::int64_t d = m + n;
  std::int64_t total = 0;
  for (std::int64_t x = 0; x <= np.g; ++x) {
    // #{y : (n/d) x <= y < (m/d) x} = ceil(mx/d) - ceil(nx/d)
    const BigInt lo = rat_ceil(Rat(n * x, d));
    const BigInt hi = rat_ceil(Rat(m * x, d));
    total += static_cast<std::int64_t>(hi - lo);
  }
  return total;
}

std::int64_t isogeny_leaf_dim(const NewtonPolygon& np) {
  return sdim(np) - central_leaf_dim(np);
}

std::int64_t delta_g(std::int64_t g) {
  if (g < 1) fail(ErrorCode::GenusOutOfRange, "genus must be positive");
  return g * (g + 1) / 2 - (g * g) / 4;
}

std::int64_t first_g_exceeding_moduli_dim() {
  for (std::int64_t g = 2; g <= 64; ++g)
    if (delta_g(g) > 3 * g - 3) return g;
  fail(ErrorCode::IdentityFailure, "quadratic growth must cross the linear bound");
}

PRankStratumDims p_rank_stratum_dims(std::int64_t g, std::int64_t f) {
  if (g < 2) fail(ErrorCode::GenusOutOfRange, "curve strata need genus >= 2");
  if (f < 0 || f > g) fail(ErrorCode::InvalidPRank, "p-rank must lie in 0..g");
  PRankStratumDims d;
  d.abelian = g * (g + 1) / 2 - (g - f);
  d.curve = 2 * g - 3 + f;
  d.hyperelliptic = g - 1 + f;
  return d;
}

CodimInvarianceReport codim_invariance_check(const NewtonPolygon& np, std::int64_t e_max) {
  CodimInvarianceReport report;
  report.base_codim = np_codim(np);
  for (std::int64_t e = 0; e <= e_max; ++e) {
    const std::int64_t codim = np_codim(xi_plus_e(np, e));
    if (codim != report.base_codim) {
      report.ok = false;
      report.first_bad_e = e;
      report.bad_codim = codim;
      return report;
    }
    report.e_checked = e;
  }
  return report;
}

StratumReport stratum_report(const NewtonPolygon& np) {
  StratumReport r;
  r.g = np.g;
  r.sdim = sdim(np);
  r.codim = np_codim(np);
  r.p_rank = p_rank(np);
  r.supersingular = is_supersingular(np);
  if (np.runs.size() == 2 && np.runs[0].num >= 1 &&
      np.runs[0].den - np.runs[0].num > np.runs[0].num) {
    r.has_leaf_dims = true;
    r.central_leaf = central_leaf_dim(np);
    r.isogeny_leaf = r.sdim - r.central_leaf;
  }
  return r;
}

}  // namespace npcurve

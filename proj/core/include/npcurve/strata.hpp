#pragma once

#include <cstdint>

#include "npcurve/npoly.hpp"

namespace npcurve {

// Lattice count #{(x,y) integral : 1 <= x <= g, hull(x) <= y < x}: the
// dimension of the polygon's stratum in the moduli space of principally
// polarized abelian varieties. Ordinary: g(g+1)/2. Supersingular: floor(g^2/4).
std::int64_t sdim(const NewtonPolygon& np);

// g(g+1)/2 - sdim.
std::int64_t np_codim(const NewtonPolygon& np);

// For a polygon with exactly the two slopes n/(m+n) < m/(m+n), gcd(m,n)=1,
// m > n >= 1: central leaf dimension
//   #{(x,y) integral : 0 <= x <= g, (n/(m+n)) x <= y < (m/(m+n)) x}.
// Errors: NotTwoSlopeShape otherwise (slope 0 present, a single slope, or
// m = n).
std::int64_t central_leaf_dim(const NewtonPolygon& np);

// sdim - central_leaf_dim, on the same domain.
std::int64_t isogeny_leaf_dim(const NewtonPolygon& np);

// delta_g = g(g+1)/2 - floor(g^2/4): codimension of the supersingular locus.
std::int64_t delta_g(std::int64_t g);

// Least g >= 2 with delta_g > 3g - 3 (the dimension of the curve moduli
// space): the answer is fixed by arithmetic, computed by search.
std::int64_t first_g_exceeding_moduli_dim();

struct PRankStratumDims {
  std::int64_t abelian = 0;        // g(g+1)/2 - (g-f)
  std::int64_t curve = 0;          // 2g - 3 + f
  std::int64_t hyperelliptic = 0;  // g - 1 + f
};

// Dimensions of the p-rank-f strata in the three moduli spaces. Errors:
// GenusOutOfRange for g < 2, InvalidPRank for f outside 0..g.
PRankStratumDims p_rank_stratum_dims(std::int64_t g, std::int64_t f);

struct CodimInvarianceReport {
  std::int64_t base_codim = 0;
  std::int64_t e_checked = 0;  // verified for every e in 0..e_checked
  bool ok = true;
  std::int64_t first_bad_e = -1;
  std::int64_t bad_codim = -1;
};

// Verifies that adjoining e ordinary slope pairs preserves the codimension:
// (g+e)(g+e+1)/2 - sdim(xi^{+e}) stays equal to np_codim(xi) for
// e = 0..e_max. Reports rather than throws.
CodimInvarianceReport codim_invariance_check(const NewtonPolygon& np, std::int64_t e_max);

struct StratumReport {
  std::int64_t g = 0;
  std::int64_t sdim = 0;
  std::int64_t codim = 0;
  std::int64_t p_rank = 0;
  bool supersingular = false;
  bool has_leaf_dims = false;  // true only on the two-slope domain
  std::int64_t central_leaf = 0;
  std::int64_t isogeny_leaf = 0;
};

StratumReport stratum_report(const NewtonPolygon& np);

}  // namespace npcurve

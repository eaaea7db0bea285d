#include "npcurve/npoly.hpp"

#include <algorithm>
#include <numeric>

#include "npcurve/error.hpp"

namespace npcurve {

namespace {

// Collapses an ascending slope list into runs and recomputes break vertices.
// Callers guarantee the list is sorted; validation happens here so both
// entry points share it.
NewtonPolygon assemble(std::vector<Rat> slopes) {
  for (const Rat& s : slopes) {
    if (s < 0 || s > 1)
      fail(ErrorCode::InvalidSlopeData, "slope outside [0,1]");
  }
  std::sort(slopes.begin(), slopes.end());
  if (slopes.size() % 2 != 0)
    fail(ErrorCode::InvalidSlopeData, "odd number of slopes");

  NewtonPolygon np;
  np.g = static_cast<std::int64_t>(slopes.size() / 2);
  for (std::size_t i = 0; i < slopes.size();) {
    std::size_t j = i;
    while (j < slopes.size() && slopes[j] == slopes[i]) ++j;
    SlopeRun run;
    run.num = static_cast<std::int64_t>(rat_num(slopes[i]));
    run.den = static_cast<std::int64_t>(rat_den(slopes[i]));
    run.mult = static_cast<std::int64_t>(j - i);
    np.runs.push_back(run);
    i = j;
  }

  // Symmetry: mult(s) must equal mult(1-s). The run list is ascending, so
  // run k pairs with run (count-1-k).
  const std::size_t n = np.runs.size();
  for (std::size_t k = 0; k < n; ++k) {
    const SlopeRun& a = np.runs[k];
    const SlopeRun& b = np.runs[n - 1 - k];
    if (a.mult != b.mult || Rat(a.num, a.den) + Rat(b.num, b.den) != 1)
      fail(ErrorCode::AsymmetricSlopes,
           "slope multiset is not symmetric under s -> 1-s");
  }

  std::int64_t x = 0;
  Rat y(0);
  np.breaks.emplace_back(0, 0);
  for (const SlopeRun& run : np.runs) {
    x += run.mult;
    y += Rat(run.num, run.den) * run.mult;
    if (!rat_is_integer(y))
      fail(ErrorCode::NonIntegralBreakPoint,
           "slope run of " + std::to_string(run.num) + "/" + std::to_string(run.den) +
               " with multiplicity " + std::to_string(run.mult) +
               " ends off the lattice");
    np.breaks.emplace_back(x, static_cast<std::int64_t>(rat_num(y)));
  }
  return np;
}

}  // namespace

NewtonPolygon newton_polygon(const LPolynomial& L) {
  const std::int64_t g = L.g;
  if (g == 0) {
    NewtonPolygon np;
    np.breaks.emplace_back(0, 0);
    return np;
  }
  const std::int64_t r = static_cast<std::int64_t>(L.base.r());
  const std::int64_t p = static_cast<std::int64_t>(L.base.p());

  // Finite points (i, v_p(c_i)/r); zero coefficients are omitted.
  std::vector<std::pair<std::int64_t, Rat>> pts;
  for (std::int64_t i = 0; i <= 2 * g; ++i) {
    const BigInt& c = L.coeffs[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    pts.emplace_back(i, Rat(p_valuation(c, p), r));
  }

  // Monotone chain lower hull; x-coordinates are already strictly increasing.
  std::vector<std::pair<std::int64_t, Rat>> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      // Keep b only if it turns left: (b-a) x (pt-a) > 0.
      const Rat cross = (b.second - a.second) * (pt.first - a.first) -
                        (pt.second - a.second) * (b.first - a.first);
      if (cross >= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(pt);
  }

  std::vector<Rat> slopes;
  slopes.reserve(static_cast<std::size_t>(2 * g));
  for (std::size_t k = 1; k < hull.size(); ++k) {
    const Rat slope =
        (hull[k].second - hull[k - 1].second) / (hull[k].first - hull[k - 1].first);
    for (std::int64_t m = 0; m < hull[k].first - hull[k - 1].first; ++m)
      slopes.push_back(slope);
  }
  if (static_cast<std::int64_t>(slopes.size()) != 2 * g)
    fail(ErrorCode::InvalidSlopeData, "hull does not span width 2g");
  return assemble(std::move(slopes));
}

NewtonPolygon np_from_slopes(const std::vector<Rat>& slopes) {
  if (slopes.empty()) {
    NewtonPolygon np;
    np.breaks.emplace_back(0, 0);
    return np;
  }
  return assemble(slopes);
}

std::int64_t p_rank(const NewtonPolygon& np) {
  if (!np.runs.empty() && np.runs.front().num == 0) return np.runs.front().mult;
  return 0;
}

bool is_supersingular(const NewtonPolygon& np) {
  if (np.g == 0) return true;
  return np.runs.size() == 1 && np.runs[0].num == 1 && np.runs[0].den == 2;
}

Rat hull_value(const NewtonPolygon& np, const Rat& x) {
  if (x < 0 || x > 2 * np.g)
    fail(ErrorCode::InvalidSlopeData, "hull abscissa outside [0, 2g]");
  Rat cx(0), cy(0);
  for (const SlopeRun& run : np.runs) {
    const Rat nx = cx + run.mult;
    if (x <= nx) return cy + Rat(run.num, run.den) * (x - cx);
    cx = nx;
    cy += Rat(run.num, run.den) * run.mult;
  }
  return cy;  // x == 2g (or g == 0)
}

bool np_leq(const NewtonPolygon& a, const NewtonPolygon& b) {
  if (a.g != b.g)
    fail(ErrorCode::GenusOutOfRange, "polygons of different genus are incomparable");
  // Both hulls are piecewise linear, so comparing at the union of break
  // abscissae decides the pointwise comparison.
  std::vector<std::int64_t> xs;
  for (const auto& v : a.breaks) xs.push_back(v.first);
  for (const auto& v : b.breaks) xs.push_back(v.first);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  for (std::int64_t x : xs) {
    if (hull_value(a, Rat(x)) < hull_value(b, Rat(x))) return false;
  }
  return true;
}

NewtonPolygon xi_plus_e(const NewtonPolygon& np, std::int64_t e) {
  if (e < 0) fail(ErrorCode::InvalidSlopeData, "negative slope padding");
  std::vector<Rat> slopes;
  for (const SlopeRun& run : np.runs)
    for (std::int64_t m = 0; m < run.mult; ++m) slopes.push_back(run.slope());
  for (std::int64_t i = 0; i < e; ++i) {
    slopes.push_back(Rat(0));
    slopes.push_back(Rat(1));
  }
  return np_from_slopes(slopes);
}

NewtonPolygon ordinary_np(std::int64_t g) {
  std::vector<Rat> slopes;
  for (std::int64_t i = 0; i < g; ++i) slopes.push_back(Rat(0));
  for (std::int64_t i = 0; i < g; ++i) slopes.push_back(Rat(1));
  return np_from_slopes(slopes);
}

NewtonPolygon sigma_np(std::int64_t g) {
  std::vector<Rat> slopes(static_cast<std::size_t>(2 * g), Rat(1, 2));
  return np_from_slopes(slopes);
}

namespace {

// One indecomposable symmetric building block of half-height h: either the
// ordinary pair {0,1} (h=1), the pair {1/2,1/2} (h=1), or for coprime c>d>=1
// the slopes d/(c+d) and c/(c+d), each taken c+d times (h = c+d).
struct Block {
  std::int64_t h;
  std::vector<Rat> slopes;
};

std::vector<Block> blocks_up_to(std::int64_t g) {
  std::vector<Block> out;
  out.push_back({1, {Rat(0), Rat(1)}});
  out.push_back({1, {Rat(1, 2), Rat(1, 2)}});
  for (std::int64_t h = 3; h <= g; ++h) {
    for (std::int64_t d = 1; 2 * d < h; ++d) {
      if (std::gcd(d, h) != 1) continue;
      Block b;
      b.h = h;
      for (std::int64_t i = 0; i < h; ++i) b.slopes.emplace_back(d, h);
      for (std::int64_t i = 0; i < h; ++i) b.slopes.emplace_back(h - d, h);
      out.push_back(std::move(b));
    }
  }
  return out;
}

void collect(const std::vector<Block>& blocks, std::size_t max_idx, std::int64_t left,
             std::vector<Rat>& acc, std::vector<NewtonPolygon>& out) {
  if (left == 0) {
    out.push_back(np_from_slopes(acc));
    return;
  }
  for (std::size_t i = 0; i < max_idx; ++i) {
    if (blocks[i].h > left) continue;
    const std::size_t before = acc.size();
    acc.insert(acc.end(), blocks[i].slopes.begin(), blocks[i].slopes.end());
    collect(blocks, i + 1, left - blocks[i].h, acc, out);
    acc.resize(before);
  }
}

std::vector<Rat> ascending_slopes(const NewtonPolygon& np) {
  std::vector<Rat> s;
  for (const SlopeRun& run : np.runs)
    for (std::int64_t m = 0; m < run.mult; ++m) s.push_back(run.slope());
  return s;
}

}  // namespace

std::vector<NewtonPolygon> enumerate_symmetric(std::int64_t g) {
  if (g < 1 || g > 12)
    fail(ErrorCode::GenusOutOfRange, "symmetric polygon enumeration supports genus 1..12");
  const std::vector<Block> blocks = blocks_up_to(g);
  std::vector<NewtonPolygon> out;
  std::vector<Rat> acc;
  collect(blocks, blocks.size(), g, acc, out);

  // Descending lex on the ascending slope tuple: the supersingular polygon
  // sorts first and the ordinary polygon last, refining np_leq.
  std::sort(out.begin(), out.end(), [](const NewtonPolygon& a, const NewtonPolygon& b) {
    return ascending_slopes(a) > ascending_slopes(b);
  });
  return out;
}

std::string to_string(const NewtonPolygon& np) {
  std::string s = "NP{";
  bool first = true;
  for (const SlopeRun& run : np.runs) {
    if (!first) s += ", ";
    first = false;
    if (run.den == 1) {
      s += std::to_string(run.num);
    } else {
      s += "(" + std::to_string(run.num) + "/" + std::to_string(run.den) + ")";
    }
    if (run.mult != 1) s += "^" + std::to_string(run.mult);
  }
  s += "}";
  return s;
}

}  // namespace npcurve

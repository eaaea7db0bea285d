#include "npcurve/eo.hpp"

#include <algorithm>
#include <map>

#include "npcurve/error.hpp"

namespace npcurve {

void validate_eo(const EOType& nu) {
  if (nu.empty()) fail(ErrorCode::InvalidEOType, "empty type");
  std::int64_t prev = 0;
  for (std::size_t i = 0; i < nu.size(); ++i) {
    if (nu[i] < prev || nu[i] > prev + 1)
      fail(ErrorCode::InvalidEOType,
           "entry " + std::to_string(i + 1) + " breaks nu_i <= nu_{i+1} <= nu_i + 1");
    prev = nu[i];
  }
}

std::vector<EOType> enumerate_eo(std::int64_t g) {
  if (g < 1 || g > 16)
    fail(ErrorCode::GenusOutOfRange, "type enumeration supports genus 1..16");
  std::vector<EOType> out;
  out.reserve(std::size_t(1) << g);
  for (std::uint64_t k = 0; k < (std::uint64_t(1) << g); ++k) {
    EOType nu(static_cast<std::size_t>(g));
    std::int64_t v = 0;
    for (std::int64_t i = 0; i < g; ++i) {
      v += (k >> (g - 1 - i)) & 1;  // step i+1, most significant bit first
      nu[static_cast<std::size_t>(i)] = v;
    }
    out.push_back(std::move(nu));
  }
  return out;
}

YoungType young_type(const EOType& nu) {
  validate_eo(nu);
  const std::int64_t g = static_cast<std::int64_t>(nu.size());
  // i - nu_i is non-decreasing with steps in {0,1}, so the counts
  // mu_j = #{i : i - nu_i >= j} are strictly decreasing until they hit 0.
  YoungType mu;
  for (std::int64_t j = 1;; ++j) {
    std::int64_t count = 0;
    for (std::int64_t i = 1; i <= g; ++i)
      if (i - nu[static_cast<std::size_t>(i - 1)] >= j) ++count;
    if (count == 0) break;
    mu.push_back(count);
  }
  return mu;
}

EOType eo_from_young(std::int64_t g, const YoungType& mu) {
  if (g < 1) fail(ErrorCode::InvalidEOType, "genus must be positive");
  for (std::size_t j = 0; j < mu.size(); ++j) {
    if (mu[j] < 1 || mu[j] > g || (j > 0 && mu[j] >= mu[j - 1]))
      fail(ErrorCode::InvalidEOType, "partition must be strictly decreasing within 1..g");
  }
  EOType nu(static_cast<std::size_t>(g));
  for (std::int64_t i = 1; i <= g; ++i) {
    std::int64_t columns = 0;
    for (std::int64_t part : mu)
      if (part >= g + 1 - i) ++columns;
    nu[static_cast<std::size_t>(i - 1)] = i - columns;
  }
  validate_eo(nu);
  if (young_type(nu) != mu)
    fail(ErrorCode::InvalidEOType, "partition is not the Young type of any final type");
  return nu;
}

std::int64_t eo_p_rank(const EOType& nu) {
  validate_eo(nu);
  std::int64_t f = 0;
  for (std::size_t i = 0; i < nu.size(); ++i)
    if (nu[i] == static_cast<std::int64_t>(i + 1)) f = static_cast<std::int64_t>(i + 1);
  return f;
}

std::int64_t eo_a_number(const EOType& nu) {
  validate_eo(nu);
  return static_cast<std::int64_t>(nu.size()) - nu.back();
}

std::int64_t eo_dim(const EOType& nu) {
  validate_eo(nu);
  std::int64_t sum = 0;
  for (std::int64_t v : nu) sum += v;
  return sum;
}

std::int64_t eo_codim(const EOType& nu) {
  const std::int64_t g = static_cast<std::int64_t>(nu.size());
  return g * (g + 1) / 2 - eo_dim(nu);
}

EOType add_ordinary(const EOType& nu, std::int64_t e) {
  validate_eo(nu);
  if (e < 0) fail(ErrorCode::InvalidEOType, "negative ordinary padding");
  EOType out;
  out.reserve(nu.size() + static_cast<std::size_t>(e));
  for (std::int64_t i = 1; i <= e; ++i) out.push_back(i);
  for (std::int64_t v : nu) out.push_back(v + e);
  return out;
}

namespace {

// Canonical tail names (p-rank 0 pieces) appearing in the g <= 3 tables.
const std::map<EOType, std::string>& tail_names() {
  static const std::map<EOType, std::string> m = {
      {{0}, "I_{1,1}"},
      {{0, 1}, "I_{2,1}"},
      {{0, 0}, "(I_{1,1})^2"},
      {{0, 1, 2}, "I_{3,1}"},
      {{0, 1, 1}, "I_{3,2}"},
      {{0, 0, 1}, "I_{1,1} + I_{2,1}"},
      {{0, 0, 0}, "(I_{1,1})^3"},
  };
  return m;
}

std::string l_power(std::int64_t f) {
  if (f == 1) return "L";
  return "L^" + std::to_string(f);
}

}  // namespace

std::string eo_name(const EOType& nu) {
  const std::int64_t g = static_cast<std::int64_t>(nu.size());
  const std::int64_t f = eo_p_rank(nu);
  if (f == g) return l_power(g);

  EOType tail(nu.begin() + f, nu.end());
  for (std::int64_t& v : tail) v -= f;
  bool staircase = true;
  for (std::size_t i = 0; i < tail.size(); ++i)
    if (tail[i] != static_cast<std::int64_t>(i)) staircase = false;
  if (f == 0 && staircase) return "I_{" + std::to_string(g) + ",1}";

  const auto it = tail_names().find(tail);
  if (it != tail_names().end())
    return f == 0 ? it->second : l_power(f) + " + " + it->second;
  return to_string(nu);
}

std::vector<EORow> golden_eo_table(std::int64_t g) {
  if (g != 2 && g != 3)
    fail(ErrorCode::GenusOutOfRange, "classification table available for genus 2 and 3");

  static const std::map<EOType, std::string> dieudonne = {
      {{1, 2}, "D(L)^2"},
      {{1, 1}, "D(L) + D_{1,1}"},
      {{0, 1}, "E/E(F^2+V^2)"},
      {{0, 0}, "(D_{1,1})^2"},
      {{1, 2, 3}, "D(L)^3"},
      {{1, 2, 2}, "D(L)^2 + D_{1,1}"},
      {{1, 1, 2}, "D(L) + E/E(F^2+V^2)"},
      {{1, 1, 1}, "D(L) + (D_{1,1})^2"},
      {{0, 1, 2}, "E/E(F^3+V^3)"},
      {{0, 1, 1}, "E/E(F^2+V) + E/E(V^2+F)"},
      {{0, 0, 1}, "D_{1,1} + E/E(F^2+V^2)"},
      {{0, 0, 0}, "(D_{1,1})^3"},
  };

  std::vector<EOType> types = enumerate_eo(g);
  std::sort(types.begin(), types.end(), [](const EOType& a, const EOType& b) {
    const std::int64_t ca = eo_codim(a), cb = eo_codim(b);
    if (ca != cb) return ca < cb;
    return a > b;  // descending lex breaks the tie
  });

  std::vector<EORow> rows;
  rows.reserve(types.size());
  for (const EOType& nu : types) {
    EORow row;
    row.name = eo_name(nu);
    row.codim = eo_codim(nu);
    row.p_rank = eo_p_rank(nu);
    row.a_number = eo_a_number(nu);
    row.nu = nu;
    row.mu = young_type(nu);
    row.dieudonne = dieudonne.at(nu);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string to_string(const EOType& nu) {
  std::string s = "[";
  for (std::size_t i = 0; i < nu.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(nu[i]);
  }
  return s + "]";
}

std::string to_string_young(const YoungType& mu) {
  std::string s = "{";
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(mu[i]);
  }
  return s + "}";
}

}  // namespace npcurve

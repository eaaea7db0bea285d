#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace npcurve {

// Final type nu = [nu_1..nu_g]: with nu_0 = 0, each step satisfies
// nu_i <= nu_{i+1} <= nu_i + 1 (so 0 <= nu_i <= i). There are exactly 2^g
// such sequences of length g.
using EOType = std::vector<std::int64_t>;

// Partition mu_1 > mu_2 > ... > 0 (possibly empty), mu_1 <= g.
using YoungType = std::vector<std::int64_t>;

// Errors: InvalidEOType.
void validate_eo(const EOType& nu);

// All 2^g types, ordered by the step bitstring read most-significant-first:
// [0,..,0] first, [1,2,..,g] last. Errors: GenusOutOfRange outside 1..16.
std::vector<EOType> enumerate_eo(std::int64_t g);

// mu_j = #{i : i - nu_i >= j}, trailing zeros dropped.
YoungType young_type(const EOType& nu);

// Inverse of young_type at a fixed g: nu_i = i - #{j : mu_j >= g+1-i}.
// Errors: InvalidEOType when mu is not strictly decreasing, exceeds g, or
// fails the round trip.
EOType eo_from_young(std::int64_t g, const YoungType& mu);

// p-rank f = max{i : nu_i = i} (0 if none); equals g - mu_1.
std::int64_t eo_p_rank(const EOType& nu);

// a-number = g - nu_g; equals the number of parts of mu.
std::int64_t eo_a_number(const EOType& nu);

// Stratum dimension sum(nu_i); codimension g(g+1)/2 - dim.
std::int64_t eo_dim(const EOType& nu);
std::int64_t eo_codim(const EOType& nu);

// [1,..,e, nu_1+e,..,nu_g+e]: adjoins e ordinary elliptic factors. The
// codimension is unchanged. e >= 0.
EOType add_ordinary(const EOType& nu, std::int64_t e);

// Canonical display name: "L^f" for the ordinary part joined with the
// canonical tail name for g <= 3 ("L + I_{2,1}"); "I_{g,1}" for
// nu = [0,1,..,g-1] at any g; otherwise the raw bracket form of nu.
std::string eo_name(const EOType& nu);

struct EORow {
  std::string name;
  std::int64_t codim = 0;
  std::int64_t p_rank = 0;
  std::int64_t a_number = 0;
  EOType nu;
  YoungType mu;
  std::string dieudonne;  // opaque display string, carried not computed
};

// The full classification for g in {2,3}, rows ordered by ascending
// codimension (ties broken by descending lexicographic nu). All columns
// except `dieudonne` are computed. Errors: GenusOutOfRange.
std::vector<EORow> golden_eo_table(std::int64_t g);

// "[0,1,1]" / "{3,1}" (empty mu prints "{}").
std::string to_string(const EOType& nu);
std::string to_string_young(const YoungType& mu);

}  // namespace npcurve

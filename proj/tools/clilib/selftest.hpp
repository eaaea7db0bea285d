#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "npcurve/options.hpp"

namespace npcli {

struct CheckResult {
  std::string name;
  bool ok = true;
  std::string detail;  // empty on success
};

// The full worked-example oracle suite: catalog entries (Hermitian, slope
// catalog curves, Legendre counts, elliptic congruences) plus the golden
// Ekedahl-Oort tables, stratum-dimension examples, the codimension
// threshold, the run-decomposition genus identity, instantiated
// supersingular covers, enumeration counts, the polygon partial-order
// example, and branched-cover p-rank bookkeeping.
std::vector<CheckResult> run_selftest(const npcurve::CountOptions& opts);

}  // namespace npcli

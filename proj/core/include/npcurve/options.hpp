#pragma once

#include <cstdint>

namespace npcurve {

// Knobs shared by every operation that enumerates field elements. The cap is
// a hard bound on the cardinality of any field that gets enumerated; counting
// loops may be split across threads (results are independent of the split).
struct CountOptions {
  std::uint64_t cap = std::uint64_t(1) << 26;
  std::uint32_t threads = 1;
};

}  // namespace npcurve

#pragma once

#include <optional>
#include <vector>

#include "kemeny/core.hpp"

namespace kemeny {

struct OracleResult {
  Score score = 0;
  std::vector<Vote> all_optimal;  // lexicographic order, optionally capped
};

// Exhaustive search over all m! rankings; ground truth for cross-checks.
// Guarded to m <= 10. `cap` bounds how many optima are kept, never which
// score is found.
OracleResult brute_force(const Election& e,
                         std::optional<int> cap = std::nullopt);

}  // namespace kemeny

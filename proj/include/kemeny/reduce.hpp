#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kemeny/core.hpp"
#include "kemeny/searchtree.hpp"

namespace kemeny {

enum class Placement { front, back };

struct Removal {
  int original_index;
  std::string name;
  Placement placement;
  Score offset;  // disagreements banked by fixing this candidate's pairs
};

struct ReductionTrace {
  std::vector<Removal> removed;
  std::vector<int> residual_original;  // residual index -> original index
  Election residual;
  Score total_offset = 0;
};

// Exhaustively removes candidates whose placement every optimal consensus
// already agrees on: a majority-non-dirty candidate preferred to every
// other candidate in more than half of the votes goes to the front, one
// beaten by every other in more than half goes to the back (strict integer
// majorities). Deterministic: lowest-index eligible candidate each round,
// front checked before back. Offsets are subscores against the current
// (partially reduced) election, so the Kemeny score of the input equals
// total_offset plus the Kemeny score of the residual.
ReductionTrace condorcet_reduce(const Election& e);

// Original-index consensus rebuilt from a residual consensus: front
// removals prepended in removal order (earliest outermost), back removals
// appended (earliest outermost).
Vote recompose(const ReductionTrace& trace, const Vote& residual_consensus);

// When no pair is majority-dirty, the 2/3 majorities orient every pair and
// their unique topological order is an optimal consensus. Returns nothing
// when majority-dirty pairs exist; throws std::logic_error if the 2/3
// relation is cyclic, which no valid profile can produce.
std::optional<SolveResult> solve_two_thirds_special_case(const Election& e);

struct MajorityStats {
  int majority_dirty_pairs;
  std::vector<int> majority_dirty_candidates;
};
MajorityStats count_majority_stats(const Election& e);

}  // namespace kemeny

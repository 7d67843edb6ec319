#pragma once

#include "kemeny/core.hpp"
#include "kemeny/searchtree.hpp"

namespace kemeny {

// Largest candidate count the subset table supports; 2^25 entries of five
// bytes is the practical memory ceiling.
inline constexpr int dp_max_candidates = 25;

// Exact solver by dynamic programming over candidate subsets: the best
// ranking of S costs min over c in S of (votes preferring someone in S\{c}
// over c) + best ranking of S\{c}, with c placed first. O(2^m * m^2 + m^2 n).
SolveResult solve_dp(const Election& e);

// The full table: entry [mask] is the best ordering cost of that candidate
// subset counting only its internal pairs. Sized 2^m, so only sensible for
// small universes; guarded to m <= 20.
std::vector<Score> dp_restricted_scores(const Election& e);

}  // namespace kemeny

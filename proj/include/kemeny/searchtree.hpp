#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "kemeny/core.hpp"
#include "kemeny/dirtiness.hpp"
#include "kemeny/orderstore.hpp"

namespace kemeny {

enum class Algorithm { pairs, triples, sets, dp, brute, two_thirds };

std::string_view algorithm_name(Algorithm a);

struct SearchConfig {
  Algorithm algorithm = Algorithm::sets;
  int set_size = 4;               // branching set size for Algorithm::sets
  std::optional<Score> budget;    // decision bound k; unset explores freely
  bool collect_stats = true;
  bool prune = true;  // subscore-sorted branching with tail cuts; the
                      // differential tests flip this to check that pruning
                      // never changes scores
};

struct SearchStats {
  long long nodes = 0;
  int max_depth = 0;
  long long perms_pruned = 0;
};

struct SolveResult {
  Score score = 0;
  Vote consensus;
  Algorithm algorithm = Algorithm::sets;
  SearchStats stats;
};

// Fresh store with every unanimously ordered pair fixed; what remains
// ambiguous is exactly the dirty-pair set.
OrderStore prebranch(const Election& e, const PairTally& tally);

// The index-th ordering of the subset under lexicographic enumeration,
// 1-based. Throws std::out_of_range outside 1..|subset|!.
std::vector<int> perm_of(std::span<const int> subset, long long index);

// Commits the feasible ordering of the subset that minimizes the resulting
// store score; ties fall to the lowest permutation index. Throws
// std::logic_error if no ordering agrees with the store.
void best_perm(OrderStore& store, std::span<const int> subset);

// Decision solvers: a consensus of score <= budget, or nothing. Without a
// budget the first consensus found is returned.
std::optional<SolveResult> solve_pairs(const Election& e, const SearchConfig& cfg);
std::optional<SolveResult> solve_triples(const Election& e, const SearchConfig& cfg);
std::optional<SolveResult> solve_sets(const Election& e, const SearchConfig& cfg);

// Iterative deepening from the pairwise lower bound; stats accumulate over
// all budgets tried. Algorithm::dp and Algorithm::brute dispatch to the
// exact non-branching solvers.
SolveResult solve_optimal(const Election& e, Algorithm algorithm, int set_size = 4);

// Sum over pairs of the smaller orientation count; no ranking scores less.
Score pairwise_lower_bound(const PairTally& tally);

}  // namespace kemeny

#pragma once

#include <cstdint>
#include <string>

#include "kemeny/core.hpp"

namespace kemeny {

struct GenParams {
  int candidates = 0;       // m >= 2 (d must fit below)
  int votes = 0;            // n >= 1
  double swaps_mean = 0.0;  // expected number of swaps per vote, >= 0
  int swap_distance = 1;    // max reference-position distance, in [1, m-1]
  std::uint64_t seed = 0;

  void validate() const;  // throws std::invalid_argument
};

// Seeded random profile: candidates c0..c{m-1}, reference vote c0>c1>...;
// every vote starts from the reference and applies a Poisson(swaps_mean)
// number of swaps, each exchanging two candidates whose reference positions
// differ by at most swap_distance. Bit-reproducible for a given seed on any
// platform (mt19937_64 with rejection sampling).
Election generate(const GenParams& p);

struct PropertyReport {
  int votes = 0;
  int candidates = 0;
  long long total_pairs = 0;
  long long dirty_pairs = 0;
  long long majority_dirty = 0;
  long long majority_nondirty = 0;
  Score min_score = 0;  // sum of smaller orientation counts over all pairs
  Score max_score = 0;  // sum of larger orientation counts
  int max_range = 0;    // max over candidates of (max position - min position)
  long long kt_sum = 0;        // summed kt distance over unordered vote pairs
  long long vote_pairs = 0;    // n*(n-1)/2
  int reduced_candidates = 0;  // removed by exhaustive reduction
};

PropertyReport analyze(const Election& e);

// numerator/denominator rendered with exactly two decimals, round half up;
// "0.00" when the denominator is zero. Integer arithmetic throughout.
std::string fixed2(long long numerator, long long denominator);

inline std::string percent_string(long long count, long long total) {
  return fixed2(100 * count, total);
}

}  // namespace kemeny

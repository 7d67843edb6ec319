#include "kemeny/dp.hpp"

#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace kemeny {

namespace {

// Fills best[mask] with the cheapest internal ordering cost of the subset
// and first_choice[mask] with the candidate placed first to reach it; ties
// fall to the lowest candidate index.
void fill_tables(const Election& e, const PairTally& tally,
                 std::vector<std::uint32_t>& best,
                 std::vector<std::uint8_t>& first_choice) {
  const int m = e.num_candidates();
  const std::uint32_t full = (m == 0) ? 0 : (std::uint32_t{1} << m) - 1;
  best.assign(static_cast<std::size_t>(full) + 1, 0);
  first_choice.assign(static_cast<std::size_t>(full) + 1, 0);

  for (std::uint32_t set = 1; set <= full; ++set) {
    std::uint32_t best_cost = std::numeric_limits<std::uint32_t>::max();
    int best_c = -1;
    for (std::uint32_t rest = set; rest;) {
      const int c = std::countr_zero(rest);
      rest &= rest - 1;
      const std::uint32_t others = set & ~(std::uint32_t{1} << c);
      std::uint32_t cost = best[others];
      for (std::uint32_t bs = others; bs;) {
        const int b = std::countr_zero(bs);
        bs &= bs - 1;
        cost += static_cast<std::uint32_t>(tally.count(b, c));
      }
      if (cost < best_cost) {
        best_cost = cost;
        best_c = c;
      }
    }
    best[set] = best_cost;
    first_choice[set] = static_cast<std::uint8_t>(best_c);
  }
}

void check_limits(const Election& e, int cap, const char* what) {
  if (e.num_candidates() > cap)
    throw std::invalid_argument(std::string(what) + " is limited to " +
                                std::to_string(cap) + " candidates");
  const int m = e.num_candidates();
  const Score worst_possible =
      static_cast<Score>(e.num_votes()) * m * (m - 1) / 2;
  if (worst_possible > std::numeric_limits<std::uint32_t>::max())
    throw std::invalid_argument("vote count overflows the subset score table");
}

}  // namespace

SolveResult solve_dp(const Election& e) {
  check_limits(e, dp_max_candidates, "solve_dp");
  const int m = e.num_candidates();
  const PairTally tally = pairwise_tally(e);
  std::vector<std::uint32_t> best;
  std::vector<std::uint8_t> first_choice;
  fill_tables(e, tally, best, first_choice);

  const std::uint32_t full = (m == 0) ? 0 : (std::uint32_t{1} << m) - 1;
  std::vector<int> order;
  order.reserve(m);
  for (std::uint32_t set = full; set;) {
    const int c = first_choice[set];
    order.push_back(c);
    set &= ~(std::uint32_t{1} << c);
  }
  return SolveResult{static_cast<Score>(best[full]), Vote(std::move(order)),
                     Algorithm::dp, {}};
}

std::vector<Score> dp_restricted_scores(const Election& e) {
  check_limits(e, 20, "dp_restricted_scores");
  const PairTally tally = pairwise_tally(e);
  std::vector<std::uint32_t> best;
  std::vector<std::uint8_t> first_choice;
  fill_tables(e, tally, best, first_choice);
  return std::vector<Score>(best.begin(), best.end());
}

}  // namespace kemeny

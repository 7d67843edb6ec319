#include "kemeny/oracle.hpp"

#include <limits>
#include <stdexcept>

namespace kemeny {

namespace {

struct Enumerator {
  const PairTally& tally;
  int m;
  std::optional<int> cap;
  std::vector<int> prefix;
  std::vector<char> used;
  Score best = std::numeric_limits<Score>::max();
  std::vector<Vote> optima;

  // Extends the prefix in ascending candidate order; `partial` already
  // counts every disagreement involving two placed candidates plus the
  // placed-vs-unplaced disagreements of the placed ones.
  void walk(Score partial) {
    if (static_cast<int>(prefix.size()) == m) {
      if (partial < best) {
        best = partial;
        optima.clear();
      }
      if (partial == best &&
          (!cap || static_cast<int>(optima.size()) < *cap))
        optima.emplace_back(prefix);
      return;
    }
    for (int c = 0; c < m; ++c) {
      if (used[c]) continue;
      Score add = 0;
      for (int b = 0; b < m; ++b)
        if (!used[b] && b != c) add += tally.count(b, c);
      if (partial + add > best) continue;
      used[c] = 1;
      prefix.push_back(c);
      walk(partial + add);
      prefix.pop_back();
      used[c] = 0;
    }
  }
};

}  // namespace

OracleResult brute_force(const Election& e, std::optional<int> cap) {
  const int m = e.num_candidates();
  if (m > 10)
    throw std::invalid_argument("brute_force is limited to 10 candidates");
  PairTally tally = pairwise_tally(e);
  Enumerator en{tally,
                m,
                cap,
                {},
                std::vector<char>(static_cast<std::size_t>(m), 0),
                std::numeric_limits<Score>::max(),
                {}};
  en.walk(0);
  return {en.best, std::move(en.optima)};
}

}  // namespace kemeny

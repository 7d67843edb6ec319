#include "kemeny/instances.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "kemeny/dirtiness.hpp"
#include "kemeny/reduce.hpp"

namespace kemeny {

void GenParams::validate() const {
  if (candidates < 1) throw std::invalid_argument("need at least one candidate");
  if (votes < 1) throw std::invalid_argument("need at least one vote");
  if (!(swaps_mean >= 0.0) || !std::isfinite(swaps_mean))
    throw std::invalid_argument("swap mean must be a finite non-negative number");
  if (swap_distance < 1 || swap_distance > candidates - 1)
    throw std::invalid_argument("swap distance must be in [1, candidates-1]");
}

namespace {

// mt19937_64 output is pinned by the standard; the samplers below avoid the
// library distributions, whose streams vary across implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t uniform_below(std::uint64_t bound) {
    const std::uint64_t reject_below = (-bound) % bound;
    std::uint64_t r;
    do {
      r = engine_();
    } while (r < reject_below);
    return r % bound;
  }

  double unit() {  // [0, 1), 53 random bits
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Knuth's product method, splitting large means to dodge underflow.
  long long poisson(double mean) {
    long long total = 0;
    while (mean > 200.0) {
      total += poisson_small(200.0);
      mean -= 200.0;
    }
    return total + poisson_small(mean);
  }

 private:
  long long poisson_small(double mean) {
    const double limit = std::exp(-mean);
    long long k = 0;
    double product = 1.0;
    do {
      ++k;
      product *= unit();
    } while (product > limit);
    return k - 1;
  }

  std::mt19937_64 engine_;
};

}  // namespace

Election generate(const GenParams& p) {
  p.validate();
  const int m = p.candidates;
  const int d = p.swap_distance;
  // Pairs (i, j), i < j <= i + d, in lexicographic order; with the identity
  // reference, candidate ids are reference positions.
  std::vector<std::pair<int, int>> swappable;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m && j <= i + d; ++j) swappable.push_back({i, j});

  Rng rng(p.seed);
  std::vector<Candidate> candidates;
  candidates.reserve(m);
  for (int c = 0; c < m; ++c) candidates.push_back({c, "c" + std::to_string(c)});

  std::vector<Vote> votes;
  votes.reserve(p.votes);
  for (int v = 0; v < p.votes; ++v) {
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> pos(m);
    std::iota(pos.begin(), pos.end(), 0);
    const long long swaps = rng.poisson(p.swaps_mean);
    for (long long s = 0; s < swaps; ++s) {
      auto [a, b] = swappable[rng.uniform_below(swappable.size())];
      std::swap(order[pos[a]], order[pos[b]]);
      std::swap(pos[a], pos[b]);
    }
    votes.emplace_back(std::move(order));
  }
  return Election(std::move(candidates), std::move(votes));
}

PropertyReport analyze(const Election& e) {
  PropertyReport r;
  const int m = e.num_candidates();
  const int n = e.num_votes();
  r.votes = n;
  r.candidates = m;
  r.total_pairs = static_cast<long long>(m) * (m - 1) / 2;

  PairTally tally = pairwise_tally(e);
  r.dirty_pairs = static_cast<long long>(dirty_pairs(tally).size());
  r.majority_dirty = static_cast<long long>(majority_dirty_pairs(tally).size());
  r.majority_nondirty = r.total_pairs - r.majority_dirty;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      r.min_score += std::min(tally.count(i, j), tally.count(j, i));
      r.max_score += std::max(tally.count(i, j), tally.count(j, i));
    }
  for (int c = 0; c < m; ++c) {
    int lo = e.position_in(0, c), hi = lo;
    for (int v = 1; v < n; ++v) {
      lo = std::min(lo, e.position_in(v, c));
      hi = std::max(hi, e.position_in(v, c));
    }
    r.max_range = std::max(r.max_range, hi - lo);
  }
  r.vote_pairs = static_cast<long long>(n) * (n - 1) / 2;
  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w) r.kt_sum += kt_distance(e.vote(v), e.vote(w));
  r.reduced_candidates =
      static_cast<int>(condorcet_reduce(e).removed.size());
  return r;
}

std::string fixed2(long long numerator, long long denominator) {
  if (denominator == 0) return "0.00";
  const long long scaled = (numerator * 200 + denominator) / (2 * denominator);
  std::string out = std::to_string(scaled / 100);
  out += '.';
  out += static_cast<char>('0' + (scaled / 10) % 10);
  out += static_cast<char>('0' + scaled % 10);
  return out;
}

}  // namespace kemeny

#include "kemeny/reduce.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "kemeny/dirtiness.hpp"

namespace kemeny {

namespace {

Election drop_candidate(const Election& e, int c) {
  std::vector<Candidate> candidates;
  candidates.reserve(e.num_candidates() - 1);
  for (int i = 0; i < e.num_candidates(); ++i)
    if (i != c)
      candidates.push_back(
          {static_cast<int>(candidates.size()), e.name(i)});
  std::vector<Vote> votes;
  votes.reserve(e.num_votes());
  for (const Vote& v : e.votes()) {
    std::vector<int> order;
    order.reserve(v.size() - 1);
    for (int p = 0; p < v.size(); ++p)
      if (v.at(p) != c) order.push_back(v.at(p) < c ? v.at(p) : v.at(p) - 1);
    votes.emplace_back(std::move(order));
  }
  return Election(std::move(candidates), std::move(votes));
}

std::vector<char> majority_dirty_mask(const PairTally& tally) {
  std::vector<char> mask(tally.num_candidates(), 0);
  for (auto [i, j] : majority_dirty_pairs(tally)) {
    mask[i] = 1;
    mask[j] = 1;
  }
  return mask;
}

}  // namespace

ReductionTrace condorcet_reduce(const Election& e) {
  std::vector<Removal> removed;
  std::vector<int> orig(e.num_candidates());
  std::iota(orig.begin(), orig.end(), 0);
  Election current = e;
  Score total = 0;

  while (current.num_candidates() > 0) {
    const int m = current.num_candidates();
    const int n = current.num_votes();
    PairTally tally = pairwise_tally(current);
    std::vector<char> dirty = majority_dirty_mask(tally);
    int pick = -1;
    Placement placement = Placement::front;
    for (int c = 0; c < m && pick < 0; ++c) {
      if (dirty[c]) continue;
      bool beats_all = true, beaten_by_all = true;
      for (int o = 0; o < m; ++o) {
        if (o == c) continue;
        if (2 * tally.count(c, o) <= n) beats_all = false;
        if (2 * tally.count(o, c) <= n) beaten_by_all = false;
      }
      if (beats_all) {
        pick = c;
        placement = Placement::front;
      } else if (beaten_by_all) {
        pick = c;
        placement = Placement::back;
      }
    }
    if (pick < 0) break;
    Score offset = 0;
    for (int o = 0; o < m; ++o) {
      if (o == pick) continue;
      offset += placement == Placement::front ? tally.count(o, pick)
                                              : tally.count(pick, o);
    }
    removed.push_back({orig[pick], current.name(pick), placement, offset});
    total += offset;
    orig.erase(orig.begin() + pick);
    current = drop_candidate(current, pick);
  }
  return ReductionTrace{std::move(removed), std::move(orig),
                        std::move(current), total};
}

Vote recompose(const ReductionTrace& trace, const Vote& residual_consensus) {
  std::vector<int> order;
  order.reserve(trace.residual_original.size() + trace.removed.size());
  for (const Removal& r : trace.removed)
    if (r.placement == Placement::front) order.push_back(r.original_index);
  for (int p = 0; p < residual_consensus.size(); ++p)
    order.push_back(trace.residual_original[residual_consensus.at(p)]);
  for (auto it = trace.removed.rbegin(); it != trace.removed.rend(); ++it)
    if (it->placement == Placement::back) order.push_back(it->original_index);
  return Vote(std::move(order));
}

std::optional<SolveResult> solve_two_thirds_special_case(const Election& e) {
  PairTally tally = pairwise_tally(e);
  if (!majority_dirty_pairs(tally).empty()) return std::nullopt;
  OrderedPairSet rel = two_thirds_relation(tally);

  const int m = e.num_candidates();
  std::vector<int> indegree(m, 0);
  for (auto [a, b] : rel) ++indegree[b];
  std::vector<char> placed(m, 0);
  std::vector<int> order;
  order.reserve(m);
  for (int round = 0; round < m; ++round) {
    int next = -1;
    for (int c = 0; c < m; ++c)
      if (!placed[c] && indegree[c] == 0) {
        next = c;
        break;
      }
    if (next < 0)
      throw std::logic_error(
          "cyclic 2/3 relation on a profile without majority-dirty pairs");
    placed[next] = 1;
    order.push_back(next);
    for (auto [a, b] : rel)
      if (a == next) --indegree[b];
  }
  std::vector<int> pos(m);
  for (int p = 0; p < m; ++p) pos[order[p]] = p;
  for (auto [a, b] : rel)
    if (pos[a] > pos[b])
      throw std::logic_error(
          "2/3 relation is not a linear order despite no majority-dirty pairs");

  Vote consensus(std::move(order));
  Score score = score_of(consensus, e);
  return SolveResult{score, std::move(consensus), Algorithm::two_thirds, {}};
}

MajorityStats count_majority_stats(const Election& e) {
  PairTally tally = pairwise_tally(e);
  std::vector<std::pair<int, int>> pairs = majority_dirty_pairs(tally);
  std::vector<char> incident(e.num_candidates(), 0);
  for (auto [i, j] : pairs) {
    incident[i] = 1;
    incident[j] = 1;
  }
  MajorityStats stats{static_cast<int>(pairs.size()), {}};
  for (int c = 0; c < e.num_candidates(); ++c)
    if (incident[c]) stats.majority_dirty_candidates.push_back(c);
  return stats;
}

}  // namespace kemeny

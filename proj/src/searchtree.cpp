#include "kemeny/searchtree.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <map>
#include <stdexcept>

#include "kemeny/dp.hpp"
#include "kemeny/oracle.hpp"

namespace kemeny {

std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::pairs: return "pairs";
    case Algorithm::triples: return "triples";
    case Algorithm::sets: return "sets";
    case Algorithm::dp: return "dp";
    case Algorithm::brute: return "brute";
    case Algorithm::two_thirds: return "two_thirds";
  }
  return "unknown";
}

OrderStore prebranch(const Election& e, const PairTally& tally) {
  OrderStore store(e, tally);
  const int m = e.num_candidates();
  const int n = e.num_votes();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      int pair[2] = {i, j};
      if (tally.count(i, j) == n) {
        [[maybe_unused]] bool ok = store.memorize(pair);
        assert(ok);
      } else if (tally.count(j, i) == n) {
        std::swap(pair[0], pair[1]);
        [[maybe_unused]] bool ok = store.memorize(pair);
        assert(ok);
      }
    }
  return store;
}

std::vector<int> perm_of(std::span<const int> subset, long long index) {
  std::vector<int> pool(subset.begin(), subset.end());
  std::sort(pool.begin(), pool.end());
  long long total = 1;
  for (std::size_t i = 2; i <= pool.size(); ++i) total *= static_cast<long long>(i);
  if (index < 1 || index > total)
    throw std::out_of_range("permutation index out of range");
  long long rest = index - 1;
  long long block = total;
  std::vector<int> out;
  out.reserve(pool.size());
  for (std::size_t left = pool.size(); left > 0; --left) {
    block /= static_cast<long long>(left);
    out.push_back(pool[rest / block]);
    pool.erase(pool.begin() + rest / block);
    rest %= block;
  }
  return out;
}

void best_perm(OrderStore& store, std::span<const int> subset) {
  if (subset.size() < 2)
    throw std::invalid_argument("best_perm needs at least two candidates");
  std::vector<int> order(subset.begin(), subset.end());
  std::sort(order.begin(), order.end());
  std::optional<OrderStore> best;
  Score best_score = std::numeric_limits<Score>::max();
  do {
    OrderStore trial = store.clone();
    if (trial.memorize(order) && trial.score() < best_score) {
      best_score = trial.score();
      best = std::move(trial);
    }
  } while (std::next_permutation(order.begin(), order.end()));
  if (!best)
    throw std::logic_error("no ordering of the subset agrees with the store");
  store = std::move(*best);
}

Score pairwise_lower_bound(const PairTally& tally) {
  Score bound = 0;
  const int m = tally.num_candidates();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      bound += std::min(tally.count(i, j), tally.count(j, i));
  return bound;
}

namespace {

struct PermEntry {
  std::vector<int> order;
  Score subscore;  // disagreements of the full relation set of `order`
};

using PermTable = std::vector<PermEntry>;

PermTable build_perm_table(const std::vector<int>& subset, const PairTally& tally,
                           bool sort_by_subscore) {
  std::vector<int> order = subset;  // arrives sorted
  PermTable table;
  do {
    Score sub = 0;
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t j = i + 1; j < order.size(); ++j)
        sub += tally.count(order[j], order[i]);
    table.push_back({order, sub});
  } while (std::next_permutation(order.begin(), order.end()));
  if (sort_by_subscore)
    std::stable_sort(table.begin(), table.end(),
                     [](const PermEntry& a, const PermEntry& b) {
                       return a.subscore < b.subscore;
                     });
  return table;
}

struct Frame {
  OrderStore store;
  const PermTable* perms;
  std::size_t cursor = 0;
  // Disagreements already banked for subset pairs the store had fixed when
  // this frame was opened. Every agreeing permutation orients those pairs
  // identically, so its table subscore overstates the score growth by
  // exactly this amount; the tail cut subtracts it to stay exact.
  Score banked = 0;
  int depth = 0;
};

class TreeSearch {
 public:
  TreeSearch(const Election& e, const PairTally& tally, Algorithm alg, int s,
             Score budget, bool prune)
      : e_(e),
        tally_(tally),
        dirty_(dirty_graph(tally)),
        alg_(alg),
        s_(s),
        budget_(budget),
        prune_(prune) {}

  SearchStats stats;

  std::optional<SolveResult> run() {
    std::optional<SolveResult> found;
    if (enter(prebranch(e_, tally_), 0, found) != Outcome::pushed)
      return found;
    while (!stack_.empty()) {
      std::size_t top = stack_.size() - 1;
      const PermTable& perms = *stack_[top].perms;
      if (stack_[top].cursor == perms.size()) {
        stack_.pop_back();
        continue;
      }
      if (prune_) {
        const PermEntry& next = perms[stack_[top].cursor];
        if (stack_[top].store.score() + next.subscore - stack_[top].banked >
            budget_) {
          stats.perms_pruned +=
              static_cast<long long>(perms.size() - stack_[top].cursor);
          stack_.pop_back();
          continue;
        }
      }
      const PermEntry& entry = perms[stack_[top].cursor++];
      OrderStore child = stack_[top].store.clone();
      if (!child.memorize(entry.order)) {
        ++stats.perms_pruned;
        continue;
      }
      if (enter(std::move(child), stack_[top].depth + 1, found) ==
          Outcome::success)
        return found;
    }
    return std::nullopt;
  }

 private:
  enum class Outcome { failed, success, pushed };

  DirtyGraph ambiguous_graph(const OrderStore& store) const {
    std::vector<Bitset> adj;
    adj.reserve(e_.num_candidates());
    for (int v = 0; v < e_.num_candidates(); ++v) {
      Bitset row = dirty_.neighbors(v);
      row.subtract(store.successors(v));
      row.subtract(store.predecessors(v));
      adj.push_back(std::move(row));
    }
    return DirtyGraph(std::move(adj));
  }

  std::optional<std::vector<int>> pick_branch_set(const OrderStore& store) const {
    DirtyGraph g = ambiguous_graph(store);
    if (alg_ == Algorithm::pairs) {
      for (int i = 0; i < g.num_vertices(); ++i) {
        int j = g.neighbors(i).find_next(i);
        if (j >= 0) return std::vector<int>{i, j};
      }
      return std::nullopt;
    }
    return find_dirty_s_set(g, s_);
  }

  Outcome enter(OrderStore store, int depth, std::optional<SolveResult>& found) {
    ++stats.nodes;
    stats.max_depth = std::max(stats.max_depth, depth);
    if (store.score() > budget_) return Outcome::failed;
    std::optional<std::vector<int>> branch_set = pick_branch_set(store);
    if (!branch_set) {
      if (alg_ != Algorithm::pairs)
        for (const std::vector<int>& comp :
             maximal_dirty_components(ambiguous_graph(store)))
          best_perm(store, comp);
      if (store.score() > budget_) return Outcome::failed;
      std::optional<Vote> list = store.get_list();
      assert(list);
      found = SolveResult{store.score(), std::move(*list), alg_, {}};
      return Outcome::success;
    }
    auto [it, fresh] = perm_cache_.try_emplace(*branch_set);
    if (fresh) it->second = build_perm_table(*branch_set, tally_, prune_);
    Score banked = 0;
    for (std::size_t i = 0; i < branch_set->size(); ++i)
      for (std::size_t j = i + 1; j < branch_set->size(); ++j) {
        int x = (*branch_set)[i], y = (*branch_set)[j];
        if (store.has(x, y))
          banked += tally_.count(y, x);
        else if (store.has(y, x))
          banked += tally_.count(x, y);
      }
    stack_.push_back(Frame{std::move(store), &it->second, 0, banked, depth});
    return Outcome::pushed;
  }

  const Election& e_;
  const PairTally& tally_;
  DirtyGraph dirty_;
  Algorithm alg_;
  int s_;
  Score budget_;
  bool prune_;
  std::vector<Frame> stack_;
  std::map<std::vector<int>, PermTable> perm_cache_;
};

// One- and two-vote profiles have a vote as consensus; no branching needed.
std::optional<SolveResult> closed_form(const Election& e, Algorithm alg,
                                       std::optional<Score> budget) {
  Score score =
      e.num_votes() == 2 ? kt_distance(e.vote(0), e.vote(1)) : Score{0};
  if (budget && score > *budget) return std::nullopt;
  return SolveResult{score, e.vote(0), alg, {}};
}

std::optional<SolveResult> run_search(const Election& e, const SearchConfig& cfg,
                                      Algorithm alg, int s, SearchStats& stats) {
  if (e.num_votes() <= 2) return closed_form(e, alg, cfg.budget);
  PairTally tally = pairwise_tally(e);
  TreeSearch search(e, tally, alg, s,
                    cfg.budget.value_or(std::numeric_limits<Score>::max()),
                    cfg.prune);
  std::optional<SolveResult> result = search.run();
  stats = search.stats;
  if (result && cfg.collect_stats) result->stats = stats;
  return result;
}

}  // namespace

std::optional<SolveResult> solve_pairs(const Election& e, const SearchConfig& cfg) {
  SearchStats stats;
  return run_search(e, cfg, Algorithm::pairs, 2, stats);
}

std::optional<SolveResult> solve_triples(const Election& e, const SearchConfig& cfg) {
  SearchStats stats;
  return run_search(e, cfg, Algorithm::triples, 3, stats);
}

std::optional<SolveResult> solve_sets(const Election& e, const SearchConfig& cfg) {
  if (cfg.set_size < 3)
    throw std::invalid_argument("solve_sets needs set_size >= 3");
  SearchStats stats;
  return run_search(e, cfg, Algorithm::sets, cfg.set_size, stats);
}

SolveResult solve_optimal(const Election& e, Algorithm algorithm, int set_size) {
  if (algorithm == Algorithm::dp) return solve_dp(e);
  if (algorithm == Algorithm::brute) {
    OracleResult oracle = brute_force(e, 1);
    return SolveResult{oracle.score, oracle.all_optimal.at(0), Algorithm::brute, {}};
  }
  if (algorithm == Algorithm::two_thirds)
    throw std::invalid_argument("two_thirds is not a search algorithm");
  if (algorithm == Algorithm::sets && set_size < 3)
    throw std::invalid_argument("solve_sets needs set_size >= 3");
  if (e.num_votes() <= 2) return *closed_form(e, algorithm, std::nullopt);

  const int s = algorithm == Algorithm::pairs    ? 2
                : algorithm == Algorithm::triples ? 3
                                                  : set_size;
  SearchStats total;
  for (Score k = pairwise_lower_bound(pairwise_tally(e));; ++k) {
    SearchConfig cfg{algorithm, set_size, k, true, true};
    SearchStats round;
    std::optional<SolveResult> result = run_search(e, cfg, algorithm, s, round);
    total.nodes += round.nodes;
    total.perms_pruned += round.perms_pruned;
    total.max_depth = std::max(total.max_depth, round.max_depth);
    if (result) {
      result->stats = total;
      return *result;
    }
  }
}

}  // namespace kemeny

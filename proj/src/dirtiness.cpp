#include "kemeny/dirtiness.hpp"

#include <algorithm>
#include <stdexcept>

namespace kemeny {

DirtyGraph::DirtyGraph(int num_vertices,
                       const std::vector<std::pair<int, int>>& edges)
    : adj_(num_vertices, Bitset(num_vertices)) {
  for (auto [a, b] : edges) {
    adj_[a].set(b);
    adj_[b].set(a);
  }
}

DirtyGraph::DirtyGraph(std::vector<Bitset> adjacency) : adj_(std::move(adjacency)) {}

std::vector<std::pair<int, int>> dirty_pairs(const PairTally& tally) {
  std::vector<std::pair<int, int>> out;
  const int m = tally.num_candidates();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (tally.count(i, j) >= 1 && tally.count(j, i) >= 1) out.push_back({i, j});
  return out;
}

DirtyGraph dirty_graph(const PairTally& tally) {
  return DirtyGraph(tally.num_candidates(), dirty_pairs(tally));
}

bool is_dirty_set(std::span<const int> subset, const DirtyGraph& g) {
  if (subset.empty()) return false;
  Bitset members(g.num_vertices());
  for (int v : subset) members.set(v);
  Bitset reached(g.num_vertices());
  reached.set(subset[0]);
  std::vector<int> queue{subset[0]};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Bitset next = g.neighbors(queue[head]);
    next &= members;
    next.subtract(reached);
    for (int v = next.find_first(); v >= 0; v = next.find_next(v)) {
      reached.set(v);
      queue.push_back(v);
    }
  }
  return reached.count() == static_cast<int>(subset.size());
}

namespace {

// Component of v in ascending-index BFS order.
std::vector<int> bfs_component(const DirtyGraph& g, int v, Bitset& seen) {
  std::vector<int> order{v};
  seen.set(v);
  for (std::size_t head = 0; head < order.size(); ++head) {
    Bitset next = g.neighbors(order[head]);
    next.subtract(seen);
    for (int w = next.find_first(); w >= 0; w = next.find_next(w)) {
      seen.set(w);
      order.push_back(w);
    }
  }
  return order;
}

}  // namespace

std::optional<std::vector<int>> find_dirty_s_set(const DirtyGraph& g, int s) {
  if (s < 2) throw std::invalid_argument("dirty s-set needs s >= 2");
  Bitset seen(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (seen.test(v)) continue;
    std::vector<int> comp = bfs_component(g, v, seen);
    if (static_cast<int>(comp.size()) >= s) {
      comp.resize(s);
      std::sort(comp.begin(), comp.end());
      return comp;
    }
  }
  return std::nullopt;
}

std::vector<std::vector<int>> maximal_dirty_components(const DirtyGraph& g) {
  std::vector<std::vector<int>> out;
  Bitset seen(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (seen.test(v)) continue;
    std::vector<int> comp = bfs_component(g, v, seen);
    if (comp.size() >= 2) {
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
  }
  return out;  // ordered by smallest member: BFS roots scan ascending
}

std::vector<std::pair<int, int>> majority_dirty_pairs(const PairTally& tally) {
  std::vector<std::pair<int, int>> out;
  const int m = tally.num_candidates();
  const int n2 = 2 * tally.num_votes();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (3 * tally.count(i, j) <= n2 && 3 * tally.count(j, i) <= n2)
        out.push_back({i, j});
  return out;
}

OrderedPairSet two_thirds_relation(const PairTally& tally) {
  OrderedPairSet rel;
  const int m = tally.num_candidates();
  const int n2 = 2 * tally.num_votes();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (3 * tally.count(i, j) > n2)
        rel.insert(i, j);
      else if (3 * tally.count(j, i) > n2)
        rel.insert(j, i);
    }
  return rel;
}

int majority_nondirty_distance(int c1, int c2, const OrderedPairSet& rel,
                               std::span<const int> majority_nondirty) {
  int above, below;
  if (rel.contains(c1, c2)) {
    above = c1, below = c2;
  } else if (rel.contains(c2, c1)) {
    above = c2, below = c1;
  } else {
    throw std::invalid_argument("pair not oriented in the 2/3 relation");
  }
  int between = 0;
  for (int b : majority_nondirty)
    if (b != above && b != below && rel.contains(above, b) && rel.contains(b, below))
      ++between;
  return between;
}

RelationGraph relation_graph(const Election& e, std::span<const int> subset) {
  RelationGraph g;
  g.vertices.assign(subset.begin(), subset.end());
  std::sort(g.vertices.begin(), g.vertices.end());
  const int n = e.num_votes();
  auto unanimous = [&](int x, int y) {
    for (int v = 0; v < n; ++v)
      if (e.position_in(v, x) > e.position_in(v, y)) return false;
    return true;
  };
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
      int x = g.vertices[i], y = g.vertices[j];
      if (unanimous(x, y))
        g.arcs.insert(x, y);
      else if (unanimous(y, x))
        g.arcs.insert(y, x);
    }
  if (!is_consistent(g.arcs))
    throw std::logic_error("relation graph has a cycle");
  for (auto [x, y] : g.arcs)
    for (auto [y2, z] : g.arcs)
      if (y == y2 && x != z && !g.arcs.contains(x, z))
        throw std::logic_error("relation graph has an induced two-arc path");
  return g;
}

std::optional<int> condorcet_winner(const PairTally& tally) {
  const int m = tally.num_candidates();
  const int n = tally.num_votes();
  for (int c = 0; c < m; ++c) {
    bool wins_all = true;
    for (int o = 0; o < m && wins_all; ++o)
      if (o != c && 2 * tally.count(c, o) <= n) wins_all = false;
    if (wins_all) return c;
  }
  return std::nullopt;
}

}  // namespace kemeny

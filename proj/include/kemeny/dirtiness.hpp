#pragma once

#include <optional>
#include <span>
#include <vector>

#include "kemeny/bitset.hpp"
#include "kemeny/core.hpp"

namespace kemeny {

// Undirected graph on candidate indices whose edges are the dirty pairs:
// pairs ordered both ways somewhere in the profile.
class DirtyGraph {
 public:
  DirtyGraph(int num_vertices, const std::vector<std::pair<int, int>>& edges);
  explicit DirtyGraph(std::vector<Bitset> adjacency);

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  bool has_edge(int a, int b) const { return adj_[a].test(b); }
  const Bitset& neighbors(int v) const { return adj_[v]; }

 private:
  std::vector<Bitset> adj_;
};

// Unordered dirty pairs (i < j), lexicographically sorted.
std::vector<std::pair<int, int>> dirty_pairs(const PairTally& tally);

DirtyGraph dirty_graph(const PairTally& tally);

// A dirty set must induce a connected subgraph of the dirty graph.
bool is_dirty_set(std::span<const int> subset, const DirtyGraph& g);

// Deterministic pick of a connected s-subset, if any component has >= s
// vertices: breadth-first from the lowest-index vertex of the first such
// component, neighbors visited in ascending index order. Result is sorted.
std::optional<std::vector<int>> find_dirty_s_set(const DirtyGraph& g, int s);

// Connected components with at least two vertices; each sorted, the list
// ordered by smallest member.
std::vector<std::vector<int>> maximal_dirty_components(const DirtyGraph& g);

// Pairs where neither orientation reaches a 2/3 majority of the votes
// (strict: 3 * count > 2 * n), i < j, sorted.
std::vector<std::pair<int, int>> majority_dirty_pairs(const PairTally& tally);

// Orientations backed by a strict 2/3 majority.
OrderedPairSet two_thirds_relation(const PairTally& tally);

// Number of majority-non-dirty candidates sitting strictly between c1 and
// c2 in the 2/3 order; symmetric in c1/c2. Throws std::invalid_argument
// when {c1,c2} is not oriented in rel.
int majority_nondirty_distance(int c1, int c2, const OrderedPairSet& rel,
                               std::span<const int> majority_nondirty);

// Directed graph on a candidate subset whose arcs are the unanimous orders.
// Construction validates that the arcs are acyclic and transitively closed
// (no induced two-arc path without its shortcut); a violation throws
// std::logic_error since it cannot arise from a valid election.
struct RelationGraph {
  std::vector<int> vertices;
  OrderedPairSet arcs;
};
RelationGraph relation_graph(const Election& e, std::span<const int> subset);

// Candidate beating every other in more than half of the votes, if any.
std::optional<int> condorcet_winner(const PairTally& tally);

}  // namespace kemeny

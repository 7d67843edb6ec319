#pragma once

#include <optional>
#include <span>
#include <vector>

#include "kemeny/bitset.hpp"
#include "kemeny/core.hpp"

namespace kemeny {

// A consistent store of fixed relative orders, kept transitively closed at
// all times. Closure makes the agreement check a direct lookup: an
// orientation conflicts with the store exactly when its reverse is already
// reachable, i.e. stored. The running score (one disagreeing vote per fixed
// pair per vote) is maintained incrementally from the tally.
//
// The election and tally are borrowed and must outlive the store; copies
// share them, which keeps cloning cheap enough for branching.
class OrderStore {
 public:
  OrderStore(const Election& e, const PairTally& tally);

  // Fixes the relative orders of l (an ordering of a candidate subset) plus
  // everything they force transitively. Returns false and leaves the store
  // untouched when any pair of l contradicts a stored pair.
  bool memorize(std::span<const int> l);

  // Unordered pairs with no stored orientation, (i, j) with i < j, sorted.
  std::vector<std::pair<int, int>> ambiguous() const;
  long long ambiguous_count() const {
    return static_cast<long long>(m_) * (m_ - 1) / 2 - fixed_count_;
  }

  // The unique ranking agreeing with the store once nothing is ambiguous.
  std::optional<Vote> get_list() const;

  // Votes disagreeing with some stored pair, summed with multiplicity.
  Score score() const { return score_; }

  bool has(int above, int below) const { return succ_[above].test(below); }
  bool fixed(int a, int b) const { return has(a, b) || has(b, a); }
  const Bitset& successors(int c) const { return succ_[c]; }
  const Bitset& predecessors(int c) const { return pred_[c]; }
  int universe() const { return m_; }
  long long fixed_count() const { return fixed_count_; }

  OrderStore clone() const { return *this; }

 private:
  void insert_closed(int above, int below);

  const Election* election_;
  const PairTally* tally_;
  int m_;
  long long fixed_count_ = 0;
  Score score_ = 0;
  std::vector<Bitset> succ_, pred_;
};

}  // namespace kemeny

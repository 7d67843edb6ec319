#include "kemeny/orderstore.hpp"

#include <cassert>
#include <stdexcept>

namespace kemeny {

OrderStore::OrderStore(const Election& e, const PairTally& tally)
    : election_(&e),
      tally_(&tally),
      m_(e.num_candidates()),
      succ_(m_, Bitset(m_)),
      pred_(m_, Bitset(m_)) {}

bool OrderStore::memorize(std::span<const int> l) {
  std::vector<char> seen(m_, 0);
  for (int c : l) {
    if (c < 0 || c >= m_)
      throw std::out_of_range("memorize: candidate outside the universe");
    if (seen[c]) throw std::invalid_argument("memorize: duplicate candidate");
    seen[c] = 1;
  }
  // The store is transitively closed, so a conflict between the closure of
  // the union and the store always surfaces as a directly reversed pair of
  // l; checking all pairs up front therefore suffices, and insertion below
  // can no longer fail.
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = i + 1; j < l.size(); ++j)
      if (has(l[j], l[i])) return false;
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = i + 1; j < l.size(); ++j) insert_closed(l[i], l[j]);
  return true;
}

void OrderStore::insert_closed(int above, int below) {
  if (has(above, below)) return;
  assert(!has(below, above));
  // New reachability: everything at or above `above` precedes everything at
  // or below `below`.
  Bitset sources = pred_[above];
  sources.set(above);
  Bitset sinks = succ_[below];
  sinks.set(below);
  for (int a = sources.find_first(); a >= 0; a = sources.find_next(a)) {
    Bitset fresh = sinks;
    fresh.subtract(succ_[a]);
    for (int b = fresh.find_first(); b >= 0; b = fresh.find_next(b)) {
      assert(a != b);
      succ_[a].set(b);
      pred_[b].set(a);
      score_ += tally_->count(b, a);
      ++fixed_count_;
    }
  }
}

std::vector<std::pair<int, int>> OrderStore::ambiguous() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < m_; ++i)
    for (int j = i + 1; j < m_; ++j)
      if (!fixed(i, j)) out.push_back({i, j});
  return out;
}

std::optional<Vote> OrderStore::get_list() const {
  if (ambiguous_count() != 0) return std::nullopt;
  std::vector<int> order(m_);
  for (int c = 0; c < m_; ++c) order[pred_[c].count()] = c;
  return Vote(std::move(order));
}

}  // namespace kemeny

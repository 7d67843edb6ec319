#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kemeny {

// Scores are sums of pairwise disagreement counts; they stay well inside
// 64 bits for any input this library accepts.
using Score = std::int64_t;

struct Candidate {
  int index;
  std::string name;
};

// A complete, tie-free ranking of the candidates 0..m-1, best first.
class Vote {
 public:
  Vote() = default;
  explicit Vote(std::vector<int> order);

  int size() const { return static_cast<int>(order_.size()); }
  int at(int pos) const { return order_[pos]; }
  std::span<const int> ranking() const { return order_; }

  friend bool operator==(const Vote&, const Vote&) = default;

 private:
  std::vector<int> order_;
};

// An immutable profile: a non-empty list of votes over a shared candidate
// set. Per-vote candidate positions are cached for O(1) lookups.
class Election {
 public:
  Election(std::vector<Candidate> candidates, std::vector<Vote> votes);

  int num_candidates() const { return static_cast<int>(candidates_.size()); }
  int num_votes() const { return static_cast<int>(votes_.size()); }
  const std::vector<Candidate>& candidates() const { return candidates_; }
  const std::vector<Vote>& votes() const { return votes_; }
  const Vote& vote(int i) const { return votes_[i]; }
  const std::string& name(int c) const { return candidates_[c].name; }
  int position_in(int vote, int candidate) const {
    return positions_[vote][candidate];
  }

 private:
  std::vector<Candidate> candidates_;
  std::vector<Vote> votes_;
  std::vector<std::vector<int>> positions_;
};

// A set of ordered candidate pairs (x, y) meaning "x ranked above y".
// At most one orientation per unordered pair may be present.
class OrderedPairSet {
 public:
  void insert(int above, int below);
  // Adds the pair without the opposite-orientation check (self-pairs are
  // still rejected). Unions of sets that disagree hold both orientations
  // of some pair; is_consistent treats that as the two-cycle it is.
  void insert_unchecked(int above, int below);
  bool contains(int above, int below) const {
    return pairs_.count({above, below}) != 0;
  }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  auto begin() const { return pairs_.begin(); }
  auto end() const { return pairs_.end(); }

 private:
  std::set<std::pair<int, int>> pairs_;
};

// count(a, b) = number of votes ranking a above b.
class PairTally {
 public:
  PairTally(int num_candidates, int num_votes);

  int count(int a, int b) const {
    return a < b ? above_[tri(a, b)] : num_votes_ - above_[tri(b, a)];
  }
  int num_candidates() const { return num_candidates_; }
  int num_votes() const { return num_votes_; }
  void add(int a, int b) { ++above_[tri(a, b)]; }  // a < b, a ranked above b

 private:
  std::size_t tri(int i, int j) const {
    // Index of {i, j}, i < j, in row-major upper-triangular order.
    return static_cast<std::size_t>(i) * (2 * num_candidates_ - i - 1) / 2 +
           (j - i - 1);
  }

  int num_candidates_;
  int num_votes_;
  std::vector<int> above_;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text format: one vote per line, candidate names separated by '>'.
// Blank lines and lines starting with '#' are ignored. Candidate indices
// follow first-appearance order in the first vote line.
Election parse_election(std::string_view text);
std::string serialize_election(const Election& e);

int position(const Vote& v, int candidate);

// Number of unordered candidate pairs the two rankings order oppositely.
Score kt_distance(const Vote& v, const Vote& w);
Score kt_distance_naive(const Vote& v, const Vote& w);

// Sum of kt distances from l to every vote of e.
Score score_of(const Vote& l, const Election& e);

// All m*(m-1)/2 ordered pairs induced by the ranking l.
OrderedPairSet relation_set(const Vote& l);

// Total number of (vote, pair) conflicts: for each (x, y) in pairs, the
// votes ranking y above x.
Score subscore(const OrderedPairSet& pairs, const Election& e);

// True when the pairs, read as a directed graph, contain no cycle.
bool is_consistent(const OrderedPairSet& pairs);

// True when no unordered pair appears in both sets with opposite
// orientations.
bool sets_agree(const OrderedPairSet& x, const OrderedPairSet& y);

PairTally pairwise_tally(const Election& e);

}  // namespace kemeny

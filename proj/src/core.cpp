#include "kemeny/core.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace kemeny {

Vote::Vote(std::vector<int> order) : order_(std::move(order)) {
  std::vector<char> seen(order_.size(), 0);
  for (int c : order_) {
    if (c < 0 || c >= size() || seen[c])
      throw std::invalid_argument("vote is not a permutation of 0..m-1");
    seen[c] = 1;
  }
}

Election::Election(std::vector<Candidate> candidates, std::vector<Vote> votes)
    : candidates_(std::move(candidates)), votes_(std::move(votes)) {
  if (votes_.empty()) throw std::invalid_argument("election needs at least one vote");
  const int m = num_candidates();
  for (int i = 0; i < m; ++i)
    if (candidates_[i].index != i)
      throw std::invalid_argument("candidate indices must be dense and in order");
  positions_.reserve(votes_.size());
  for (const Vote& v : votes_) {
    if (v.size() != m)
      throw std::invalid_argument("vote size does not match candidate count");
    std::vector<int> pos(m);
    for (int p = 0; p < m; ++p) pos[v.at(p)] = p;
    positions_.push_back(std::move(pos));
  }
}

void OrderedPairSet::insert(int above, int below) {
  if (above == below) throw std::invalid_argument("self-pair is not allowed");
  if (contains(below, above))
    throw std::invalid_argument("reverse orientation already present");
  pairs_.insert({above, below});
}

void OrderedPairSet::insert_unchecked(int above, int below) {
  if (above == below) throw std::invalid_argument("self-pair is not allowed");
  pairs_.insert({above, below});
}

PairTally::PairTally(int num_candidates, int num_votes)
    : num_candidates_(num_candidates),
      num_votes_(num_votes),
      above_(static_cast<std::size_t>(num_candidates) * (num_candidates - 1) / 2,
             0) {}

PairTally pairwise_tally(const Election& e) {
  const int m = e.num_candidates();
  PairTally t(m, e.num_votes());
  for (int v = 0; v < e.num_votes(); ++v)
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (e.position_in(v, i) < e.position_in(v, j)) t.add(i, j);
  return t;
}

namespace {

bool valid_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '+' ||
         c == '.' || c == '-';
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_vote_line(std::string_view line) {
  std::vector<std::string> names;
  std::size_t start = 0;
  while (true) {
    std::size_t gt = line.find('>', start);
    std::string_view tok = trim(line.substr(start, gt - start));
    if (tok.empty())
      throw ParseError("malformed vote line: empty candidate name");
    for (char c : tok)
      if (!valid_name_char(c))
        throw ParseError("invalid character in candidate name: " +
                         std::string(tok));
    names.emplace_back(tok);
    if (gt == std::string_view::npos) break;
    start = gt + 1;
  }
  return names;
}

}  // namespace

Election parse_election(std::string_view text) {
  std::vector<std::vector<std::string>> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view raw =
        text.substr(start, nl == std::string_view::npos ? nl : nl - start);
    std::string_view line = trim(raw);
    if (!line.empty() && line.front() != '#')
      lines.push_back(split_vote_line(line));
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  if (lines.empty()) throw ParseError("empty input: no vote lines");

  std::map<std::string, int> index_of;
  std::vector<Candidate> candidates;
  for (const std::string& name : lines[0]) {
    if (index_of.count(name))
      throw ParseError("duplicate candidate '" + name + "' in vote");
    int idx = static_cast<int>(candidates.size());
    index_of[name] = idx;
    candidates.push_back({idx, name});
  }

  const int m = static_cast<int>(candidates.size());
  std::vector<Vote> votes;
  for (const auto& names : lines) {
    if (static_cast<int>(names.size()) != m)
      throw ParseError("vote is not a permutation of the first vote's candidates");
    std::vector<int> order;
    std::vector<char> seen(m, 0);
    order.reserve(names.size());
    for (const std::string& name : names) {
      auto it = index_of.find(name);
      if (it == index_of.end())
        throw ParseError("unknown candidate '" + name + "'");
      if (seen[it->second])
        throw ParseError("duplicate candidate '" + name + "' in vote");
      seen[it->second] = 1;
      order.push_back(it->second);
    }
    votes.emplace_back(std::move(order));
  }
  return Election(std::move(candidates), std::move(votes));
}

std::string serialize_election(const Election& e) {
  std::string out;
  for (const Vote& v : e.votes()) {
    for (int p = 0; p < v.size(); ++p) {
      if (p) out += '>';
      out += e.name(v.at(p));
    }
    out += '\n';
  }
  return out;
}

int position(const Vote& v, int candidate) {
  for (int p = 0; p < v.size(); ++p)
    if (v.at(p) == candidate) return p;
  throw std::out_of_range("candidate not present in vote");
}

namespace {

// Counts inversions of a[lo, hi) by merge sort, using tmp as scratch.
Score count_inversions(std::vector<int>& a, std::vector<int>& tmp, int lo,
                       int hi) {
  if (hi - lo <= 1) return 0;
  int mid = lo + (hi - lo) / 2;
  Score inv = count_inversions(a, tmp, lo, mid) + count_inversions(a, tmp, mid, hi);
  int i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (a[i] <= a[j]) {
      tmp[k++] = a[i++];
    } else {
      inv += mid - i;
      tmp[k++] = a[j++];
    }
  }
  while (i < mid) tmp[k++] = a[i++];
  while (j < hi) tmp[k++] = a[j++];
  std::copy(tmp.begin() + lo, tmp.begin() + hi, a.begin() + lo);
  return inv;
}

}  // namespace

Score kt_distance(const Vote& v, const Vote& w) {
  if (v.size() != w.size())
    throw std::invalid_argument("kt_distance: mismatched candidate sets");
  const int m = v.size();
  std::vector<int> pos_w(m);
  for (int p = 0; p < m; ++p) pos_w[w.at(p)] = p;
  std::vector<int> a(m);
  for (int i = 0; i < m; ++i) a[i] = pos_w[v.at(i)];
  std::vector<int> tmp(m);
  return count_inversions(a, tmp, 0, m);
}

Score kt_distance_naive(const Vote& v, const Vote& w) {
  if (v.size() != w.size())
    throw std::invalid_argument("kt_distance: mismatched candidate sets");
  const int m = v.size();
  std::vector<int> pos_v(m), pos_w(m);
  for (int p = 0; p < m; ++p) pos_v[v.at(p)] = p;
  for (int p = 0; p < m; ++p) pos_w[w.at(p)] = p;
  Score d = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if ((pos_v[i] < pos_v[j]) != (pos_w[i] < pos_w[j])) ++d;
  return d;
}

Score score_of(const Vote& l, const Election& e) {
  if (l.size() != e.num_candidates())
    throw std::invalid_argument("score_of: mismatched candidate sets");
  Score total = 0;
  for (const Vote& v : e.votes()) total += kt_distance(l, v);
  return total;
}

OrderedPairSet relation_set(const Vote& l) {
  OrderedPairSet set;
  for (int i = 0; i < l.size(); ++i)
    for (int j = i + 1; j < l.size(); ++j) set.insert(l.at(i), l.at(j));
  return set;
}

Score subscore(const OrderedPairSet& pairs, const Election& e) {
  Score total = 0;
  for (auto [above, below] : pairs)
    for (int v = 0; v < e.num_votes(); ++v)
      if (e.position_in(v, below) < e.position_in(v, above)) ++total;
  return total;
}

bool is_consistent(const OrderedPairSet& pairs) {
  int top = -1;
  for (auto [a, b] : pairs) top = std::max({top, a, b});
  const int n = top + 1;
  std::vector<std::vector<int>> out(n);
  std::vector<int> indeg(n, 0);
  for (auto [a, b] : pairs) {
    out[a].push_back(b);
    ++indeg[b];
  }
  std::vector<int> queue;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  std::size_t done = 0;
  while (done < queue.size()) {
    int v = queue[done++];
    for (int w : out[v])
      if (--indeg[w] == 0) queue.push_back(w);
  }
  return done == static_cast<std::size_t>(n);
}

bool sets_agree(const OrderedPairSet& x, const OrderedPairSet& y) {
  const OrderedPairSet& small = x.size() <= y.size() ? x : y;
  const OrderedPairSet& large = x.size() <= y.size() ? y : x;
  for (auto [a, b] : small)
    if (large.contains(b, a)) return false;
  return true;
}

}  // namespace kemeny

#pragma once

#include <algorithm>
#include <cstdio>
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "kemeny/core.hpp"
#include "kemeny/instances.hpp"

namespace testsupport {

inline kemeny::Election make_election(std::initializer_list<std::string> votes) {
  std::string text;
  for (const std::string& v : votes) {
    text += v;
    text += '\n';
  }
  return kemeny::parse_election(text);
}

// Five candidates, two dirty pairs ({a,b} and {c,d}), y unanimously mid.
inline kemeny::Election ex_two_dirty() {
  return make_election({"a>b>y>c>d", "b>a>y>c>d", "a>b>y>d>c"});
}

// Seven votes over six candidates; optimal score 33, all pairs dirty.
inline kemeny::Election ex_contested() {
  return make_election({"y>a>b>c>d>x", "y>a>b>c>d>x", "c>d>x>y>a>b",
                        "a>d>x>y>b>c", "a>b>x>y>c>d", "b>c>x>y>a>d",
                        "a>b>c>d>x>y"});
}

inline int idx(const kemeny::Election& e, const std::string& name) {
  for (const kemeny::Candidate& c : e.candidates())
    if (c.name == name) return c.index;
  throw std::runtime_error("no candidate named " + name);
}

inline kemeny::Vote vote_of(const kemeny::Election& e,
                            std::initializer_list<std::string> names) {
  std::vector<int> order;
  for (const std::string& n : names) order.push_back(idx(e, n));
  return kemeny::Vote(std::move(order));
}

// Spans have no operator==; copy to a vector for assertion messages.
inline std::vector<int> to_vec(std::span<const int> s) {
  return {s.begin(), s.end()};
}

// The deterministic 200-instance random sweep shared by the cross-check
// suites: m in [4,8], n in [3,15], w in [0,6], d in [1,m-1].
inline std::vector<kemeny::GenParams> shared_suite() {
  std::vector<kemeny::GenParams> suite;
  for (int i = 0; i < 200; ++i) {
    kemeny::GenParams p;
    p.candidates = 4 + i % 5;
    p.votes = 3 + (i * 7) % 13;
    p.swaps_mean = static_cast<double>(i % 7);
    p.swap_distance = 1 + (i * 3) % (p.candidates - 1);
    p.seed = 1000 + static_cast<std::uint64_t>(i);
    suite.push_back(p);
  }
  return suite;
}

// Minimal disagreement count among orderings of `subset`, counting only
// pairs inside the subset. Independent of PairTally on purpose: positions
// are compared vote by vote.
inline long long restricted_best_score(const kemeny::Election& e,
                                       std::vector<int> subset) {
  std::sort(subset.begin(), subset.end());
  long long best = std::numeric_limits<long long>::max();
  do {
    long long cost = 0;
    for (std::size_t i = 0; i < subset.size(); ++i)
      for (std::size_t j = i + 1; j < subset.size(); ++j)
        for (int v = 0; v < e.num_votes(); ++v)
          if (e.position_in(v, subset[j]) < e.position_in(v, subset[i])) ++cost;
    best = std::min(best, cost);
  } while (std::next_permutation(subset.begin(), subset.end()));
  return subset.empty() ? 0 : best;
}

#ifdef KEMENY_CLI_PATH
struct CliOutcome {
  int exit_code;
  std::string output;
};

inline CliOutcome run_cli(const std::string& args) {
  const std::string cmd = std::string(KEMENY_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string output;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
    output.append(buffer, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}
#endif

}  // namespace testsupport

#include <algorithm>
#include <vector>

#include "doctest.h"
#include "kemeny/dirtiness.hpp"
#include "kemeny/oracle.hpp"
#include "kemeny/reduce.hpp"
#include "support.hpp"

using namespace kemeny;
using testsupport::ex_two_dirty;
using testsupport::ex_contested;
using testsupport::make_election;
using testsupport::to_vec;

TEST_CASE("single vote reduces to nothing, front first") {
  const Election e = make_election({"a>b>c"});
  const ReductionTrace t = condorcet_reduce(e);
  REQUIRE(t.removed.size() == 3);
  CHECK(t.removed[0].name == "a");
  CHECK(t.removed[1].name == "b");
  CHECK(t.removed[2].name == "c");
  for (const Removal& r : t.removed) {
    CHECK(r.placement == Placement::front);
    CHECK(r.offset == 0);
  }
  CHECK(t.total_offset == 0);
  CHECK(t.residual.num_candidates() == 0);
  CHECK(recompose(t, Vote(std::vector<int>{})) == e.votes()[0]);
}

TEST_CASE("no removal when extremes are contested") {
  const ReductionTrace t = condorcet_reduce(ex_two_dirty());
  CHECK(t.removed.empty());
  CHECK(t.total_offset == 0);
  CHECK(t.residual.num_candidates() == 5);
}

TEST_CASE("front removals bank the pairwise disagreements") {
  // a beats both rivals five votes to two; the chain then unwinds fully.
  const Election e = make_election(
      {"b>a>c", "b>a>c", "c>a>b", "c>a>b", "a>b>c", "a>b>c", "a>b>c"});
  const ReductionTrace t = condorcet_reduce(e);
  REQUIRE(t.removed.size() == 3);
  CHECK(t.removed[0].name == "a");
  CHECK(t.removed[0].placement == Placement::front);
  CHECK(t.removed[0].offset == 4);
  CHECK(t.removed[1].name == "b");
  CHECK(t.removed[1].placement == Placement::front);
  CHECK(t.removed[1].offset == 2);
  CHECK(t.removed[2].name == "c");
  CHECK(t.removed[2].offset == 0);
  CHECK(t.total_offset == 6);
  CHECK(t.residual.num_candidates() == 0);
  CHECK(brute_force(e).score == 6);
}

TEST_CASE("a loser goes to the back before any winner is considered") {
  // Candidate indices follow the first vote line, so p has index 0. q beats
  // both rivals (6:1 over p, 5:2 over r) and qualifies for the front from
  // the start, but the scan examines p first: p is beaten 6:1 by q and r,
  // so the first removal is p to the back.
  const Election e = make_election(
      {"p>q>r", "q>r>p", "q>r>p", "q>r>p", "q>r>p", "r>q>p", "r>q>p"});
  const ReductionTrace t = condorcet_reduce(e);
  REQUIRE(t.removed.size() == 3);
  CHECK(t.removed[0].name == "p");
  CHECK(t.removed[0].placement == Placement::back);
  CHECK(t.removed[0].offset == 2);  // vote 1 puts p above q and above r
  CHECK(t.removed[1].name == "q");
  CHECK(t.removed[1].placement == Placement::front);
  CHECK(t.removed[1].offset == 2);  // two votes put r above q
  CHECK(t.removed[2].name == "r");
  CHECK(t.removed[2].placement == Placement::front);
  CHECK(t.removed[2].offset == 0);
  CHECK(t.total_offset == 4);

  // Fronts keep removal order; the back removal lands at the end.
  const Vote full = recompose(t, Vote(std::vector<int>{}));
  const std::vector<int> expected{1, 2, 0};  // q > r > p
  CHECK(to_vec(full.ranking()) == expected);
  CHECK(score_of(full, e) == 4);
  CHECK(brute_force(e).score == 4);
}

TEST_CASE("reduction preserves the optimal score") {
  for (const GenParams& p : testsupport::shared_suite()) {
    const Election e = generate(p);
    const ReductionTrace t = condorcet_reduce(e);
    const Score original = brute_force(e).score;

    if (t.residual.num_candidates() == 0) {
      CHECK(original == t.total_offset);
      CHECK(score_of(recompose(t, Vote(std::vector<int>{})), e) == original);
    } else {
      const OracleResult residual = brute_force(t.residual, 1);
      CHECK(original == t.total_offset + residual.score);
      const Vote full = recompose(t, residual.all_optimal.at(0));
      CHECK(score_of(full, e) == original);
    }
  }
}

TEST_CASE("no majority-dirty pairs means full reduction and a direct solve") {
  int applicable = 0;
  for (const GenParams& p : testsupport::shared_suite()) {
    const Election e = generate(p);
    const MajorityStats stats = count_majority_stats(e);
    const auto direct = solve_two_thirds_special_case(e);
    CHECK(direct.has_value() == (stats.majority_dirty_pairs == 0));
    if (!direct.has_value()) continue;
    ++applicable;
    const ReductionTrace t = condorcet_reduce(e);
    CHECK(t.residual.num_candidates() == 0);
    const Score best = brute_force(e).score;
    CHECK(direct->score == best);
    CHECK(t.total_offset == best);
    CHECK(score_of(direct->consensus, e) == direct->score);
  }
  CHECK(applicable >= 25);  // the w=0 rows alone guarantee this
}

TEST_CASE("identical votes are their own direct solution") {
  const Election e = make_election({"b>c>a", "b>c>a", "b>c>a"});
  const auto r = solve_two_thirds_special_case(e);
  REQUIRE(r.has_value());
  CHECK(r->score == 0);
  CHECK(r->consensus == e.votes()[0]);
  CHECK(r->algorithm == Algorithm::two_thirds);
}

TEST_CASE("contested profiles are not applicable") {
  CHECK_FALSE(solve_two_thirds_special_case(ex_contested()).has_value());
}

TEST_CASE("solver output breaks at most n_M two-thirds majorities") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    GenParams p;
    p.candidates = 5 + static_cast<int>(seed % 4);
    p.votes = 3 + static_cast<int>(seed % 9);
    p.swaps_mean = 1.0 + static_cast<double>(seed % 4);
    p.swap_distance = 2;
    p.seed = seed;
    const Election e = generate(p);
    const PairTally t = pairwise_tally(e);
    const OrderedPairSet rel = two_thirds_relation(t);
    const MajorityStats stats = count_majority_stats(e);

    for (Algorithm alg : {Algorithm::pairs, Algorithm::triples,
                          Algorithm::sets, Algorithm::dp, Algorithm::brute}) {
      const SolveResult r = solve_optimal(e, alg);
      int broken = 0;
      for (auto [a, b] : rel)
        if (position(r.consensus, b) < position(r.consensus, a)) ++broken;
      CHECK(broken <= stats.majority_dirty_pairs);
    }
  }
}

TEST_CASE("majority statistics") {
  const Election unanimous = make_election({"a>b>c", "a>b>c"});
  const MajorityStats none = count_majority_stats(unanimous);
  CHECK(none.majority_dirty_pairs == 0);
  CHECK(none.majority_dirty_candidates.empty());

  // All pairs of the worked example involving its first candidate sit
  // below the two-thirds bar (four votes to three).
  const Election f = ex_contested();
  const MajorityStats stats = count_majority_stats(f);
  CHECK(stats.majority_dirty_pairs == 4);
  CHECK(stats.majority_dirty_candidates == std::vector<int>{0, 1, 2, 3, 4});

  // Two fully reversed votes: every pair is majority-dirty.
  const Election rev = make_election({"a>b>c>d", "d>c>b>a"});
  const MajorityStats all = count_majority_stats(rev);
  CHECK(all.majority_dirty_pairs == 6);
  CHECK(all.majority_dirty_candidates == std::vector<int>{0, 1, 2, 3});
}

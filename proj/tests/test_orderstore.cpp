#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "kemeny/core.hpp"
#include "kemeny/orderstore.hpp"
#include "support.hpp"

using namespace kemeny;
using testsupport::ex_contested;
using testsupport::idx;
using testsupport::make_election;
using testsupport::to_vec;
using testsupport::vote_of;

namespace {

// Rebuilds the stored pair set through the public interface.
OrderedPairSet stored_pairs(const OrderStore& store) {
  OrderedPairSet out;
  for (int a = 0; a < store.universe(); ++a)
    for (int b = 0; b < store.universe(); ++b)
      if (a != b && store.has(a, b)) out.insert(a, b);
  return out;
}

bool transitively_closed(const OrderStore& store) {
  const int m = store.universe();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        if (a != b && b != c && a != c && store.has(a, b) && store.has(b, c) &&
            !store.has(a, c))
          return false;
  return true;
}

}  // namespace

TEST_CASE("memorize fixes a ranking and everything it forces") {
  const Election e = make_election({"a>b>c>d", "a>b>c>d", "a>b>d>c"});
  const PairTally t = pairwise_tally(e);

  OrderStore store(e, t);
  const std::vector<int> abc{0, 1, 2};
  CHECK(store.memorize(abc));
  CHECK(store.has(0, 1));
  CHECK(store.has(1, 2));
  CHECK(store.has(0, 2));

  // A direct contradiction is rejected and the store stays as it was.
  const std::vector<int> ba{1, 0};
  CHECK_FALSE(store.memorize(ba));
  CHECK(store.has(0, 1));
  CHECK(store.fixed_count() == 3);

  // c>d forces a>d and b>d through the closure.
  const std::vector<int> cd{2, 3};
  CHECK(store.memorize(cd));
  CHECK(store.has(2, 3));
  CHECK(store.has(0, 3));
  CHECK(store.has(1, 3));
  CHECK(store.ambiguous_count() == 0);
}

TEST_CASE("memorize validates its input") {
  const Election e = make_election({"a>b>c"});
  const PairTally t = pairwise_tally(e);
  OrderStore store(e, t);
  const std::vector<int> outside{0, 5};
  CHECK_THROWS_AS(store.memorize(outside), std::out_of_range);
  const std::vector<int> dup{1, 1};
  CHECK_THROWS_AS(store.memorize(dup), std::invalid_argument);
}

TEST_CASE("a cycle through the closure is rejected as a whole") {
  const Election e = make_election({"a>b>c", "a>b>c", "c>a>b"});
  const PairTally t = pairwise_tally(e);
  OrderStore store(e, t);
  const std::vector<int> ab{0, 1};
  const std::vector<int> bc{1, 2};
  REQUIRE(store.memorize(ab));
  REQUIRE(store.memorize(bc));
  CHECK(store.has(0, 2));  // forced

  // c>a closes the cycle; the whole call must fail without side effects.
  const std::vector<int> ca{2, 0};
  const Score before = store.score();
  CHECK_FALSE(store.memorize(ca));
  CHECK(store.score() == before);
  CHECK(store.ambiguous_count() == 0);
}

TEST_CASE("ambiguous lists the unfixed pairs") {
  const Election e = make_election({"a>b>c", "b>a>c"});
  const PairTally t = pairwise_tally(e);

  OrderStore fresh(e, t);
  CHECK(fresh.ambiguous() ==
        std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});

  OrderStore full(e, t);
  const std::vector<int> all{0, 1, 2};
  REQUIRE(full.memorize(all));
  CHECK(full.ambiguous().empty());
}

TEST_CASE("get_list round-trips a fully fixed store") {
  const Election e = ex_contested();
  const PairTally t = pairwise_tally(e);
  OrderStore store(e, t);
  const Vote target = vote_of(e, {"y", "a", "b", "c", "d", "x"});
  REQUIRE(store.memorize(target.ranking()));
  const auto list = store.get_list();
  REQUIRE(list.has_value());
  CHECK(*list == target);
  CHECK(store.score() == 33);

  OrderStore partial(e, t);
  const std::vector<int> two{0, 1};
  REQUIRE(partial.memorize(two));
  CHECK_FALSE(partial.get_list().has_value());
}

TEST_CASE("get_list after stepwise fixing") {
  const Election e = make_election({"a>b>c"});
  const PairTally t = pairwise_tally(e);
  OrderStore store(e, t);
  const std::vector<int> ab{0, 1};
  const std::vector<int> bc{1, 2};
  REQUIRE(store.memorize(ab));
  REQUIRE(store.memorize(bc));
  const auto list = store.get_list();
  REQUIRE(list.has_value());
  CHECK(to_vec(list->ranking()) == std::vector<int>{0, 1, 2});
}

TEST_CASE("score matches the core subscore at every step") {
  const Election e = ex_contested();
  const PairTally t = pairwise_tally(e);

  OrderStore store(e, t);
  CHECK(store.score() == 0);

  std::mt19937_64 rng(99);
  for (int round = 0; round < 50; ++round) {
    OrderStore s(e, t);
    Score last = 0;
    for (int step = 0; step < 6; ++step) {
      // Random pair orientation; memorize may refuse.
      const int a = static_cast<int>(rng() % 6);
      int b = static_cast<int>(rng() % 6);
      if (a == b) b = (b + 1) % 6;
      const std::vector<int> l{a, b};
      s.memorize(l);
      CHECK(s.score() == subscore(stored_pairs(s), e));
      CHECK(s.score() >= last);  // monotone under successful fixes
      last = s.score();
    }
  }
}

TEST_CASE("random memorize sequences keep the store closed and consistent") {
  std::mt19937_64 rng(123456);
  for (int round = 0; round < 1000; ++round) {
    const int m = 2 + static_cast<int>(rng() % 6);
    std::string first;
    for (int c = 0; c < m; ++c) {
      if (c) first += '>';
      first += 'a' + c;
    }
    const Election e = make_election({first});
    const PairTally t = pairwise_tally(e);
    OrderStore store(e, t);

    const int steps = 1 + static_cast<int>(rng() % 6);
    for (int s = 0; s < steps; ++s) {
      const int len = 2 + static_cast<int>(rng() % (m - 1 > 0 ? m - 1 : 1));
      std::vector<int> pool(m);
      for (int i = 0; i < m; ++i) pool[i] = i;
      std::vector<int> l;
      for (int i = 0; i < len && !pool.empty(); ++i) {
        const int pick = static_cast<int>(rng() % pool.size());
        l.push_back(pool[pick]);
        pool.erase(pool.begin() + pick);
      }
      const bool ok = store.memorize(l);

      // Agreement iff success: a refused call means some pair of l is
      // stored reversed.
      OrderedPairSet l_rel;
      for (std::size_t i = 0; i < l.size(); ++i)
        for (std::size_t j = i + 1; j < l.size(); ++j)
          l_rel.insert(l[i], l[j]);
      CHECK(ok == sets_agree(l_rel, stored_pairs(store)));
      if (!ok) CHECK_FALSE(is_consistent([&] {
        OrderedPairSet u = stored_pairs(store);
        for (const auto& [x, y] : l_rel) u.insert_unchecked(x, y);
        return u;
      }()));

      REQUIRE(is_consistent(stored_pairs(store)));
      REQUIRE(transitively_closed(store));
    }

    if (store.ambiguous_count() == 0) {
      const auto list = store.get_list();
      REQUIRE(list.has_value());
      CHECK(score_of(*list, e) == store.score());
      // The list's relation set extends the stored pairs.
      const OrderedPairSet rel = relation_set(*list);
      for (const auto& [x, y] : stored_pairs(store)) CHECK(rel.contains(x, y));
    }
  }
}

TEST_CASE("clone is an independent deep copy") {
  const Election e = make_election({"a>b>c", "c>b>a"});
  const PairTally t = pairwise_tally(e);
  OrderStore original(e, t);
  const std::vector<int> ab{0, 1};
  REQUIRE(original.memorize(ab));

  OrderStore copy = original.clone();
  CHECK(copy.has(0, 1));
  CHECK(copy.score() == original.score());
  CHECK(copy.ambiguous() == original.ambiguous());

  const std::vector<int> bc{1, 2};
  REQUIRE(copy.memorize(bc));
  CHECK(copy.has(1, 2));
  CHECK_FALSE(original.has(1, 2));
  CHECK(original.ambiguous_count() == 2);
  CHECK(copy.ambiguous_count() == 0);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "oracle.hpp"
#include "sumsetlab/binomial.hpp"
#include "sumsetlab/experiment.hpp"
#include "sumsetlab/range.hpp"
#include "sumsetlab/rng.hpp"

using namespace sumsetlab;

TEST_CASE("SplitMix64 stream test vectors") {
  SplitMix64 g0 = SplitMix64::for_stream(0xC0FFEE, 0);
  CHECK(g0.next() == 0xd17dc26665609bd0ULL);
  CHECK(g0.next() == 0x34a4cc6594baa5b5ULL);
  CHECK(g0.next() == 0x8c4cbb62d29439f9ULL);
  SplitMix64 g1 = SplitMix64::for_stream(0xC0FFEE, 1);
  CHECK(g1.next() == 0xbe2be3c7728f3220ULL);
  CHECK(g1.next() == 0x47033ed5e3e40b0dULL);
  SplitMix64 g2 = SplitMix64::for_stream(1, 12345);
  CHECK(g2.next() == 0x5556ac47fad678d0ULL);
  CHECK(g2.next() == 0x545ffec55573b24dULL);
}

TEST_CASE("sample_kset determinism and edge cases") {
  CHECK(sample_kset(4, 4, 0, 99) == IntSet{0, 1, 2, 3});
  CHECK(sample_kset(4, 4, 77, 1) == IntSet{0, 1, 2, 3});
  for (std::uint64_t i = 0; i < 50; ++i) {
    IntSet a = sample_kset(1'000'000, 4, i, kDefaultSeed);
    CHECK(a == sample_kset(1'000'000, 4, i, kDefaultSeed));
    CHECK(a.k() == 4);
    CHECK(a.min() >= 0);
    CHECK(a.max() < 1'000'000);
  }
  // Different indices give different draws (overwhelmingly).
  CHECK(sample_kset(1'000'000, 4, 0, kDefaultSeed) !=
        sample_kset(1'000'000, 4, 1, kDefaultSeed));
}

TEST_CASE("sample_kset uniformity against the binomial oracle") {
  // Bucketed occupancy: 20 buckets of 50 elements each over q=1000.
  // Expected per bucket = draws * k * 50/q = 4000; binomial sd ~ 61.
  const Int q = 1000;
  const std::uint64_t draws = 20000;
  std::vector<std::uint64_t> bucket(20, 0);
  for (std::uint64_t i = 0; i < draws; ++i) {
    IntSet a = sample_kset(q, 4, i, kDefaultSeed);
    for (Int x : a.elements()) {
      ++bucket[static_cast<std::size_t>(x / 50)];
    }
  }
  const double expected = 4000.0;
  const double sd = std::sqrt(static_cast<double>(draws) * 4 * 0.05 * 0.95);
  for (std::uint64_t b : bucket) {
    CHECK(std::abs(static_cast<double>(b) - expected) < 5.0 * sd);
  }
}

TEST_CASE("run_distribution trivial exhaustive cases") {
  SizeDistribution dist = run_distribution({1, 4, 10, Mode::exhaustive});
  CHECK(dist.counts.at(4) == binomial(10, 4));
  CHECK(dist.total_mass() == binomial(10, 4));

  // k=2: every pair has |hA| = h+1.
  SizeDistribution pairs = run_distribution({3, 2, 8, Mode::exhaustive});
  CHECK(pairs.counts.at(4) == binomial(8, 2));
}

TEST_CASE("run_distribution sampled mass and support") {
  ExperimentSpec spec{5, 4, 500, Mode::sampled, 2000, kDefaultSeed};
  SizeDistribution dist = run_distribution(spec);
  CHECK(dist.total_mass() == 2000);
  for (const auto& [t, c] : dist.counts) {
    CHECK(t >= min_size(5, 4));
    CHECK(t <= static_cast<Int>(max_size(5, 4)));
    CHECK(c > 0);  // sampled tables carry no zero rows
  }
}

TEST_CASE("run_distribution is worker-count invariant") {
  ExperimentSpec ex{5, 4, 40, Mode::exhaustive};
  CHECK(run_distribution(ex, 1).counts == run_distribution(ex, 4).counts);
  ExperimentSpec sm{4, 3, 1000, Mode::sampled, 5000, 42};
  CHECK(run_distribution(sm, 1).counts == run_distribution(sm, 8).counts);
}

TEST_CASE("exhaustive counts match a direct per-subset census") {
  // Independent oracle: walk all C(12,3) subsets with test-local code.
  std::map<Int, std::uint64_t> census;
  std::vector<Int> s(3);
  for (Int a = 0; a < 12; ++a)
    for (Int b = a + 1; b < 12; ++b)
      for (Int c = b + 1; c < 12; ++c) {
        s = {a, b, c};
        ++census[static_cast<Int>(oracle::brute_h_fold(s, 4).size())];
      }
  SizeDistribution dist = run_distribution({4, 3, 12, Mode::exhaustive});
  for (const auto& [t, c] : dist.counts) {
    auto it = census.find(t);
    CHECK(c == (it == census.end() ? 0 : it->second));
  }
}

TEST_CASE("arithmetic-progression row matches the (a,d) counting oracle") {
  SizeDistribution dist = run_distribution({5, 4, 60, Mode::exhaustive}, 4);
  CHECK(dist.counts.at(min_size(5, 4)) == oracle::count_ap4(60));
}

TEST_CASE("popular_sizes ordering and ties") {
  SizeDistribution dist;
  dist.counts = {{10, 5}, {9, 7}, {8, 7}, {7, 1}};
  auto top = popular_sizes(dist, 3);
  REQUIRE(top.size() == 3);
  CHECK(top[0] == std::pair<Int, std::uint64_t>{9, 7});  // tie -> larger t first
  CHECK(top[1] == std::pair<Int, std::uint64_t>{8, 7});
  CHECK(top[2] == std::pair<Int, std::uint64_t>{10, 5});
  CHECK_THROWS_AS(popular_sizes(dist, 5), std::invalid_argument);
}

TEST_CASE("successive_differences") {
  std::vector<Int> sizes{36, 46, 52, 55, 56};
  CHECK(successive_differences(sizes) == std::vector<Int>{10, 6, 3, 1});
  std::vector<Int> pair{9, 10};
  CHECK(successive_differences(pair) == std::vector<Int>{1});
  std::vector<Int> single{5};
  CHECK(successive_differences(single).empty());
  std::vector<Int> bad{1, 3, 2};
  CHECK_THROWS_AS(successive_differences(bad), std::invalid_argument);
}

TEST_CASE("run_collision_study") {
  // Degenerate exhaustive run: the single set [0,6].
  CollisionReport interval = run_collision_study({2, 7, 7, Mode::exhaustive});
  REQUIRE(interval.per_set.size() == 1);
  CHECK(interval.per_set[0].eq2 == 4);
  CHECK(interval.per_set[0].ge3 == 5);
  CHECK(interval.n_greater == 1);

  // k=2 sets are B_h for every h: no collisions at all.
  CollisionReport pairs = run_collision_study({4, 2, 30, Mode::sampled, 200, 7});
  CHECK(pairs.n_less == 0);
  CHECK(pairs.n_equal == 200);
  for (const auto& cc : pairs.per_set) {
    CHECK(cc.eq2 == 0);
    CHECK(cc.ge3 == 0);
  }

  // Worker-count invariance, per-set order included.
  ExperimentSpec spec{5, 4, 100000, Mode::sampled, 500, kDefaultSeed};
  CollisionReport one = run_collision_study(spec, 1);
  CollisionReport many = run_collision_study(spec, 4);
  REQUIRE(one.per_set.size() == many.per_set.size());
  for (std::size_t i = 0; i < one.per_set.size(); ++i) {
    CHECK(one.per_set[i].eq2 == many.per_set[i].eq2);
    CHECK(one.per_set[i].ge3 == many.per_set[i].ge3);
  }
  CHECK(one.n_less + one.n_equal + one.n_greater == 500);
}

TEST_CASE("experiment validation errors") {
  CHECK_THROWS_AS(run_distribution({5, 4, 3, Mode::exhaustive}),
                  std::invalid_argument);
  CHECK_THROWS_AS(run_distribution({5, 4, 100, Mode::sampled, 0, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(run_distribution({5, 4, 5000, Mode::exhaustive}, 1, 1000),
                  workload_error);
}

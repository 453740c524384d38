// Brute-force oracles for the unit and acceptance suites. Kept independent
// of the library kernels: everything here enumerates tuples directly.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "sumsetlab/intset.hpp"

namespace oracle {

using sumsetlab::Int;

// hA by plain recursion over all nondecreasing h-tuples.
inline std::set<Int> brute_h_fold(const std::vector<Int>& elems, int h) {
  std::set<Int> out;
  auto rec = [&](auto&& self, std::size_t start, int remaining, Int sum) -> void {
    if (remaining == 0) {
      out.insert(sum);
      return;
    }
    for (std::size_t i = start; i < elems.size(); ++i) {
      self(self, i, remaining - 1, sum + elems[i]);
    }
  };
  rec(rec, 0, h, 0);
  return out;
}

inline std::map<Int, std::uint64_t> brute_histogram(const std::vector<Int>& elems,
                                                    int h) {
  std::map<Int, std::uint64_t> counts;
  auto rec = [&](auto&& self, std::size_t start, int remaining, Int sum) -> void {
    if (remaining == 0) {
      ++counts[sum];
      return;
    }
    for (std::size_t i = start; i < elems.size(); ++i) {
      self(self, i, remaining - 1, sum + elems[i]);
    }
  };
  rec(rec, 0, h, 0);
  return counts;
}

// Random k-subset of [lo, hi] for property tests (test-local generator, not
// the library's sampling path).
inline std::vector<Int> random_set(std::mt19937_64& rng, int k, Int lo, Int hi) {
  std::set<Int> s;
  std::uniform_int_distribution<Int> dist(lo, hi);
  while (static_cast<int>(s.size()) < k) s.insert(dist(rng));
  return std::vector<Int>(s.begin(), s.end());
}

// Count of 4-term arithmetic progressions in [0, q-1]: pairs (a, d) with
// d >= 1 and a + 3d <= q-1.
inline std::uint64_t count_ap4(Int q) {
  std::uint64_t n = 0;
  for (Int d = 1; 3 * d <= q - 1; ++d) n += static_cast<std::uint64_t>(q - 3 * d);
  return n;
}

}  // namespace oracle

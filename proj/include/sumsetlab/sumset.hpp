#pragma once

#include <cstdint>
#include <map>

#include "sumsetlab/binomial.hpp"
#include "sumsetlab/intset.hpp"

namespace sumsetlab {

// Representation function of A under h-fold addition: counts[n] is the
// number of size-h multisets from A summing to n.
struct RepHistogram {
  int h;
  Int k;
  std::map<Int, std::uint64_t> counts;

  std::uint64_t total_mass() const;
};

struct CollisionCounts {
  std::uint64_t eq2;  // #{n : r(n) = 2}
  std::uint64_t ge3;  // #{n : r(n) >= 3}
};

// { a + b : a in A, b in B }
IntSet add_sumsets(const IntSet& a, const IntSet& b);

// hA, all sums of h not necessarily distinct elements of A.
IntSet h_fold_sumset(const IntSet& a, int h);

// |hA| without materializing the element list when a counting kernel applies.
Int sumset_size(const IntSet& a, int h);

RepHistogram representation_histogram(const IntSet& a, int h,
                                      std::uint64_t guard = 100'000'000);

// Size criterion: |hA| == C(h+k-1, h).
bool is_bh_set(const IntSet& a, int h);

// r_{A,2}(n) for A = [0, k-1], k >= 5, by the piecewise interval formula.
std::uint64_t interval_rep2(Int k, Int n);

CollisionCounts collision_counts(const IntSet& a, int h,
                                 std::uint64_t guard = 100'000'000);

namespace detail {

// Dense bit-vector kernel; requires h*(max-min) <= kBitvecSpanLimit.
IntSet h_fold_sumset_bitvec(const IntSet& a, int h);

// Iterated pairwise-sum kernel with sort + dedup at each fold.
IntSet h_fold_sumset_merge(const IntSet& a, int h);

// Size-only kernel over an already sorted, duplicate-free element list;
// skips IntSet construction in hot enumeration loops.
Int sumset_size_sorted(const std::vector<Int>& elems, int h);

inline constexpr Int kBitvecSpanLimit = Int{1} << 26;

}  // namespace detail

}  // namespace sumsetlab

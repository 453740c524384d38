#pragma once

#include <optional>
#include <vector>

#include "sumsetlab/intset.hpp"

namespace sumsetlab {

// Achieved sumset sizes for (h, k) over the window [0, q-1]. proof_grade is
// true when the window is at least the complexity bound, in which case
// achieved is exactly the full range of sumset sizes.
struct RangeResult {
  int h;
  Int k;
  Int window_q;
  std::vector<Int> achieved;
  std::vector<Int> missing;
  bool proof_grade;
};

// h(k-1) + 1, attained by arithmetic progressions.
Int min_size(int h, Int k);

// C(h+k-1, k-1), attained by B_h-sets.
std::uint64_t max_size(int h, Int k);

// 4*(8h)^(k-1); valid for h >= 3 and k >= 3, throws std::domain_error
// otherwise.
std::uint64_t complexity_bound(int h, Int k);

// Exact range when a closed form exists (k <= 2, h <= 2, k = 3, or h = 1);
// empty optional otherwise. Ascending.
std::optional<std::vector<Int>> closed_form_range(int h, Int k);

RangeResult exhaustive_range(int h, Int k, Int q, int threads = 1,
                             std::uint64_t guard = 1'000'000'000);

// [C(h+3,3) - Tet_j : j], descending. include_bh selects whether j starts
// at 0 (the B_h size itself, as in the popularity tables) or at 1.
std::vector<Int> predicted_popular_sizes(int h, bool include_bh = true);

}  // namespace sumsetlab

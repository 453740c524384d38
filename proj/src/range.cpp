#include "sumsetlab/range.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "sumsetlab/affine.hpp"
#include "sumsetlab/binomial.hpp"
#include "sumsetlab/parallel.hpp"
#include "sumsetlab/sumset.hpp"

namespace sumsetlab {

Int min_size(int h, Int k) {
  if (h < 1 || k < 1) throw std::invalid_argument("min_size: h, k >= 1");
  Int out;
  if (__builtin_mul_overflow(static_cast<Int>(h), k - 1, &out) ||
      __builtin_add_overflow(out, Int{1}, &out)) {
    throw std::overflow_error("min_size: overflow");
  }
  return out;
}

std::uint64_t max_size(int h, Int k) {
  if (h < 1 || k < 1) throw std::invalid_argument("max_size: h, k >= 1");
  return multiset_count(h, k);
}

std::uint64_t complexity_bound(int h, Int k) {
  if (h < 3 || k < 3) {
    throw std::domain_error("complexity_bound: requires h >= 3 and k >= 3");
  }
  std::uint64_t base = 8 * static_cast<std::uint64_t>(h);
  unsigned __int128 acc = 4;
  for (Int i = 0; i < k - 1; ++i) {
    acc *= base;
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
      throw std::overflow_error("complexity_bound: overflow");
    }
  }
  return static_cast<std::uint64_t>(acc);
}

std::optional<std::vector<Int>> closed_form_range(int h, Int k) {
  if (h < 1 || k < 1) throw std::invalid_argument("closed_form_range: h, k >= 1");
  if (k == 1) return std::vector<Int>{1};
  if (h == 1) return std::vector<Int>{k};
  if (k == 2) return std::vector<Int>{h + 1};
  if (k == 3) {
    // { C(h+2,2) - C(t,2) : t in [1,h] }, exactly h values.
    std::vector<Int> out;
    Int top = static_cast<Int>(binomial(static_cast<std::uint64_t>(h) + 2, 2));
    for (Int t = h; t >= 1; --t) {
      out.push_back(top - static_cast<Int>(triangular(static_cast<std::uint64_t>(t))));
    }
    return out;
  }
  if (h == 2) {
    // Full interval [2k-1, C(k+1,2)].
    Int lo = 2 * k - 1;
    Int hi = static_cast<Int>(binomial(static_cast<std::uint64_t>(k) + 1, 2));
    std::vector<Int> out;
    for (Int t = lo; t <= hi; ++t) out.push_back(t);
    return out;
  }
  return std::nullopt;
}

RangeResult exhaustive_range(int h, Int k, Int q, int threads,
                             std::uint64_t guard) {
  if (k < 2) throw std::invalid_argument("exhaustive_range: k >= 2");
  if (q < k) throw std::invalid_argument("exhaustive_range: q >= k");
  // Upper bound on the canonical-set count: subsets of [0,q-1] containing 0.
  std::uint64_t estimate = binomial_saturating(static_cast<std::uint64_t>(q - 1),
                                               static_cast<std::uint64_t>(k - 1));
  if (estimate > guard) {
    throw workload_error("exhaustive_range: canonical enumeration too large",
                         estimate);
  }
  Int lo = min_size(h, k);
  std::uint64_t hi64 = max_size(h, k);
  if (hi64 > static_cast<std::uint64_t>(lo) + (1u << 26)) {
    throw workload_error("exhaustive_range: size interval too large to tabulate",
                         hi64);
  }
  Int hi = static_cast<Int>(hi64);
  std::size_t width = static_cast<std::size_t>(hi - lo + 1);

  int workers = resolve_threads(threads);
  std::vector<std::vector<char>> hit(static_cast<std::size_t>(workers),
                                     std::vector<char>(width, 0));
  // One task per second element; the shared counter balances the skew
  // toward small second elements.
  std::uint64_t n_tasks = k == 2 ? 1 : static_cast<std::uint64_t>(q - 1);
  parallel_for_dynamic(n_tasks, workers, [&](int w, std::uint64_t task) {
    auto& mine = hit[static_cast<std::size_t>(w)];
    enumerate_canonical_sets_with_second(
        k, q, static_cast<Int>(task) + 1, [&](std::vector<Int> elems) {
          Int t = sumset_size(IntSet(std::move(elems)), h);
          mine[static_cast<std::size_t>(t - lo)] = 1;
        });
  });

  RangeResult result{h, k, q, {}, {}, false};
  for (std::size_t i = 0; i < width; ++i) {
    bool any = false;
    for (const auto& mine : hit) any = any || mine[i] != 0;
    if (any) {
      result.achieved.push_back(lo + static_cast<Int>(i));
    } else {
      result.missing.push_back(lo + static_cast<Int>(i));
    }
  }
  if (h >= 3 && k >= 3) {
    result.proof_grade = static_cast<std::uint64_t>(q) >= complexity_bound(h, k);
  }
  return result;
}

std::vector<Int> predicted_popular_sizes(int h, bool include_bh) {
  if (h < 2) throw std::invalid_argument("predicted_popular_sizes: h >= 2");
  Int bh = static_cast<Int>(binomial(static_cast<std::uint64_t>(h) + 3, 3));
  std::vector<Int> out;
  for (int j = include_bh ? 0 : 1; j <= h - 1; ++j) {
    out.push_back(bh - static_cast<Int>(tetrahedral(static_cast<std::uint64_t>(j))));
  }
  return out;
}

}  // namespace sumsetlab

#include "sumsetlab/sumset.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <limits>
#include <vector>

namespace sumsetlab {

std::uint64_t RepHistogram::total_mass() const {
  std::uint64_t mass = 0;
  for (const auto& [n, c] : counts) mass += c;
  return mass;
}

IntSet add_sumsets(const IntSet& a, const IntSet& b) {
  Int tmp;
  if (__builtin_add_overflow(a.min(), b.min(), &tmp) ||
      __builtin_add_overflow(a.max(), b.max(), &tmp)) {
    throw std::overflow_error("add_sumsets: pairwise sums exceed 64-bit range");
  }
  std::vector<Int> sums;
  sums.reserve(static_cast<std::size_t>(a.k()) * static_cast<std::size_t>(b.k()));
  for (Int x : a.elements()) {
    for (Int y : b.elements()) sums.push_back(x + y);
  }
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  return IntSet(std::move(sums));
}

namespace {

// Nonnegative translate of A: b_i = a_i - min(A).
std::vector<Int> translated(const IntSet& a) {
  std::vector<Int> b = a.elements();
  Int m = b.front();
  for (Int& x : b) x -= m;
  return b;
}

// Fills scratch with the bit-vector of h-fold sums of the translated set.
// Returns the number of 64-bit words in use.
std::size_t bitvec_fill(const std::vector<Int>& b, int h,
                        std::vector<std::uint64_t>& prev,
                        std::vector<std::uint64_t>& next) {
  Int span = h * b.back();
  // One slack word past the span so carry writes from the shifted OR stay
  // in bounds.
  std::size_t words = static_cast<std::size_t>(span / 64 + 2);
  prev.assign(words, 0);
  next.assign(words, 0);
  for (Int x : b) prev[x >> 6] |= std::uint64_t{1} << (x & 63);
  std::size_t used = static_cast<std::size_t>(b.back() / 64 + 1);
  for (int fold = 2; fold <= h; ++fold) {
    // Content after this fold fits in fold*max bits; +1 covers carry writes.
    std::size_t used_next = static_cast<std::size_t>(fold * b.back() / 64 + 1);
    std::memset(next.data(), 0, (used_next + 1) * sizeof(std::uint64_t));
    for (Int x : b) {
      std::size_t wq = static_cast<std::size_t>(x >> 6);
      unsigned r = static_cast<unsigned>(x & 63);
      if (r == 0) {
        for (std::size_t i = 0; i < used; ++i) next[i + wq] |= prev[i];
      } else {
        for (std::size_t i = 0; i < used; ++i) {
          next[i + wq] |= prev[i] << r;
          next[i + wq + 1] |= prev[i] >> (64 - r);
        }
      }
    }
    prev.swap(next);
    used = used_next;
  }
  return used;
}

thread_local std::vector<std::uint64_t> tl_bits_a;
thread_local std::vector<std::uint64_t> tl_bits_b;
thread_local std::vector<Int> tl_sums;

// All C(h+k-1, h) multiset sums of the translated set, unsorted, into out.
void enumerate_sums(const std::vector<Int>& b, int h, std::vector<Int>& out) {
  out.clear();
  const std::size_t k = b.size();
  auto rec = [&](auto&& self, std::size_t start, int remaining, Int sum) -> void {
    if (remaining == 0) {
      out.push_back(sum);
      return;
    }
    for (std::size_t i = start; i < k; ++i) {
      self(self, i, remaining - 1, sum + b[i]);
    }
  };
  rec(rec, 0, h, 0);
}

std::uint64_t multiset_count_saturating(int h, Int k) {
  try {
    return multiset_count(h, k);
  } catch (const std::overflow_error&) {
    return std::numeric_limits<std::uint64_t>::max();
  }
}

}  // namespace

namespace detail {

IntSet h_fold_sumset_bitvec(const IntSet& a, int h) {
  check_fold_bounds(a, h);
  std::vector<Int> b = translated(a);
  if (h * b.back() > kBitvecSpanLimit) {
    throw std::invalid_argument("bitvec kernel: span exceeds limit");
  }
  std::size_t used = bitvec_fill(b, h, tl_bits_a, tl_bits_b);
  Int offset = static_cast<Int>(h) * a.min();
  std::vector<Int> out;
  for (std::size_t w = 0; w < used; ++w) {
    std::uint64_t word = tl_bits_a[w];
    while (word) {
      unsigned bit = static_cast<unsigned>(std::countr_zero(word));
      out.push_back(static_cast<Int>(w * 64 + bit) + offset);
      word &= word - 1;
    }
  }
  return IntSet(std::move(out));
}

IntSet h_fold_sumset_merge(const IntSet& a, int h) {
  check_fold_bounds(a, h);
  IntSet result = a;
  for (int fold = 2; fold <= h; ++fold) {
    result = add_sumsets(result, a);
  }
  return result;
}

}  // namespace detail

IntSet h_fold_sumset(const IntSet& a, int h) {
  check_fold_bounds(a, h);
  if (h == 1) return a;
  Int span = static_cast<Int>(h) * (a.max() - a.min());
  if (span <= detail::kBitvecSpanLimit) {
    return detail::h_fold_sumset_bitvec(a, h);
  }
  return detail::h_fold_sumset_merge(a, h);
}

namespace detail {

Int sumset_size_sorted(const std::vector<Int>& elems, int h) {
  const Int k = static_cast<Int>(elems.size());
  if (k == 1) return 1;
  if (h == 1) return k;
  Int span = static_cast<Int>(h) * (elems.back() - elems.front());
  std::uint64_t n_multisets = multiset_count_saturating(h, k);
  thread_local std::vector<Int> tl_b;
  tl_b.assign(elems.begin(), elems.end());
  for (Int& x : tl_b) x -= elems.front();
  // The bit-vector wins when its word count is small next to the multiset
  // count; otherwise enumerating sums directly avoids touching the whole span.
  if (span <= kBitvecSpanLimit &&
      static_cast<std::uint64_t>(span) / 64 < n_multisets) {
    std::size_t used = bitvec_fill(tl_b, h, tl_bits_a, tl_bits_b);
    Int size = 0;
    for (std::size_t w = 0; w < used; ++w) size += std::popcount(tl_bits_a[w]);
    return size;
  }
  if (n_multisets <= (std::uint64_t{1} << 20)) {
    enumerate_sums(tl_b, h, tl_sums);
    std::sort(tl_sums.begin(), tl_sums.end());
    tl_sums.erase(std::unique(tl_sums.begin(), tl_sums.end()), tl_sums.end());
    return static_cast<Int>(tl_sums.size());
  }
  return h_fold_sumset_merge(IntSet(std::vector<Int>(elems)), h).k();
}

}  // namespace detail

Int sumset_size(const IntSet& a, int h) {
  check_fold_bounds(a, h);
  return detail::sumset_size_sorted(a.elements(), h);
}

RepHistogram representation_histogram(const IntSet& a, int h,
                                      std::uint64_t guard) {
  check_fold_bounds(a, h);
  std::uint64_t n_multisets = multiset_count_saturating(h, a.k());
  if (n_multisets > guard) {
    throw workload_error("representation_histogram: multiset enumeration too large",
                         n_multisets);
  }
  RepHistogram hist{h, a.k(), {}};
  const auto& e = a.elements();
  const std::size_t k = e.size();
  auto rec = [&](auto&& self, std::size_t start, int remaining, Int sum) -> void {
    if (remaining == 0) {
      ++hist.counts[sum];
      return;
    }
    for (std::size_t i = start; i < k; ++i) {
      self(self, i, remaining - 1, sum + e[i]);
    }
  };
  rec(rec, 0, h, 0);
  return hist;
}

bool is_bh_set(const IntSet& a, int h) {
  return static_cast<std::uint64_t>(sumset_size(a, h)) ==
         multiset_count(h, a.k());
}

std::uint64_t interval_rep2(Int k, Int n) {
  if (k < 5) throw std::invalid_argument("interval_rep2: requires k >= 5");
  if (n < 0 || n > 2 * k - 2) return 0;
  if (n <= k - 1) return static_cast<std::uint64_t>(n / 2 + 1);
  return static_cast<std::uint64_t>((2 * k - 2 - n) / 2 + 1);
}

CollisionCounts collision_counts(const IntSet& a, int h, std::uint64_t guard) {
  RepHistogram hist = representation_histogram(a, h, guard);
  CollisionCounts cc{0, 0};
  for (const auto& [n, c] : hist.counts) {
    if (c == 2) ++cc.eq2;
    if (c >= 3) ++cc.ge3;
  }
  return cc;
}

}  // namespace sumsetlab

#pragma once

#include <numeric>
#include <vector>

#include "sumsetlab/intset.hpp"

namespace sumsetlab {

// Representative of A's orbit under x -> lambda*x + mu (lambda != 0):
// min 0, gcd of nonzero elements 1, gap sequence lexicographically <= the
// gap sequence of the reflection.
IntSet canonicalize(const IntSet& a);

bool is_canonical(const IntSet& a);

bool are_affinely_equivalent(const IntSet& a, const IntSet& b);

namespace detail {

// Gap condition on a translated, gcd-reduced element list: first differences
// lexicographically <= their reverse.
bool gaps_le_reflection(const std::vector<Int>& elems);

}  // namespace detail

// Visits every canonical k-set with elements in [0, q-1], each exactly once,
// in lexicographic order of element lists. Every k-subset of [0, q-1] is
// affinely equivalent to some visited set of equal or smaller diameter.
template <class Fn>
void enumerate_canonical_sets(int k, Int q, Fn&& fn) {
  if (k < 2) throw std::invalid_argument("enumerate_canonical_sets: k >= 2");
  if (q < k) throw std::invalid_argument("enumerate_canonical_sets: q >= k");
  std::vector<Int> elems(static_cast<std::size_t>(k));
  elems[0] = 0;
  auto rec = [&](auto&& self, int pos, Int g) -> void {
    if (pos == k) {
      if (g == 1 && detail::gaps_le_reflection(elems)) {
        fn(std::vector<Int>(elems));
      }
      return;
    }
    for (Int x = elems[pos - 1] + 1; x <= q - 1 - (k - 1 - pos); ++x) {
      elems[static_cast<std::size_t>(pos)] = x;
      self(self, pos + 1, std::gcd(g, x));
    }
  };
  rec(rec, 1, Int{0});
}

// Same visit set restricted to a fixed second element; lets callers shard
// the enumeration for parallel consumption.
template <class Fn>
void enumerate_canonical_sets_with_second(int k, Int q, Int second, Fn&& fn) {
  if (k < 2) throw std::invalid_argument("enumerate_canonical_sets: k >= 2");
  if (second < 1 || second > q - 1 - (k - 2)) return;
  std::vector<Int> elems(static_cast<std::size_t>(k));
  elems[0] = 0;
  elems[1] = second;
  if (k == 2) {
    if (second == 1) fn(std::vector<Int>(elems));
    return;
  }
  auto rec = [&](auto&& self, int pos, Int g) -> void {
    if (pos == k) {
      if (g == 1 && detail::gaps_le_reflection(elems)) {
        fn(std::vector<Int>(elems));
      }
      return;
    }
    for (Int x = elems[pos - 1] + 1; x <= q - 1 - (k - 1 - pos); ++x) {
      elems[static_cast<std::size_t>(pos)] = x;
      self(self, pos + 1, std::gcd(g, x));
    }
  };
  rec(rec, 2, second);
}

}  // namespace sumsetlab

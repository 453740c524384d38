#include "sumsetlab/affine.hpp"

#include <algorithm>

namespace sumsetlab {

namespace detail {

bool gaps_le_reflection(const std::vector<Int>& elems) {
  // Reflection reverses the gap sequence.
  const std::size_t m = elems.size() - 1;  // number of gaps
  for (std::size_t i = 0; i < m; ++i) {
    Int forward = elems[i + 1] - elems[i];
    Int backward = elems[m - i] - elems[m - 1 - i];
    if (forward != backward) return forward < backward;
  }
  return true;  // palindromic gaps
}

}  // namespace detail

IntSet canonicalize(const IntSet& a) {
  std::vector<Int> e = a.elements();
  if (e.size() == 1) return IntSet{0};
  Int m = e.front();
  for (Int& x : e) x -= m;
  Int g = 0;
  for (Int x : e) g = std::gcd(g, x);
  for (Int& x : e) x /= g;
  if (!detail::gaps_le_reflection(e)) {
    Int top = e.back();
    std::vector<Int> r(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      r[i] = top - e[e.size() - 1 - i];
    }
    e = std::move(r);
  }
  return IntSet(std::move(e));
}

bool is_canonical(const IntSet& a) { return canonicalize(a) == a; }

bool are_affinely_equivalent(const IntSet& a, const IntSet& b) {
  return canonicalize(a) == canonicalize(b);
}

}  // namespace sumsetlab

#include "sumsetlab/intset.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace sumsetlab {

IntSet::IntSet(std::vector<Int> elements) : elems_(std::move(elements)) {
  if (elems_.empty()) {
    throw std::invalid_argument("IntSet: set must be nonempty");
  }
  std::sort(elems_.begin(), elems_.end());
  if (std::adjacent_find(elems_.begin(), elems_.end()) != elems_.end()) {
    throw std::invalid_argument("IntSet: duplicate element");
  }
}

IntSet IntSet::interval(Int lo, Int hi) {
  if (lo > hi) {
    throw std::invalid_argument("IntSet::interval: lo > hi");
  }
  std::vector<Int> v;
  v.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (Int x = lo; x <= hi; ++x) v.push_back(x);
  return IntSet(std::move(v));
}

std::string IntSet::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) os << ',';
    os << elems_[i];
  }
  os << '}';
  return os.str();
}

void check_fold_bounds(const IntSet& a, int h) {
  if (h < 1) throw std::invalid_argument("fold count h must be >= 1");
  Int bound = std::max(std::llabs(a.min()), std::llabs(a.max()));
  Int out;
  if (__builtin_mul_overflow(bound, static_cast<Int>(h), &out)) {
    throw std::overflow_error("h * max|a| exceeds 64-bit range");
  }
}

}  // namespace sumsetlab

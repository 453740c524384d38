#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace sumsetlab {

using Int = std::int64_t;

// Thrown when a job's estimated size exceeds the configured guard.
class workload_error : public std::runtime_error {
 public:
  workload_error(const std::string& what, std::uint64_t estimate)
      : std::runtime_error(what), estimate_(estimate) {}
  std::uint64_t estimate() const { return estimate_; }

 private:
  std::uint64_t estimate_;
};

// A finite set of integers, stored strictly increasing.
class IntSet {
 public:
  // Sorts the input; throws std::invalid_argument on duplicates or empty input.
  explicit IntSet(std::vector<Int> elements);
  IntSet(std::initializer_list<Int> elements)
      : IntSet(std::vector<Int>(elements)) {}

  // The integer interval [lo, hi].
  static IntSet interval(Int lo, Int hi);

  Int k() const { return static_cast<Int>(elems_.size()); }
  Int min() const { return elems_.front(); }
  Int max() const { return elems_.back(); }
  const std::vector<Int>& elements() const { return elems_; }

  bool operator==(const IntSet& other) const = default;

  std::string to_string() const;

 private:
  std::vector<Int> elems_;
};

// Verifies h * max(|a|) fits in Int; throws std::overflow_error otherwise.
void check_fold_bounds(const IntSet& a, int h);

}  // namespace sumsetlab

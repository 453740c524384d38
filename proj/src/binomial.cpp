#include "sumsetlab/binomial.hpp"

#include <limits>
#include <stdexcept>

namespace sumsetlab {

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  if (r > n - r) r = n - r;
  // C(n-r+i, i) stays exact at every step, so the division is always integral.
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= r; ++i) {
    unsigned __int128 t = static_cast<unsigned __int128>(result) * (n - r + i);
    t /= i;
    if (t > std::numeric_limits<std::uint64_t>::max()) {
      throw std::overflow_error("binomial: result exceeds 64-bit range");
    }
    result = static_cast<std::uint64_t>(t);
  }
  return result;
}

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t r) {
  try {
    return binomial(n, r);
  } catch (const std::overflow_error&) {
    return std::numeric_limits<std::uint64_t>::max();
  }
}

std::uint64_t multiset_count(int h, std::int64_t k) {
  if (h < 1 || k < 1) {
    throw std::invalid_argument("multiset_count: h and k must be >= 1");
  }
  return binomial(static_cast<std::uint64_t>(h) + static_cast<std::uint64_t>(k) - 1,
                  static_cast<std::uint64_t>(h));
}

std::uint64_t tetrahedral(std::uint64_t j) { return binomial(j + 2, 3); }

std::uint64_t triangular(std::uint64_t t) { return binomial(t, 2); }

}  // namespace sumsetlab

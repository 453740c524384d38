#pragma once

#include <cstdint>

namespace sumsetlab {

// Exact C(n, r); throws std::overflow_error if the result exceeds 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t r);

// C(n, r), clamped to UINT64_MAX on overflow; for workload estimates.
std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t r);

// Number of size-h multisets from a k-element set: C(h+k-1, h).
// Equals C(h+k-1, k-1); both expressions appear in the literature.
std::uint64_t multiset_count(int h, std::int64_t k);

// Tet_j = C(j+2, 3), the sum of the first j triangular numbers.
std::uint64_t tetrahedral(std::uint64_t j);

// Triangular number C(t, 2).
std::uint64_t triangular(std::uint64_t t);

}  // namespace sumsetlab

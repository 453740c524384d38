#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "sumsetlab/intset.hpp"
#include "sumsetlab/sumset.hpp"

namespace sumsetlab {

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

enum class Mode { exhaustive, sampled };

// Parameters identifying one reproducible run over k-subsets of [0, q-1].
struct ExperimentSpec {
  int h = 1;
  Int k = 1;
  Int q = 1;
  Mode mode = Mode::exhaustive;
  std::uint64_t n_samples = 0;          // sampled mode only
  std::uint64_t seed = kDefaultSeed;    // sampled mode only

  bool operator==(const ExperimentSpec&) const = default;
};

// counts[t] = number of examined sets A with |hA| = t.
struct SizeDistribution {
  ExperimentSpec spec;
  std::map<Int, std::uint64_t> counts;

  std::uint64_t total_mass() const;
};

struct CollisionReport {
  ExperimentSpec spec;
  std::vector<CollisionCounts> per_set;
  // Sets with ge3 < eq2, == , > respectively; the three sum to per_set size.
  std::uint64_t n_less = 0;
  std::uint64_t n_equal = 0;
  std::uint64_t n_greater = 0;
};

// A uniformly distributed k-subset of [0, q-1]; a pure function of
// (q, k, index, seed). Distinct indices give independent streams.
IntSet sample_kset(Int q, Int k, std::uint64_t index, std::uint64_t seed);

// Exhaustive mode walks all C(q,k) subsets (no affine pruning: counts are
// per subset). Output is identical for every worker count.
SizeDistribution run_distribution(const ExperimentSpec& spec, int threads = 1,
                                  std::uint64_t guard = 1'000'000'000);

// Top-m sizes by count, descending count, ties broken toward larger size.
std::vector<std::pair<Int, std::uint64_t>> popular_sizes(
    const SizeDistribution& dist, std::size_t m);

// Absolute differences of adjacent entries; input must be strictly monotone.
std::vector<Int> successive_differences(std::span<const Int> sizes);

CollisionReport run_collision_study(const ExperimentSpec& spec, int threads = 1,
                                    std::uint64_t guard = 1'000'000'000);

}  // namespace sumsetlab

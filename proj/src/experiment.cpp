#include "sumsetlab/experiment.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "sumsetlab/binomial.hpp"
#include "sumsetlab/parallel.hpp"
#include "sumsetlab/range.hpp"
#include "sumsetlab/rng.hpp"

namespace sumsetlab {

std::uint64_t SizeDistribution::total_mass() const {
  std::uint64_t mass = 0;
  for (const auto& [t, c] : counts) mass += c;
  return mass;
}

namespace {

void validate(const ExperimentSpec& spec) {
  if (spec.h < 1 || spec.k < 1) {
    throw std::invalid_argument("experiment: h and k must be >= 1");
  }
  if (spec.q < spec.k) {
    throw std::invalid_argument("experiment: q must be >= k");
  }
  if (spec.mode == Mode::sampled && spec.n_samples == 0) {
    throw std::invalid_argument("experiment: sampled mode needs n_samples >= 1");
  }
}

// All r-subsets of [0, limit-1] appended to prefix, colex within the shard.
template <class Fn>
void for_each_subset_below(Int limit, int r, std::vector<Int>& prefix, Fn&& fn) {
  if (r == 0) {
    fn(prefix);
    return;
  }
  for (Int top = static_cast<Int>(r) - 1; top < limit; ++top) {
    prefix.push_back(top);
    for_each_subset_below(top, r - 1, prefix, fn);
    prefix.pop_back();
  }
}

}  // namespace

IntSet sample_kset(Int q, Int k, std::uint64_t index, std::uint64_t seed) {
  if (q < k || k < 1) throw std::invalid_argument("sample_kset: need q >= k >= 1");
  SplitMix64 rng = SplitMix64::for_stream(seed, index);
  // Floyd's algorithm: k draws, uniform over all C(q,k) subsets.
  std::vector<Int> chosen;
  chosen.reserve(static_cast<std::size_t>(k));
  for (Int j = q - k; j < q; ++j) {
    Int t = static_cast<Int>(rng.bounded(static_cast<std::uint64_t>(j) + 1));
    if (std::find(chosen.begin(), chosen.end(), t) != chosen.end()) {
      chosen.push_back(j);
    } else {
      chosen.push_back(t);
    }
  }
  return IntSet(std::move(chosen));
}

SizeDistribution run_distribution(const ExperimentSpec& spec, int threads,
                                  std::uint64_t guard) {
  validate(spec);
  Int fold_bound;
  if (__builtin_mul_overflow(spec.q - 1, static_cast<Int>(spec.h), &fold_bound)) {
    throw std::overflow_error("run_distribution: h*(q-1) exceeds 64-bit range");
  }
  Int lo = min_size(spec.h, spec.k);
  std::uint64_t hi64 = max_size(spec.h, spec.k);
  if (hi64 > static_cast<std::uint64_t>(lo) + (1u << 24)) {
    throw workload_error("run_distribution: size interval too large to tabulate",
                         hi64);
  }
  Int hi = static_cast<Int>(hi64);
  std::size_t width = static_cast<std::size_t>(hi - lo + 1);

  int workers = resolve_threads(threads);
  std::vector<std::vector<std::uint64_t>> histo(
      static_cast<std::size_t>(workers), std::vector<std::uint64_t>(width, 0));

  if (spec.mode == Mode::exhaustive) {
    std::uint64_t total = binomial_saturating(static_cast<std::uint64_t>(spec.q),
                                              static_cast<std::uint64_t>(spec.k));
    if (total > guard) {
      throw workload_error("run_distribution: exhaustive job too large", total);
    }
    // One task per top element; every subset is counted under its maximum.
    std::uint64_t n_tasks = static_cast<std::uint64_t>(spec.q - spec.k + 1);
    parallel_for_dynamic(n_tasks, workers, [&](int w, std::uint64_t task) {
      auto& mine = histo[static_cast<std::size_t>(w)];
      Int top = spec.k - 1 + static_cast<Int>(task);
      std::vector<Int> elems;
      elems.reserve(static_cast<std::size_t>(spec.k));
      for_each_subset_below(top, static_cast<int>(spec.k) - 1, elems,
                            [&](std::vector<Int>& rest) {
        // rest is descending; build the sorted set.
        thread_local std::vector<Int> set;
        set.assign(rest.rbegin(), rest.rend());
        set.push_back(top);
        Int t = detail::sumset_size_sorted(set, spec.h);
        ++mine[static_cast<std::size_t>(t - lo)];
      });
    });
  } else {
    std::uint64_t n = spec.n_samples;
    constexpr std::uint64_t kChunk = 1024;
    std::uint64_t n_tasks = (n + kChunk - 1) / kChunk;
    parallel_for_dynamic(n_tasks, workers, [&](int w, std::uint64_t task) {
      auto& mine = histo[static_cast<std::size_t>(w)];
      std::uint64_t begin = task * kChunk;
      std::uint64_t end = std::min(n, begin + kChunk);
      for (std::uint64_t i = begin; i < end; ++i) {
        IntSet a = sample_kset(spec.q, spec.k, i, spec.seed);
        Int t = detail::sumset_size_sorted(a.elements(), spec.h);
        ++mine[static_cast<std::size_t>(t - lo)];
      }
    });
  }

  SizeDistribution dist{spec, {}};
  for (std::size_t i = 0; i < width; ++i) {
    std::uint64_t c = 0;
    for (const auto& mine : histo) c += mine[i];
    // Exhaustive tables keep their zero rows; sampled tables list only
    // observed sizes.
    if (c > 0 || spec.mode == Mode::exhaustive) {
      dist.counts[lo + static_cast<Int>(i)] = c;
    }
  }
  return dist;
}

std::vector<std::pair<Int, std::uint64_t>> popular_sizes(
    const SizeDistribution& dist, std::size_t m) {
  std::vector<std::pair<Int, std::uint64_t>> entries;
  for (const auto& [t, c] : dist.counts) {
    if (c > 0) entries.emplace_back(t, c);
  }
  if (entries.size() < m) {
    throw std::invalid_argument("popular_sizes: fewer distinct sizes than requested");
  }
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first > b.first;
  });
  entries.resize(m);
  return entries;
}

std::vector<Int> successive_differences(std::span<const Int> sizes) {
  if (sizes.size() >= 2) {
    bool inc = sizes[1] > sizes[0];
    for (std::size_t i = 1; i < sizes.size(); ++i) {
      if ((sizes[i] > sizes[i - 1]) != inc || sizes[i] == sizes[i - 1]) {
        throw std::invalid_argument("successive_differences: input not strictly monotone");
      }
    }
  }
  std::vector<Int> out;
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    out.push_back(std::llabs(sizes[i] - sizes[i - 1]));
  }
  return out;
}

CollisionReport run_collision_study(const ExperimentSpec& spec, int threads,
                                    std::uint64_t guard) {
  validate(spec);
  std::uint64_t per_set_cost = multiset_count(spec.h, spec.k);
  CollisionReport report;
  report.spec = spec;

  if (spec.mode == Mode::exhaustive) {
    std::uint64_t n_sets = binomial_saturating(static_cast<std::uint64_t>(spec.q),
                                               static_cast<std::uint64_t>(spec.k));
    if (n_sets > guard || per_set_cost > guard / std::max<std::uint64_t>(n_sets, 1)) {
      throw workload_error("run_collision_study: exhaustive job too large",
                           n_sets * per_set_cost);
    }
    // Colex order over all subsets; sequential keeps per_set ordering simple.
    std::vector<Int> elems;
    for (Int top = spec.k - 1; top < spec.q; ++top) {
      for_each_subset_below(top, static_cast<int>(spec.k) - 1, elems,
                            [&](std::vector<Int>& rest) {
        std::vector<Int> set(rest.rbegin(), rest.rend());
        set.push_back(top);
        report.per_set.push_back(
            collision_counts(IntSet(std::move(set)), spec.h, guard));
      });
    }
  } else {
    if (per_set_cost > guard / std::max<std::uint64_t>(spec.n_samples, 1)) {
      throw workload_error("run_collision_study: sampled job too large",
                           spec.n_samples * per_set_cost);
    }
    report.per_set.resize(spec.n_samples);
    int workers = resolve_threads(threads);
    constexpr std::uint64_t kChunk = 64;
    std::uint64_t n_tasks = (spec.n_samples + kChunk - 1) / kChunk;
    parallel_for_dynamic(n_tasks, workers, [&](int, std::uint64_t task) {
      std::uint64_t begin = task * kChunk;
      std::uint64_t end = std::min(spec.n_samples, begin + kChunk);
      for (std::uint64_t i = begin; i < end; ++i) {
        IntSet a = sample_kset(spec.q, spec.k, i, spec.seed);
        report.per_set[i] = collision_counts(a, spec.h, guard);
      }
    });
  }

  for (const auto& cc : report.per_set) {
    if (cc.ge3 < cc.eq2) {
      ++report.n_less;
    } else if (cc.ge3 == cc.eq2) {
      ++report.n_equal;
    } else {
      ++report.n_greater;
    }
  }
  return report;
}

}  // namespace sumsetlab

#include "sumsetlab/verify.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "sumsetlab/affine.hpp"
#include "sumsetlab/binomial.hpp"
#include "sumsetlab/experiment.hpp"
#include "sumsetlab/range.hpp"
#include "sumsetlab/sumset.hpp"

namespace sumsetlab {

const std::vector<std::int64_t> kWorkedExampleSet = {
    0, 897, 2056, 2441, 2988, 3259, 5294, 6506, 8013, 9391, 9872};

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass; });
}

namespace {

// Two-column integer CSV with one header line.
std::vector<std::pair<Int, Int>> load_pairs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture: " + path);
  std::vector<std::pair<Int, Int>> rows;
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto comma = line.find(',');
    rows.emplace_back(std::stoll(line.substr(0, comma)),
                      std::stoll(line.substr(comma + 1)));
  }
  return rows;
}

template <class T>
std::string join(const T& xs) {
  std::ostringstream os;
  bool first = true;
  for (const auto& x : xs) {
    if (!first) os << ',';
    os << x;
    first = false;
  }
  return os.str();
}

}  // namespace

std::vector<CheckResult> verify_a0(const std::string& data_dir) {
  std::vector<CheckResult> out;
  IntSet a0{std::vector<Int>(kWorkedExampleSet.begin(), kWorkedExampleSet.end())};
  auto golden = load_pairs(data_dir + "/a0.csv");

  std::vector<Int> computed, expected;
  for (const auto& [h, size] : golden) {
    computed.push_back(sumset_size(a0, static_cast<int>(h)));
    expected.push_back(size);
  }
  out.push_back({"a0 sumset sizes h=1..7", computed == expected,
                 "computed " + join(computed) + " expected " + join(expected)});

  RepHistogram hist = representation_histogram(a0, 3);
  std::vector<Int> doubled;
  bool others_simple = true;
  for (const auto& [n, c] : hist.counts) {
    if (c == 2) doubled.push_back(n);
    else if (c != 1) others_simple = false;
  }
  bool unique_double = doubled == std::vector<Int>{18782} && others_simple;
  out.push_back({"a0 triple-sum collision at 18782", unique_double,
                 "elements with two representations: " + join(doubled)});
  out.push_back({"a0 is Sidon, not B3",
                 is_bh_set(a0, 2) && !is_bh_set(a0, 3), ""});
  return out;
}

std::vector<CheckResult> verify_experiment1(const std::string& data_dir,
                                            int threads) {
  std::vector<CheckResult> out;
  auto golden = load_pairs(data_dir + "/experiment1_q100.csv");
  ExperimentSpec spec{5, 4, 100, Mode::exhaustive};
  SizeDistribution dist = run_distribution(spec, threads);

  std::size_t mismatches = 0;
  std::ostringstream diff;
  for (const auto& [t, count] : golden) {
    auto it = dist.counts.find(t);
    std::uint64_t got = it == dist.counts.end() ? 0 : it->second;
    if (got != static_cast<std::uint64_t>(count)) {
      ++mismatches;
      diff << " t=" << t << " got=" << got << " want=" << count;
    }
  }
  out.push_back({"experiment1 all 41 rows",
                 mismatches == 0 && dist.counts.size() == golden.size(),
                 mismatches ? diff.str() : "41/41 rows"});
  out.push_back({"experiment1 total mass 3921225", dist.total_mass() == 3921225,
                 "total " + std::to_string(dist.total_mass())});
  return out;
}

std::vector<CheckResult> verify_ranges(int threads) {
  std::vector<CheckResult> out;

  RangeResult r33 = exhaustive_range(3, 3, 2304, threads);
  out.push_back({"range (3,3) proof-grade {7,9,10}, 8 missing",
                 r33.achieved == std::vector<Int>{7, 9, 10} &&
                     r33.missing == std::vector<Int>{8} && r33.proof_grade,
                 "achieved " + join(r33.achieved)});

  for (int h = 3; h <= 5; ++h) {
    Int q = static_cast<Int>(complexity_bound(h, 3));
    RangeResult r = exhaustive_range(h, 3, q, threads);
    auto closed = closed_form_range(h, 3);
    bool pass = closed && r.achieved == *closed &&
                r.achieved.size() == static_cast<std::size_t>(h) && r.proof_grade;
    out.push_back({"range (h=" + std::to_string(h) + ",k=3) matches closed form",
                   pass, "achieved " + join(r.achieved)});
  }

  for (Int k = 3; k <= 8; ++k) {
    RangeResult r = exhaustive_range(2, k, 6 * k, threads);
    auto closed = closed_form_range(2, k);
    bool pass = closed && r.achieved == *closed;
    out.push_back({"range (h=2,k=" + std::to_string(k) + ") full interval", pass,
                   "achieved " + join(r.achieved)});
  }
  return out;
}

std::vector<CheckResult> verify_triangular(const std::string& data_dir,
                                           int threads) {
  std::vector<CheckResult> out;
  auto golden = load_pairs(data_dir + "/popular_sizes.csv");

  for (int h = 2; h <= 9; ++h) {
    ExperimentSpec spec{h, 4, 10'000, Mode::sampled, 100'000, kDefaultSeed};
    SizeDistribution dist = run_distribution(spec, threads);
    auto top = popular_sizes(dist, static_cast<std::size_t>(h));

    std::set<Int> observed;
    for (const auto& [t, c] : top) observed.insert(t);
    std::set<Int> predicted;
    for (Int t : predicted_popular_sizes(h)) predicted.insert(t);
    std::set<Int> paper;
    for (const auto& [hh, size] : golden) {
      if (hh == h) paper.insert(size);
    }

    bool sets_match = observed == predicted && observed == paper;
    out.push_back({"popular sizes h=" + std::to_string(h), sets_match,
                   "observed {" + join(observed) + "} predicted {" +
                       join(predicted) + "}"});

    std::vector<Int> ascending(observed.begin(), observed.end());
    std::vector<Int> diffs = successive_differences(ascending);
    // h-1 gaps: C(h,2), ..., C(3,2), C(2,2).
    std::vector<Int> want;
    for (int t = h; t >= 2; --t) {
      want.push_back(static_cast<Int>(triangular(static_cast<std::uint64_t>(t))));
    }
    out.push_back({"popular-size differences h=" + std::to_string(h),
                   diffs == want, "diffs " + join(diffs)});
  }
  return out;
}

std::vector<CheckResult> verify_collisions() {
  std::vector<CheckResult> out;
  bool counts_ok = true;
  bool formula_ok = true;
  std::ostringstream diff;
  for (Int k = 7; k <= 20; ++k) {
    IntSet a = IntSet::interval(0, k - 1);
    CollisionCounts cc = collision_counts(a, 2);
    // From the piecewise formula: eq2 = 4, ge3 = #{4 <= n <= 2k-6} = 2k-9,
    // which exceeds eq2 for every k >= 7.
    if (cc.eq2 != 4 || cc.ge3 != static_cast<std::uint64_t>(2 * k - 9) ||
        cc.ge3 <= cc.eq2) {
      counts_ok = false;
      diff << " k=" << k << " eq2=" << cc.eq2 << " ge3=" << cc.ge3;
    }
    RepHistogram hist = representation_histogram(a, 2);
    for (Int n = -2; n <= 2 * k; ++n) {
      auto it = hist.counts.find(n);
      std::uint64_t brute = it == hist.counts.end() ? 0 : it->second;
      if (brute != interval_rep2(k, n)) {
        formula_ok = false;
        diff << " rep2 mismatch k=" << k << " n=" << n;
      }
    }
  }
  out.push_back({"interval collisions ge3 > eq2 for k in [7,20]", counts_ok,
                 diff.str()});
  out.push_back({"interval_rep2 matches brute-force histogram", formula_ok,
                 diff.str()});

  ExperimentSpec degenerate{2, 7, 7, Mode::exhaustive};
  CollisionReport report = run_collision_study(degenerate);
  out.push_back({"degenerate interval study reports ge3 > eq2",
                 report.per_set.size() == 1 && report.n_greater == 1 &&
                     report.per_set[0].eq2 == 4 && report.per_set[0].ge3 == 5,
                 ""});
  return out;
}

}  // namespace sumsetlab

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "sumsetlab/affine.hpp"
#include "sumsetlab/binomial.hpp"
#include "sumsetlab/experiment.hpp"
#include "sumsetlab/io.hpp"
#include "sumsetlab/parallel.hpp"
#include "sumsetlab/range.hpp"
#include "sumsetlab/sumset.hpp"
#include "sumsetlab/verify.hpp"

#ifndef SUMSETLAB_DATA_DIR
#define SUMSETLAB_DATA_DIR "data"
#endif

namespace {

using namespace sumsetlab;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitWorkload = 3;

int effective_threads(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("SUMSETLAB_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return resolve_threads(0);
}

void write_output(const std::string& text, const std::string& out_file) {
  if (out_file.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_file);
  if (!out) throw std::runtime_error("cannot open output file: " + out_file);
  out << text;
}

std::vector<Int> parse_set_arg(const std::string& arg) {
  std::vector<Int> elems;
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    Int v = std::stoll(item, &pos);
    if (pos != item.size()) {
      throw std::invalid_argument("cannot parse element '" + item + "'");
    }
    elems.push_back(v);
  }
  if (elems.empty()) throw std::invalid_argument("empty set argument");
  return elems;
}

int cmd_eval(const std::string& set_arg, int h, bool show_elements,
             bool show_histogram, OutputFormat, const std::string& out_file) {
  IntSet a(parse_set_arg(set_arg));
  std::ostringstream os;
  os << "|"  << h << "A| = " << sumset_size(a, h) << '\n';
  if (show_elements) {
    os << h_fold_sumset(a, h).to_string() << '\n';
  }
  if (show_histogram) {
    RepHistogram hist = representation_histogram(a, h);
    os << "n,r\n";
    for (const auto& [n, c] : hist.counts) os << n << ',' << c << '\n';
  }
  write_output(os.str(), out_file);
  return kExitOk;
}

int cmd_range(int h, Int k, std::optional<Int> q, bool use_bound,
              OutputFormat fmt, int threads, std::uint64_t guard,
              const std::string& out_file) {
  Int window;
  if (use_bound) {
    window = static_cast<Int>(complexity_bound(h, k));
  } else if (q) {
    window = *q;
  } else {
    std::cerr << "range: pass either --q or --use-bound\n";
    return kExitUsage;
  }
  RangeResult result = exhaustive_range(h, k, window, threads, guard);
  write_output(format_range(result, fmt), out_file);
  return kExitOk;
}

int cmd_distribution(const ExperimentSpec& spec, OutputFormat fmt, int threads,
                     std::uint64_t guard, const std::string& out_file) {
  SizeDistribution dist = run_distribution(spec, threads, guard);
  write_output(format_distribution(dist, fmt), out_file);
  return kExitOk;
}

int cmd_popular(int h_min, int h_max, Int k, Int q, std::uint64_t n,
                std::uint64_t seed, OutputFormat fmt, int threads,
                std::uint64_t guard, const std::string& out_file) {
  std::vector<PopularRow> rows;
  std::ostringstream diff_lines;
  for (int h = h_min; h <= h_max; ++h) {
    ExperimentSpec spec{h, k, q, Mode::sampled, n, seed};
    SizeDistribution dist = run_distribution(spec, threads, guard);
    auto top = popular_sizes(dist, static_cast<std::size_t>(h));
    std::vector<Int> predicted = predicted_popular_sizes(h);
    std::vector<Int> ascending;
    for (std::size_t r = 0; r < top.size(); ++r) {
      rows.push_back({h, static_cast<int>(r) + 1, top[r].first, top[r].second,
                      predicted[r], top[r].first == predicted[r]});
      ascending.push_back(top[r].first);
    }
    std::sort(ascending.begin(), ascending.end());
    diff_lines << "# h=" << h << " differences:";
    for (Int d : successive_differences(ascending)) diff_lines << ' ' << d;
    diff_lines << '\n';
  }
  std::string text = format_popular(rows, fmt);
  if (fmt != OutputFormat::json) text += diff_lines.str();
  write_output(text, out_file);
  return kExitOk;
}

int cmd_verify(const std::string& bundle, const std::string& data_dir,
               int threads) {
  std::vector<CheckResult> results;
  if (bundle == "a0") {
    results = verify_a0(data_dir);
  } else if (bundle == "experiment1") {
    results = verify_experiment1(data_dir, threads);
  } else if (bundle == "ranges") {
    results = verify_ranges(threads);
  } else if (bundle == "triangular") {
    results = verify_triangular(data_dir, threads);
  } else if (bundle == "collisions") {
    results = verify_collisions();
  } else {
    std::cerr << "verify: unknown case '" << bundle
              << "' (a0|experiment1|ranges|triangular|collisions)\n";
    return kExitUsage;
  }
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
    if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
    std::cout << '\n';
  }
  return all_passed(results) ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sumsetlab: h-fold sumset sizes, ranges, and experiments"};
  app.require_subcommand(1);
  // --h is a domain flag (fold count), so help is long-form only.
  app.set_help_flag("--help", "print help");

  int threads_flag = 0;
  std::string format_str = "csv";
  std::string out_file;
  std::uint64_t guard = 1'000'000'000;
  app.add_option("--threads", threads_flag, "worker threads (0 = auto)");
  app.add_option("--format", format_str, "csv|json|table")->capture_default_str();
  app.add_option("--out", out_file, "write output to FILE instead of stdout");
  app.add_option("--guard", guard, "workload guard (max enumerated items)");

  auto* eval = app.add_subcommand("eval", "size and histogram of hA for one set");
  std::string set_arg;
  int eval_h = 1;
  bool show_elements = false, show_histogram = false;
  eval->add_option("--set", set_arg, "comma-separated integers")->required();
  eval->add_option("--h", eval_h, "fold count")->required()
      ->check(CLI::PositiveNumber);
  eval->add_flag("--elements", show_elements, "print the sumset elements");
  eval->add_flag("--histogram", show_histogram, "print the representation function");

  auto* range = app.add_subcommand("range", "achieved sumset sizes over a window");
  int range_h = 1;
  Int range_k = 2;
  Int range_q = 0;
  bool use_bound = false;
  range->add_option("--h", range_h)->required()->check(CLI::PositiveNumber);
  range->add_option("--k", range_k)->required()->check(CLI::PositiveNumber);
  auto* q_opt = range->add_option("--q", range_q, "window [0, q-1]");
  range->add_flag("--use-bound", use_bound,
                  "window from the complexity bound (needs h,k >= 3)")
      ->excludes(q_opt);

  auto* dist = app.add_subcommand("distribution", "distribution of |hA| over k-sets");
  ExperimentSpec spec;
  std::string mode_str = "exhaustive";
  dist->add_option("--h", spec.h)->required()->check(CLI::PositiveNumber);
  dist->add_option("--k", spec.k)->required()->check(CLI::PositiveNumber);
  dist->add_option("--q", spec.q)->required()->check(CLI::PositiveNumber);
  dist->add_option("--mode", mode_str, "exhaustive|sampled")->capture_default_str();
  dist->add_option("--n", spec.n_samples, "sample count (sampled mode)");
  dist->add_option("--seed", spec.seed, "RNG seed (sampled mode)")
      ->capture_default_str();

  auto* popular = app.add_subcommand("popular", "popular sizes vs the tetrahedral prediction");
  int h_min = 2, h_max = 9;
  Int pop_k = 4, pop_q = 10'000;
  std::uint64_t pop_n = 100'000, pop_seed = kDefaultSeed;
  popular->add_option("--h-min", h_min)->capture_default_str();
  popular->add_option("--h-max", h_max)->capture_default_str();
  popular->add_option("--k", pop_k)->capture_default_str();
  popular->add_option("--q", pop_q)->capture_default_str();
  popular->add_option("--n", pop_n)->capture_default_str();
  popular->add_option("--seed", pop_seed)->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run a bundled acceptance case");
  std::string bundle;
  std::string data_dir = SUMSETLAB_DATA_DIR;
  verify->add_option("case", bundle,
                     "a0|experiment1|ranges|triangular|collisions")->required();
  verify->add_option("--data-dir", data_dir, "golden fixture directory")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    OutputFormat fmt = parse_output_format(format_str);
    int threads = effective_threads(threads_flag);
    if (eval->parsed()) {
      return cmd_eval(set_arg, eval_h, show_elements, show_histogram, fmt, out_file);
    }
    if (range->parsed()) {
      std::optional<Int> q;
      if (q_opt->count() > 0) q = range_q;
      return cmd_range(range_h, range_k, q, use_bound, fmt, threads, guard, out_file);
    }
    if (dist->parsed()) {
      spec.mode = mode_from_string(mode_str);
      if (spec.mode == Mode::sampled && spec.n_samples == 0) {
        std::cerr << "distribution: sampled mode needs --n >= 1\n";
        return kExitUsage;
      }
      return cmd_distribution(spec, fmt, threads, guard, out_file);
    }
    if (popular->parsed()) {
      return cmd_popular(h_min, h_max, pop_k, pop_q, pop_n, pop_seed, fmt,
                         threads, guard, out_file);
    }
    if (verify->parsed()) {
      return cmd_verify(bundle, data_dir, threads);
    }
  } catch (const workload_error& e) {
    std::cerr << "workload guard: " << e.what()
              << " (estimated items: " << e.estimate() << ")\n";
    return kExitWorkload;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

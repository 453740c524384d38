#include "sumsetlab/io.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace sumsetlab {

namespace {

using nlohmann::json;

std::string spec_header(const ExperimentSpec& spec) {
  std::ostringstream os;
  os << "# h=" << spec.h << ",k=" << spec.k << ",q=" << spec.q
     << ",mode=" << mode_to_string(spec.mode) << ",n=" << spec.n_samples
     << ",seed=" << spec.seed << ",tool-version=" << kToolVersion << '\n';
  return os.str();
}

json spec_json(const ExperimentSpec& spec) {
  return json{{"h", spec.h},
              {"k", spec.k},
              {"q", spec.q},
              {"mode", mode_to_string(spec.mode)},
              {"n_samples", spec.n_samples},
              {"seed", spec.seed},
              {"tool_version", kToolVersion}};
}

std::uint64_t parse_u64(const std::string& s) {
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) {
    throw std::invalid_argument("parse error: bad integer '" + s + "'");
  }
  return v;
}

Int parse_i64(const std::string& s) {
  Int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) {
    throw std::invalid_argument("parse error: bad integer '" + s + "'");
  }
  return v;
}

}  // namespace

OutputFormat parse_output_format(const std::string& s) {
  if (s == "csv") return OutputFormat::csv;
  if (s == "json") return OutputFormat::json;
  if (s == "table") return OutputFormat::table;
  throw std::invalid_argument("unknown output format: " + s);
}

std::string mode_to_string(Mode mode) {
  return mode == Mode::exhaustive ? "exhaustive" : "sampled";
}

Mode mode_from_string(const std::string& s) {
  if (s == "exhaustive") return Mode::exhaustive;
  if (s == "sampled") return Mode::sampled;
  throw std::invalid_argument("unknown mode: " + s);
}

std::string format_distribution(const SizeDistribution& dist, OutputFormat fmt) {
  if (fmt == OutputFormat::json) {
    json counts = json::array();
    for (const auto& [t, c] : dist.counts) counts.push_back({t, c});
    json out{{"spec", spec_json(dist.spec)},
             {"total", dist.total_mass()},
             {"counts", counts}};
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  if (fmt == OutputFormat::csv) {
    os << spec_header(dist.spec);
    os << "# total=" << dist.total_mass() << '\n';
    os << "t,count\n";
    for (const auto& [t, c] : dist.counts) os << t << ',' << c << '\n';
  } else {
    os << "size distribution  h=" << dist.spec.h << " k=" << dist.spec.k
       << " q=" << dist.spec.q << " mode=" << mode_to_string(dist.spec.mode);
    if (dist.spec.mode == Mode::sampled) {
      os << " n=" << dist.spec.n_samples << " seed=" << dist.spec.seed;
    }
    os << "\n     t       count\n";
    for (const auto& [t, c] : dist.counts) {
      os.width(6);
      os << t;
      os.width(12);
      os << c << '\n';
    }
    os << "total: " << dist.total_mass() << '\n';
  }
  return os.str();
}

SizeDistribution parse_distribution_csv(const std::string& text) {
  SizeDistribution dist;
  std::istringstream is(text);
  std::string line;
  bool saw_header = false;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      // First comment line carries the experiment parameters.
      std::istringstream ls(line.substr(1));
      std::string field;
      while (std::getline(ls, field, ',')) {
        auto eq = field.find('=');
        if (eq == std::string::npos) continue;
        std::string key = field.substr(0, eq);
        while (!key.empty() && key.front() == ' ') key.erase(key.begin());
        std::string value = field.substr(eq + 1);
        if (key == "h") dist.spec.h = static_cast<int>(parse_i64(value));
        else if (key == "k") dist.spec.k = parse_i64(value);
        else if (key == "q") dist.spec.q = parse_i64(value);
        else if (key == "mode") dist.spec.mode = mode_from_string(value);
        else if (key == "n") dist.spec.n_samples = parse_u64(value);
        else if (key == "seed") dist.spec.seed = parse_u64(value);
      }
      continue;
    }
    if (!saw_header) {
      if (line != "t,count") {
        throw std::invalid_argument("parse error: expected 't,count' header");
      }
      saw_header = true;
      continue;
    }
    auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument("parse error: expected 't,count' row");
    }
    dist.counts[parse_i64(line.substr(0, comma))] =
        parse_u64(line.substr(comma + 1));
  }
  return dist;
}

std::string format_range(const RangeResult& result, OutputFormat fmt) {
  if (fmt == OutputFormat::json) {
    json out{{"h", result.h},
             {"k", result.k},
             {"window_q", result.window_q},
             {"achieved", result.achieved},
             {"missing", result.missing},
             {"proof_grade", result.proof_grade},
             {"tool_version", kToolVersion}};
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  if (fmt == OutputFormat::csv) {
    os << "# h=" << result.h << ",k=" << result.k << ",q=" << result.window_q
       << ",proof_grade=" << (result.proof_grade ? "true" : "false")
       << ",tool-version=" << kToolVersion << '\n';
    os << "size,achieved\n";
    std::size_t ai = 0;
    auto emit = [&](Int t, bool hit) { os << t << ',' << (hit ? 1 : 0) << '\n'; };
    std::size_t mi = 0;
    while (ai < result.achieved.size() || mi < result.missing.size()) {
      if (mi >= result.missing.size() ||
          (ai < result.achieved.size() && result.achieved[ai] < result.missing[mi])) {
        emit(result.achieved[ai++], true);
      } else {
        emit(result.missing[mi++], false);
      }
    }
  } else {
    os << "R(h=" << result.h << ", k=" << result.k << ") over [0," << result.window_q - 1
       << "]  proof_grade=" << (result.proof_grade ? "true" : "false") << '\n';
    os << "achieved:";
    for (Int t : result.achieved) os << ' ' << t;
    os << "\nmissing:";
    for (Int t : result.missing) os << ' ' << t;
    os << '\n';
  }
  return os.str();
}

std::string format_popular(const std::vector<PopularRow>& rows, OutputFormat fmt) {
  if (fmt == OutputFormat::json) {
    json out = json::array();
    for (const auto& r : rows) {
      out.push_back({{"h", r.h},
                     {"rank", r.rank},
                     {"size", r.size},
                     {"count", r.count},
                     {"predicted", r.predicted},
                     {"match", r.match}});
    }
    return json{{"rows", out}, {"tool_version", kToolVersion}}.dump(2) + "\n";
  }
  std::ostringstream os;
  if (fmt == OutputFormat::csv) {
    os << "# tool-version=" << kToolVersion << '\n';
    os << "h,rank,size,count,predicted,match\n";
    for (const auto& r : rows) {
      os << r.h << ',' << r.rank << ',' << r.size << ',' << r.count << ','
         << r.predicted << ',' << (r.match ? "MATCH" : "MISMATCH") << '\n';
    }
  } else {
    os << "  h rank  size       count  predicted  match\n";
    for (const auto& r : rows) {
      os.width(3);
      os << r.h;
      os.width(5);
      os << r.rank;
      os.width(6);
      os << r.size;
      os.width(12);
      os << r.count;
      os.width(11);
      os << r.predicted << "  " << (r.match ? "MATCH" : "MISMATCH") << '\n';
    }
  }
  return os.str();
}

std::string format_collisions(const CollisionReport& report, OutputFormat fmt) {
  if (fmt == OutputFormat::json) {
    json out{{"spec", spec_json(report.spec)},
             {"sets", report.per_set.size()},
             {"ge3_lt_eq2", report.n_less},
             {"ge3_eq_eq2", report.n_equal},
             {"ge3_gt_eq2", report.n_greater}};
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  if (fmt == OutputFormat::csv) {
    os << spec_header(report.spec);
    os << "# sets=" << report.per_set.size() << '\n';
    os << "comparison,count\n";
    os << "ge3_lt_eq2," << report.n_less << '\n';
    os << "ge3_eq_eq2," << report.n_equal << '\n';
    os << "ge3_gt_eq2," << report.n_greater << '\n';
  } else {
    os << "collision study over " << report.per_set.size() << " sets  (h="
       << report.spec.h << ", k=" << report.spec.k << ", q=" << report.spec.q
       << ")\n";
    os << "  ge3 < eq2: " << report.n_less << '\n';
    os << "  ge3 = eq2: " << report.n_equal << '\n';
    os << "  ge3 > eq2: " << report.n_greater << '\n';
  }
  return os.str();
}

}  // namespace sumsetlab

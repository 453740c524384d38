#pragma once

#include <string>
#include <vector>

#include "sumsetlab/experiment.hpp"
#include "sumsetlab/range.hpp"

namespace sumsetlab {

inline constexpr const char* kToolVersion = "0.1.0";

enum class OutputFormat { csv, json, table };

OutputFormat parse_output_format(const std::string& s);

std::string mode_to_string(Mode mode);
Mode mode_from_string(const std::string& s);

// distribution schema: `t,count`, sorted by t, with `#` comment headers
// carrying the experiment parameters and the total mass.
std::string format_distribution(const SizeDistribution& dist, OutputFormat fmt);
SizeDistribution parse_distribution_csv(const std::string& text);

// range schema: `size,achieved` over the whole feasible interval.
std::string format_range(const RangeResult& result, OutputFormat fmt);

struct PopularRow {
  int h;
  int rank;  // 1-based, by descending count
  Int size;
  std::uint64_t count;
  Int predicted;
  bool match;
};

// popular schema: `h,rank,size,count,predicted,match`.
std::string format_popular(const std::vector<PopularRow>& rows, OutputFormat fmt);

std::string format_collisions(const CollisionReport& report, OutputFormat fmt);

}  // namespace sumsetlab

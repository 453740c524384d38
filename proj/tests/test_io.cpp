#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sumsetlab/io.hpp"

using namespace sumsetlab;

TEST_CASE("distribution CSV round-trips exactly") {
  SizeDistribution dist = run_distribution({5, 4, 30, Mode::exhaustive});
  std::string csv = format_distribution(dist, OutputFormat::csv);
  SizeDistribution parsed = parse_distribution_csv(csv);
  CHECK(parsed.spec == dist.spec);
  CHECK(parsed.counts == dist.counts);

  SizeDistribution sampled =
      run_distribution({3, 4, 200, Mode::sampled, 1000, 0xC0FFEE});
  SizeDistribution parsed2 =
      parse_distribution_csv(format_distribution(sampled, OutputFormat::csv));
  CHECK(parsed2.spec == sampled.spec);
  CHECK(parsed2.counts == sampled.counts);
}

TEST_CASE("distribution CSV carries parameters and totals as comments") {
  SizeDistribution dist = run_distribution({2, 3, 10, Mode::exhaustive});
  std::string csv = format_distribution(dist, OutputFormat::csv);
  CHECK(csv.find("# h=2,k=3,q=10,mode=exhaustive") == 0);
  CHECK(csv.find("# total=120") != std::string::npos);
  CHECK(csv.find("t,count\n") != std::string::npos);
}

TEST_CASE("CSV parse errors") {
  CHECK_THROWS_AS(parse_distribution_csv("nonsense\n1,2\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_distribution_csv("t,count\n1;2\n"), std::invalid_argument);
}

TEST_CASE("range CSV covers the whole interval") {
  RangeResult r{3, 3, 20, {7, 9, 10}, {8}, false};
  std::string csv = format_range(r, OutputFormat::csv);
  CHECK(csv.find("size,achieved\n7,1\n8,0\n9,1\n10,1\n") != std::string::npos);
  CHECK(csv.find("proof_grade=false") != std::string::npos);
}

TEST_CASE("popular CSV schema") {
  std::vector<PopularRow> rows{{5, 1, 56, 142020, 56, true},
                               {5, 2, 55, 3251, 55, true}};
  std::string csv = format_popular(rows, OutputFormat::csv);
  CHECK(csv.find("h,rank,size,count,predicted,match\n") != std::string::npos);
  CHECK(csv.find("5,1,56,142020,56,MATCH\n") != std::string::npos);
}

TEST_CASE("json output mirrors the field names") {
  SizeDistribution dist = run_distribution({2, 3, 10, Mode::exhaustive});
  std::string js = format_distribution(dist, OutputFormat::json);
  CHECK(js.find("\"mode\": \"exhaustive\"") != std::string::npos);
  CHECK(js.find("\"counts\"") != std::string::npos);

  RangeResult r{3, 3, 20, {7, 9, 10}, {8}, false};
  std::string rjs = format_range(r, OutputFormat::json);
  CHECK(rjs.find("\"proof_grade\": false") != std::string::npos);
}

TEST_CASE("format parsing") {
  CHECK(parse_output_format("csv") == OutputFormat::csv);
  CHECK(parse_output_format("json") == OutputFormat::json);
  CHECK(parse_output_format("table") == OutputFormat::table);
  CHECK_THROWS_AS(parse_output_format("xml"), std::invalid_argument);
  CHECK(mode_from_string("sampled") == Mode::sampled);
  CHECK_THROWS_AS(mode_from_string("woops"), std::invalid_argument);
}

#include <gtest/gtest.h>

#include <cmath>

#include "modwave/report.hpp"

using namespace modwave;

namespace {

std::string strip_timing(const std::string& csv) {
  std::string out;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    std::size_t end = csv.find('\n', pos);
    std::string line = csv.substr(pos, end - pos);
    if (!line.empty() && line[0] != '#') line = line.substr(0, line.rfind(','));
    out += line + "\n";
    pos = end + 1;
  }
  return out;
}

AnalysisRequest sweep_request(int jobs) {
  AnalysisRequest r;
  r.mode = Mode::Sweep;
  r.equation = "kdv";
  r.grid_a = {-0.6, -0.3, 3};
  r.grid_E = {-0.05, 0.05, 3};
  r.grid_c = {-1.5, -1.0, 2};
  r.jobs = jobs;
  return r;
}

}  // namespace

TEST(Record, JsonRoundTrip) {
  const ReportRecord r = make_record("kdv", kdv_params_from_roots(3, 1, 0));
  EXPECT_EQ(r.classification, "Stable");
  EXPECT_EQ(r.fingerprint, convention_fingerprint());
  EXPECT_EQ(record_from_json(to_json(r)), r);
}

TEST(Record, ErrorRecordRoundTrip) {
  const ReportRecord r = make_record("kdv", {-1, 0, 0, 0});
  EXPECT_EQ(exit_code(r), r.classification == "Degenerate" ? 20 : 1);
  EXPECT_EQ(record_from_json(to_json(r)), r);
  const ReportRecord bad = make_record("nope", {0, 0, 0, 0});
  EXPECT_EQ(bad.classification, "Error");
  EXPECT_EQ(bad.error_code, "ConfigError");
  EXPECT_EQ(exit_code(bad), 1);
}

TEST(Record, ExitCodes) {
  EXPECT_EQ(exit_code(make_record("kdv", kdv_params_from_roots(3, 1, 0))), 0);
  EXPECT_EQ(exit_code(make_record("mkdv-focusing", {0, 0.5, -1, 0})), 10);
  EXPECT_EQ(exit_code(make_record("kdv", {0, 0, -1, 0})), 20);
}

TEST(Csv, QuotingAndSchema) {
  EXPECT_EQ(csv_quote("plain"), "plain");
  EXPECT_EQ(csv_quote("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_quote("say \"hi\""), "\"say \"\"hi\"\"\"");
  EXPECT_EQ(csv_schema_line().rfind("#schema=", 0), 0u);
  EXPECT_EQ(format_number(0.1), "0.10000000000000001");
  EXPECT_EQ(std::stod(format_number(M_PI)), M_PI);
}

TEST(Csv, ColumnsFixed) {
  const std::string h = csv_header();
  const std::string row = to_csv_row(make_record("kdv", kdv_params_from_roots(3, 1, 0)));
  EXPECT_EQ(std::count(h.begin(), h.end(), ','), std::count(row.begin(), row.end(), ','));
}

TEST(Sweep, DeterministicAcrossJobCounts) {
  const auto a = run_sweep(sweep_request(1));
  const auto b = run_sweep(sweep_request(4));
  ASSERT_EQ(a.size(), 18u);
  EXPECT_EQ(strip_timing(to_csv(a)), strip_timing(to_csv(b)));
  EXPECT_DOUBLE_EQ(a[0].a, -0.6);
  EXPECT_DOUBLE_EQ(a[1].c, -1.0);  // c varies fastest
  const auto back = records_from_json(to_json(b));
  ASSERT_EQ(back.size(), b.size());
  for (std::size_t i = 0; i < b.size(); ++i) EXPECT_EQ(back[i], b[i]);
}

TEST(Config, Parses) {
  const AnalysisRequest r = parse_request(
      R"({"equation": "mkdv-focusing", "params": {"a": 0, "E": 0.5, "c": -1},
          "tolerances": {"quad": 1e-10}, "format": "csv", "jobs": 2})",
      Mode::Classify);
  EXPECT_EQ(r.equation, "mkdv-focusing");
  EXPECT_EQ(r.params.E, 0.5);
  EXPECT_EQ(r.tol.quad, 1e-10);
  EXPECT_EQ(r.format, "csv");
}

TEST(Config, FieldDiagnostics) {
  auto message = [](const std::string& text) {
    try {
      parse_request(text, Mode::Classify);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ConfigError);
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_NE(message(R"({"params": {"a": "x"}})").find("params.a"), std::string::npos);
  EXPECT_NE(message(R"({"tolerances": {"quad": -1}})").find("tolerances.quad"), std::string::npos);
  EXPECT_NE(message(R"({"grid": {"E": [0, 1, 0]}})").find("grid.E"), std::string::npos);
  EXPECT_NE(message(R"({"colour": 1})").find("colour"), std::string::npos);
  EXPECT_NE(message("{\n  \"params\": {\"a\": 1,,}\n}").find("line 2"), std::string::npos);
}

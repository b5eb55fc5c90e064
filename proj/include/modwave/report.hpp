#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "modwave/mi_index.hpp"

namespace modwave {

inline constexpr const char* kSchema = "modwave-report/1";
inline constexpr const char* kVersion = "0.1.0";

// One classified parameter point, flattened for CSV/JSON emission.
struct ReportRecord {
  std::string schema = kSchema;
  std::string version = kVersion;
  std::string fingerprint;
  std::string equation;
  int branch = 0;
  double a = 0.0, E = 0.0, c = 0.0;
  std::string classification;  // Stable, Unstable, Degenerate, HypothesisFailed or Error
  std::string error_code;
  std::string message;
  double delta_mi = 0.0, tol_deg = 0.0;
  double T = 0.0, M = 0.0, P = 0.0;
  double T_E = 0.0, TM_aE = 0.0, TMP_aEc = 0.0, TP_Ec = 0.0, MP_aE = 0.0;
  double cond = 0.0;
  Roots3 mu{};
  Roots3 slopes{};
  double elapsed_ms = 0.0;

  // Field-wise equality; NaN equals NaN.
  bool operator==(const ReportRecord& o) const;
};

// Exit code contract: 0 Stable, 10 Unstable, 20 Degenerate, 30 HypothesisFailed, 1 error.
int exit_code(const ReportRecord& r);

ReportRecord make_record(const std::string& equation, const WaveParams& p, int branch = 0,
                         const Tolerances& tol = {});

std::string format_number(double x);  // 17 significant digits
std::string csv_quote(const std::string& s);
std::string csv_schema_line();
std::string csv_header();
std::string to_csv_row(const ReportRecord& r);
std::string to_csv(const std::vector<ReportRecord>& rs);

std::string to_json(const ReportRecord& r);
std::string to_json(const std::vector<ReportRecord>& rs);
ReportRecord record_from_json(const std::string& text);
std::vector<ReportRecord> records_from_json(const std::string& text);

struct GridAxis {
  double lo = 0.0, hi = 0.0;
  int n = 1;
  double at(int i) const { return n == 1 ? lo : lo + (hi - lo) * i / (n - 1.0); }
};

enum class Mode { Classify, Sweep, SmallAmp, BlochCheck, Validate };

struct AnalysisRequest {
  Mode mode = Mode::Classify;
  std::string equation = "kdv";
  WaveParams params;
  double k = 1.0;  // BO wave number
  int branch = 0;
  GridAxis grid_a, grid_E, grid_c;
  // smallamp
  std::string symbol = "whitham";
  double k_lo = 0.1, k_hi = 3.0, k_step = 0.01;
  std::vector<double> alphas;
  std::vector<double> depths;
  Tolerances tol;
  int modes = 0;  // Bloch modes; 0 picks a default per wave
  int jobs = 1;
  std::string out;
  std::string format = "json";
};

// Parses a JSON config. Errors are ConfigError naming the line or field.
AnalysisRequest parse_request(const std::string& text, Mode mode);
void validate_request(const AnalysisRequest& r);

// Row-major sweep (c fastest) on `jobs` workers; output in grid order.
std::vector<ReportRecord> run_sweep(const AnalysisRequest& r);

}  // namespace modwave

#include "modwave/report.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <fmt/format.h>
#include <json.hpp>
#include <thread>

namespace modwave {

namespace {

using nlohmann::json;

bool same(double x, double y) { return x == y || (std::isnan(x) && std::isnan(y)); }

bool same(const Roots3& x, const Roots3& y) {
  for (int j = 0; j < 3; ++j)
    if (!same(x[j].real(), y[j].real()) || !same(x[j].imag(), y[j].imag())) return false;
  return true;
}

json num(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

double get_num(const json& j, const char* key) {
  const json& v = j.at(key);
  return v.is_null() ? std::nan("") : v.get<double>();
}

json roots_json(const Roots3& r) {
  json a = json::array();
  for (auto z : r) a.push_back(json::array({num(z.real()), num(z.imag())}));
  return a;
}

Roots3 roots_from(const json& a) {
  Roots3 r;
  for (int i = 0; i < 3; ++i) {
    const json& p = a.at(i);
    r[i] = {p.at(0).is_null() ? std::nan("") : p.at(0).get<double>(),
            p.at(1).is_null() ? std::nan("") : p.at(1).get<double>()};
  }
  return r;
}

json record_json(const ReportRecord& r) {
  return json{{"schema", r.schema},
              {"version", r.version},
              {"fingerprint", r.fingerprint},
              {"equation", r.equation},
              {"branch", r.branch},
              {"a", num(r.a)},
              {"E", num(r.E)},
              {"c", num(r.c)},
              {"classification", r.classification},
              {"error_code", r.error_code},
              {"message", r.message},
              {"delta_mi", num(r.delta_mi)},
              {"tol_deg", num(r.tol_deg)},
              {"T", num(r.T)},
              {"M", num(r.M)},
              {"P", num(r.P)},
              {"T_E", num(r.T_E)},
              {"TM_aE", num(r.TM_aE)},
              {"TMP_aEc", num(r.TMP_aEc)},
              {"TP_Ec", num(r.TP_Ec)},
              {"MP_aE", num(r.MP_aE)},
              {"cond", num(r.cond)},
              {"mu", roots_json(r.mu)},
              {"slopes", roots_json(r.slopes)},
              {"elapsed_ms", num(r.elapsed_ms)}};
}

ReportRecord record_from(const json& j) {
  ReportRecord r;
  try {
    r.schema = j.at("schema").get<std::string>();
    r.version = j.at("version").get<std::string>();
    r.fingerprint = j.at("fingerprint").get<std::string>();
    r.equation = j.at("equation").get<std::string>();
    r.branch = j.at("branch").get<int>();
    r.a = get_num(j, "a");
    r.E = get_num(j, "E");
    r.c = get_num(j, "c");
    r.classification = j.at("classification").get<std::string>();
    r.error_code = j.at("error_code").get<std::string>();
    r.message = j.at("message").get<std::string>();
    r.delta_mi = get_num(j, "delta_mi");
    r.tol_deg = get_num(j, "tol_deg");
    r.T = get_num(j, "T");
    r.M = get_num(j, "M");
    r.P = get_num(j, "P");
    r.T_E = get_num(j, "T_E");
    r.TM_aE = get_num(j, "TM_aE");
    r.TMP_aEc = get_num(j, "TMP_aEc");
    r.TP_Ec = get_num(j, "TP_Ec");
    r.MP_aE = get_num(j, "MP_aE");
    r.cond = get_num(j, "cond");
    r.mu = roots_from(j.at("mu"));
    r.slopes = roots_from(j.at("slopes"));
    r.elapsed_ms = get_num(j, "elapsed_ms");
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ConfigError, std::string("malformed report record: ") + e.what());
  }
  if (r.schema != kSchema) throw Error(ErrorCode::ConfigError, "unknown report schema '" + r.schema + "'");
  return r;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::ConfigError, fmt::format("JSON syntax error at line {}, column {}: {}", line, col, e.what()));
  }
}

}  // namespace

bool ReportRecord::operator==(const ReportRecord& o) const {
  return schema == o.schema && version == o.version && fingerprint == o.fingerprint &&
         equation == o.equation && branch == o.branch && same(a, o.a) && same(E, o.E) && same(c, o.c) &&
         classification == o.classification && error_code == o.error_code && message == o.message &&
         same(delta_mi, o.delta_mi) && same(tol_deg, o.tol_deg) && same(T, o.T) && same(M, o.M) &&
         same(P, o.P) && same(T_E, o.T_E) && same(TM_aE, o.TM_aE) && same(TMP_aEc, o.TMP_aEc) &&
         same(TP_Ec, o.TP_Ec) && same(MP_aE, o.MP_aE) && same(cond, o.cond) && same(mu, o.mu) &&
         same(slopes, o.slopes) && same(elapsed_ms, o.elapsed_ms);
}

int exit_code(const ReportRecord& r) {
  if (r.classification == "Stable") return 0;
  if (r.classification == "Unstable") return 10;
  if (r.classification == "Degenerate") return 20;
  if (r.classification == "HypothesisFailed") return 30;
  return 1;
}

ReportRecord make_record(const std::string& equation, const WaveParams& p, int branch, const Tolerances& tol) {
  ReportRecord r;
  r.fingerprint = convention_fingerprint();
  r.equation = equation;
  r.branch = branch;
  r.a = p.a;
  r.E = p.E;
  r.c = p.c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const StabilityReport s = classify(equation_by_name(equation), p, branch, tol);
    r.classification = std::string(to_string(s.classification));
    r.message = s.message;
    r.delta_mi = s.delta_mi;
    r.tol_deg = s.tol_deg;
    r.T = s.jacobian.T;
    r.M = s.jacobian.M;
    r.P = s.jacobian.P;
    r.T_E = s.jacobian.T_E;
    r.TM_aE = s.jacobian.TM_aE;
    r.TMP_aEc = s.jacobian.TMP_aEc;
    r.TP_Ec = s.jacobian.TP_Ec;
    r.MP_aE = s.jacobian.MP_aE;
    r.cond = s.cond;
    r.mu = s.mu_roots;
    r.slopes = s.bloch_slopes;
  } catch (const Error& e) {
    r.classification = "Error";
    r.error_code = std::string(to_string(e.code()));
    r.message = e.what();
  }
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", x);
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

std::string csv_schema_line() {
  return fmt::format("#schema={};version={};fingerprint={}\n", kSchema, kVersion, convention_fingerprint());
}

std::string csv_header() {
  return "equation,branch,a,E,c,classification,error_code,delta_mi,tol_deg,T,M,P,T_E,TM_aE,TMP_aEc,"
         "TP_Ec,MP_aE,cond,mu1_re,mu1_im,mu2_re,mu2_im,mu3_re,mu3_im,slope1_re,slope1_im,slope2_re,"
         "slope2_im,slope3_re,slope3_im,fingerprint,message,elapsed_ms\n";
}

std::string to_csv_row(const ReportRecord& r) {
  std::string s = csv_quote(r.equation) + "," + std::to_string(r.branch);
  for (double x : {r.a, r.E, r.c}) s += "," + format_number(x);
  s += "," + csv_quote(r.classification) + "," + csv_quote(r.error_code);
  for (double x : {r.delta_mi, r.tol_deg, r.T, r.M, r.P, r.T_E, r.TM_aE, r.TMP_aEc, r.TP_Ec, r.MP_aE, r.cond})
    s += "," + format_number(x);
  for (const Roots3* rr : {&r.mu, &r.slopes})
    for (auto z : *rr) s += "," + format_number(z.real()) + "," + format_number(z.imag());
  s += "," + r.fingerprint + "," + csv_quote(r.message) + "," + format_number(r.elapsed_ms) + "\n";
  return s;
}

std::string to_csv(const std::vector<ReportRecord>& rs) {
  std::string s = csv_schema_line() + csv_header();
  for (const auto& r : rs) s += to_csv_row(r);
  return s;
}

std::string to_json(const ReportRecord& r) { return record_json(r).dump(2) + "\n"; }

std::string to_json(const std::vector<ReportRecord>& rs) {
  json a = json::array();
  for (const auto& r : rs) a.push_back(record_json(r));
  return a.dump(2) + "\n";
}

ReportRecord record_from_json(const std::string& text) { return record_from(parse_json(text)); }

std::vector<ReportRecord> records_from_json(const std::string& text) {
  const json j = parse_json(text);
  std::vector<ReportRecord> rs;
  if (j.is_array())
    for (const auto& e : j) rs.push_back(record_from(e));
  else
    rs.push_back(record_from(j));
  return rs;
}

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::ConfigError, fmt::format("field '{}': {}", field, what));
}

double field_num(const json& j, const std::string& path) {
  if (!j.is_number()) field_error(path, "expected a number");
  return j.get<double>();
}

int field_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) field_error(path, "expected an integer");
  return j.get<int>();
}

std::string field_str(const json& j, const std::string& path) {
  if (!j.is_string()) field_error(path, "expected a string");
  return j.get<std::string>();
}

GridAxis field_axis(const json& j, const std::string& path) {
  if (j.is_number()) return {j.get<double>(), j.get<double>(), 1};
  if (!j.is_array() || j.size() != 3) field_error(path, "expected [lo, hi, n]");
  return {field_num(j[0], path + "[0]"), field_num(j[1], path + "[1]"), field_int(j[2], path + "[2]")};
}

std::vector<double> field_list(const json& j, const std::string& path) {
  if (!j.is_array()) field_error(path, "expected an array of numbers");
  std::vector<double> v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(field_num(j[i], fmt::format("{}[{}]", path, i)));
  return v;
}

}  // namespace

AnalysisRequest parse_request(const std::string& text, Mode mode) {
  const json j = parse_json(text);
  if (!j.is_object()) field_error("<root>", "expected a JSON object");
  AnalysisRequest r;
  r.mode = mode;
  static const char* known[] = {"equation", "params", "k",     "branch", "grid",   "symbol",
                                "k_range",  "alphas", "depths", "tolerances", "modes", "jobs",
                                "out",      "format"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : known) ok = ok || it.key() == k;
    if (!ok) field_error(it.key(), "unknown field");
  }
  if (j.contains("equation")) r.equation = field_str(j["equation"], "equation");
  if (j.contains("params")) {
    const json& p = j["params"];
    if (!p.is_object()) field_error("params", "expected an object");
    for (auto it = p.begin(); it != p.end(); ++it) {
      const std::string path = "params." + it.key();
      const double v = field_num(it.value(), path);
      if (it.key() == "a") r.params.a = v;
      else if (it.key() == "E") r.params.E = v;
      else if (it.key() == "c") r.params.c = v;
      else if (it.key() == "z0") r.params.z0 = v;
      else if (it.key() == "k") r.k = v;
      else field_error(path, "unknown parameter");
    }
  }
  if (j.contains("k")) r.k = field_num(j["k"], "k");
  if (j.contains("branch")) r.branch = field_int(j["branch"], "branch");
  if (j.contains("grid")) {
    const json& g = j["grid"];
    if (!g.is_object()) field_error("grid", "expected an object");
    r.grid_a = {r.params.a, r.params.a, 1};
    r.grid_E = {r.params.E, r.params.E, 1};
    r.grid_c = {r.params.c, r.params.c, 1};
    for (auto it = g.begin(); it != g.end(); ++it) {
      const std::string path = "grid." + it.key();
      if (it.key() == "a") r.grid_a = field_axis(it.value(), path);
      else if (it.key() == "E") r.grid_E = field_axis(it.value(), path);
      else if (it.key() == "c") r.grid_c = field_axis(it.value(), path);
      else field_error(path, "unknown axis");
    }
  } else {
    r.grid_a = {r.params.a, r.params.a, 1};
    r.grid_E = {r.params.E, r.params.E, 1};
    r.grid_c = {r.params.c, r.params.c, 1};
  }
  if (j.contains("symbol")) r.symbol = field_str(j["symbol"], "symbol");
  if (j.contains("k_range")) {
    const auto v = field_list(j["k_range"], "k_range");
    if (v.size() != 3) field_error("k_range", "expected [lo, hi, step]");
    r.k_lo = v[0];
    r.k_hi = v[1];
    r.k_step = v[2];
  }
  if (j.contains("alphas")) r.alphas = field_list(j["alphas"], "alphas");
  if (j.contains("depths")) r.depths = field_list(j["depths"], "depths");
  if (j.contains("tolerances")) {
    const json& t = j["tolerances"];
    if (!t.is_object()) field_error("tolerances", "expected an object");
    for (auto it = t.begin(); it != t.end(); ++it) {
      const std::string path = "tolerances." + it.key();
      const double v = field_num(it.value(), path);
      if (it.key() == "root") r.tol.root = v;
      else if (it.key() == "quad") r.tol.quad = v;
      else if (it.key() == "cond_max") r.tol.cond_max = v;
      else if (it.key() == "im") r.tol.im = v;
      else if (it.key() == "sep") r.tol.sep = v;
      else if (it.key() == "hyp") r.tol.hyp = v;
      else if (it.key() == "deg") r.tol.deg = v;
      else field_error(path, "unknown tolerance");
    }
  }
  if (j.contains("modes")) r.modes = field_int(j["modes"], "modes");
  if (j.contains("jobs")) r.jobs = field_int(j["jobs"], "jobs");
  if (j.contains("out")) r.out = field_str(j["out"], "out");
  if (j.contains("format")) r.format = field_str(j["format"], "format");
  validate_request(r);
  return r;
}

void validate_request(const AnalysisRequest& r) {
  for (auto [name, ax] : {std::pair{"grid.a", r.grid_a}, {"grid.E", r.grid_E}, {"grid.c", r.grid_c}})
    if (ax.n < 1) field_error(name, "grid range must be nonempty");
  const Tolerances& t = r.tol;
  for (auto [name, v] : {std::pair{"tolerances.root", t.root}, {"tolerances.quad", t.quad},
                         {"tolerances.cond_max", t.cond_max}, {"tolerances.im", t.im},
                         {"tolerances.sep", t.sep}, {"tolerances.hyp", t.hyp}, {"tolerances.deg", t.deg}})
    if (!(v > 0.0)) field_error(name, "tolerance must be positive");
  if (r.modes != 0 && r.modes < 8) field_error("modes", "must be 0 (automatic) or at least 8");
  if (r.jobs < 1) field_error("jobs", "must be at least 1");
  if (r.format != "json" && r.format != "csv") field_error("format", "expected 'json' or 'csv'");
  if (r.k_step <= 0.0 || r.k_hi <= r.k_lo) field_error("k_range", "need lo < hi and step > 0");
}

std::vector<ReportRecord> run_sweep(const AnalysisRequest& r) {
  validate_request(r);
  std::vector<WaveParams> pts;
  for (int i = 0; i < r.grid_a.n; ++i)
    for (int j = 0; j < r.grid_E.n; ++j)
      for (int l = 0; l < r.grid_c.n; ++l) pts.push_back({r.grid_a.at(i), r.grid_E.at(j), r.grid_c.at(l), 0.0});
  std::vector<ReportRecord> out(pts.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < pts.size();)
      out[i] = make_record(r.equation, pts[i], r.branch, r.tol);
  };
  const int n = std::max(1, std::min<int>(r.jobs, static_cast<int>(pts.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace modwave

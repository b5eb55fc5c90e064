#include <CLI11.hpp>
#include <cstdlib>
#include <fmt/format.h>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "modwave/bloch.hpp"
#include "modwave/bo.hpp"
#include "modwave/report.hpp"
#include "modwave/smallamp.hpp"

using namespace modwave;

namespace {

struct Flags {
  std::string config;
  std::optional<std::string> equation, out, format, symbol;
  std::optional<double> a, E, c, k, tol_quad;
  std::optional<int> branch, modes, jobs;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ConfigError, "cannot open config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

AnalysisRequest build_request(const Flags& f, Mode mode) {
  AnalysisRequest r = f.config.empty() ? AnalysisRequest{} : parse_request(read_file(f.config), mode);
  r.mode = mode;
  if (f.equation) r.equation = *f.equation;
  if (f.a) r.params.a = r.grid_a.lo = r.grid_a.hi = *f.a, r.grid_a.n = 1;
  if (f.E) r.params.E = r.grid_E.lo = r.grid_E.hi = *f.E, r.grid_E.n = 1;
  if (f.c) r.params.c = r.grid_c.lo = r.grid_c.hi = *f.c, r.grid_c.n = 1;
  if (f.k) r.k = *f.k;
  if (f.branch) r.branch = *f.branch;
  if (f.tol_quad) r.tol.quad = *f.tol_quad;
  if (f.modes) r.modes = *f.modes;
  if (f.jobs) r.jobs = *f.jobs;
  if (const char* env = std::getenv("MODWAVE_JOBS")) {
    try {
      r.jobs = std::stoi(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ConfigError, "MODWAVE_JOBS: expected an integer");
    }
  }
  if (f.out) r.out = *f.out;
  if (f.format) r.format = *f.format;
  if (f.symbol) r.symbol = *f.symbol;
  if (f.config.empty() && mode == Mode::Sweep)
    throw Error(ErrorCode::ConfigError, "sweep needs --config with a grid");
  validate_request(r);
  return r;
}

void emit(const AnalysisRequest& r, const std::string& text) {
  if (r.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream o(r.out, std::ios::binary);
  if (!o) throw Error(ErrorCode::ConfigError, "cannot write '" + r.out + "'");
  o << text;
}

int run_classify(const AnalysisRequest& r) {
  const ReportRecord rec = make_record(r.equation, r.params, r.branch, r.tol);
  emit(r, r.format == "csv" ? to_csv({rec}) : to_json(rec));
  if (rec.classification == "Error") std::cerr << "error: " << rec.message << "\n";
  return exit_code(rec);
}

int run_sweep_cmd(const AnalysisRequest& r) {
  const auto recs = run_sweep(r);
  emit(r, r.format == "csv" ? to_csv(recs) : to_json(recs));
  return 0;
}

DispersionSymbol symbol_from(const AnalysisRequest& r, double param) {
  if (r.symbol == "whitham") return DispersionSymbol::whitham();
  if (r.symbol == "fkdv") return DispersionSymbol::fkdv(param);
  if (r.symbol == "ilw") return DispersionSymbol::ilw(param);
  throw Error(ErrorCode::ConfigError, "field 'symbol': expected whitham, fkdv or ilw");
}

int run_smallamp(const AnalysisRequest& r) {
  nlohmann::json doc;
  doc["schema"] = "modwave-smallamp/1";
  doc["fingerprint"] = convention_fingerprint();
  doc["symbol"] = r.symbol;
  std::string csv = fmt::format("#schema=modwave-smallamp/1;symbol={};fingerprint={}\n", r.symbol,
                                convention_fingerprint());
  if (r.symbol == "whitham") {
    const auto sym = DispersionSymbol::whitham();
    const auto curve = gamma_curve(sym, r.k_lo, r.k_hi, r.k_step);
    const KStar ks = find_kstar(sym, r.k_lo, r.k_hi, r.k_step);
    csv += fmt::format("#kstar={};bracket={},{};sign_changes={}\nk,Gamma,Lambda\n", format_number(ks.kstar),
                       format_number(ks.lo), format_number(ks.hi), ks.sign_changes);
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& g : curve) {
      csv += fmt::format("{},{},{}\n", format_number(g.k), format_number(g.Gamma), format_number(g.Lambda));
      rows.push_back({{"k", g.k}, {"Gamma", g.Gamma}, {"Lambda", g.Lambda}});
    }
    doc["curve"] = rows;
    doc["kstar"] = {{"k", ks.kstar}, {"lo", ks.lo}, {"hi", ks.hi}, {"sign_changes", ks.sign_changes}};
  } else if (r.symbol == "fkdv") {
    std::vector<double> alphas = r.alphas;
    if (alphas.empty()) alphas = {0.6, 0.8, 0.95, 1.0, 1.05, 1.5, 2.0};
    csv += "alpha,Lambda,sign\n";
    nlohmann::json rows = nlohmann::json::array();
    for (double al : alphas) {
      const double L = lambda_fkdv(r.k, al);
      const int s = (L > 0) - (L < 0);
      csv += fmt::format("{},{},{}\n", format_number(al), format_number(L), s);
      rows.push_back({{"alpha", al}, {"Lambda", L}, {"sign", s}});
    }
    doc["k"] = r.k;
    doc["table"] = rows;
  } else if (r.symbol == "ilw") {
    std::vector<double> depths = r.depths;
    if (depths.empty()) depths = {0.25, 0.5, 1.0, 2.0, 4.0};
    csv += "k,H,Delta,sign\n";
    nlohmann::json rows = nlohmann::json::array();
    for (double H : depths)
      for (double k = r.k_lo; k <= r.k_hi + 1e-12; k += r.k_step) {
        const double D = delta_ilw(k, H);
        const int s = (D > 0) - (D < 0);
        csv += fmt::format("{},{},{},{}\n", format_number(k), format_number(H), format_number(D), s);
        rows.push_back({{"k", k}, {"H", H}, {"Delta", D}, {"sign", s}});
      }
    doc["table"] = rows;
  } else {
    symbol_from(r, 1.0);
  }
  emit(r, r.format == "csv" ? csv : doc.dump(2) + "\n");
  return 0;
}

int run_bloch_check(const AnalysisRequest& r) {
  std::unique_ptr<BlochProblem> prob;
  std::array<std::complex<double>, 3> theory{};
  if (r.equation == "bo") {
    const BOParams bp{r.params.a, r.k, r.params.c};
    prob = make_bo_problem(bp, r.modes ? r.modes : 64);
    const auto w = bo_whitham_slopes(bp);
    for (int j = 0; j < 3; ++j) theory[j] = w[j];
  } else {
    const EquationSpec spec = equation_by_name(r.equation);
    const StabilityReport s = classify(spec, r.params, r.branch, r.tol);
    if (s.classification == Stability::Degenerate || s.classification == Stability::HypothesisFailed)
      throw Error(ErrorCode::DomainError, "no slope prediction: " + std::string(to_string(s.classification)));
    theory = s.bloch_slopes;
    const WaveProfile w = WaveProfile::resolve(spec, r.params, r.branch, r.tol);
    prob = std::make_unique<LocalBloch>(w, r.modes ? r.modes : recommended_modes(w));
  }
  const SlopeResult sr = modulation_slopes(*prob);
  const double trunc = truncation_change(*prob, 1e-2);
  double worst = 0.0;
  std::string out = "branch,bloch_re,bloch_im,theory_re,theory_im,rel_err\n";
  for (int j = 0; j < 3; ++j) {
    double best = 1e300;
    for (auto t : theory) best = std::min(best, std::abs(sr.slopes[j] - t) / std::max(1.0, std::abs(t)));
    worst = std::max(worst, best);
    out += fmt::format("{},{},{},{},{},{}\n", j, format_number(sr.slopes[j].real()),
                       format_number(sr.slopes[j].imag()), format_number(theory[j].real()),
                       format_number(theory[j].imag()), format_number(best));
  }
  const bool pass = worst <= 1e-3 && trunc <= 1e-8;
  out += fmt::format("#max_rel_err={};truncation_change={};result={}\n", format_number(worst),
                     format_number(trunc), pass ? "PASS" : "FAIL");
  emit(r, out);
  return pass ? 0 : 1;
}

int run_validate(const AnalysisRequest& r) {
  int failures = 0;
  auto check = [&](const std::string& name, double residual, double tol) {
    const bool ok = residual <= tol;
    failures += !ok;
    std::cout << fmt::format("{:<44} residual={:<12.3e} tol={:.0e} {}\n", name, residual, tol, ok ? "PASS" : "FAIL");
  };
  struct Point {
    const char* name;
    EquationSpec spec;
    WaveParams p;
    int branch;
  };
  const std::vector<Point> pts = {{"kdv (3,1,0)", kdv(), kdv_params_from_roots(3, 1, 0), 0},
                                  {"mkdv-focusing cnoidal", mkdv(true), {0, 0.5, -1, 0}, 0},
                                  {"mkdv-focusing dnoidal", mkdv(true), {0, -0.1, -1, 0}, 1},
                                  {"mkdv-defocusing", mkdv(false), {0, 0.1, 1, 0}, 0},
                                  {"schamel", schamel(), {0, -0.001, -1, 0}, 0}};
  for (const auto& pt : pts) {
    const ParamJacobian J = param_jacobian(pt.spec, pt.p, pt.branch, r.tol);
    check(fmt::format("jacobian vs finite differences: {}", pt.name), jacobian_mismatch(J, fd_jacobian(pt.spec, pt.p, pt.branch)),
          1e-6);
  }
  {
    const WaveParams p = kdv_params_from_roots(3, 1, 0);
    const ParamJacobian J = param_jacobian(kdv(), p);
    const KdvClosedForms cf = kdv_closed_forms(J.T, J.M, p.a, p.E, p.c);
    const double e = std::max({std::abs(cf.T_E / J.T_E - 1), std::abs(cf.TM_aE / J.TM_aE - 1),
                               std::abs(cf.TMP_aEc / J.TMP_aEc - 1)});
    check("kdv closed forms vs picard-fuchs", e, 1e-8);
    check("kdv period vs cnoidal", std::abs(J.T / cnoidal_period(3, 1, 0) - 1), 1e-10);
  }
  for (const auto& pt : pts) {
    const StabilityReport s = classify(pt.spec, pt.p, pt.branch, r.tol);
    const WaveProfile w = WaveProfile::resolve(pt.spec, pt.p, pt.branch, r.tol);
    const LocalBloch lb(w, r.modes ? r.modes : recommended_modes(w));
    const SlopeResult sr = modulation_slopes(lb);
    double e = 0.0;
    for (int j = 0; j < 3; ++j) {
      double best = 1e300;
      for (auto t : s.bloch_slopes) best = std::min(best, std::abs(sr.slopes[j] - t) / std::max(1.0, std::abs(t)));
      e = std::max(e, best);
    }
    check(fmt::format("bloch slopes vs dispersion roots: {}", pt.name), e, 1e-3);
  }
  {
    const BOParams bp{0.0, 1.0, -2.0};
    const auto prob = make_bo_problem(bp, r.modes ? r.modes : 64);
    const SlopeResult sr = modulation_slopes(*prob);
    const auto w = bo_whitham_slopes(bp);
    double e = 0.0;
    for (int j = 0; j < 3; ++j) e = std::max(e, std::abs(sr.slopes[j] - w[j]));
    check("bo bloch slopes vs whitham slopes", e, 1e-3);
  }
  {
    const auto W = DispersionSymbol::whitham();
    double e = 0.0;
    for (double k : {1.0, 2.0})
      for (double xi : {1e-2, 1e-3}) {
        const double d = delta_discriminant(k, 0.0, xi, W);
        e = std::max(e, std::abs(d / delta_product_formula(k, xi, W) - 1));
      }
    check("whitham small-amplitude discriminant", e, 1e-10);
    check("whitham cutoff k*", std::abs(find_kstar(W).kstar - 1.146), 1e-3);
  }
  std::cout << (failures ? fmt::format("{} check(s) failed\n", failures) : "all checks passed\n");
  return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modulational stability of periodic traveling waves"};
  app.require_subcommand(1);
  Flags f;
  auto add_common = [&](CLI::App* s) {
    s->add_option("--config", f.config, "JSON request file");
    s->add_option("--equation", f.equation, "kdv, mkdv-focusing, mkdv-defocusing, schamel, bo");
    s->add_option("--out", f.out, "output path (default stdout)");
    s->add_option("--format", f.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    s->add_option("--tol-quad", f.tol_quad, "quadrature tolerance");
    s->add_option("--modes", f.modes, "Fourier modes N for Bloch problems (default: 64, or 256 near the solitary limit)");
    s->add_option("--jobs", f.jobs, "worker threads (MODWAVE_JOBS overrides)");
  };
  auto add_params = [&](CLI::App* s) {
    s->add_option("--a", f.a, "parameter a");
    s->add_option("--E", f.E, "parameter E");
    s->add_option("--c", f.c, "wave speed c");
    s->add_option("--k", f.k, "wave number (bo, fkdv)");
    s->add_option("--branch", f.branch, "oscillation interval index");
  };
  auto* classify_cmd = app.add_subcommand("classify", "classify one parameter point");
  auto* sweep_cmd = app.add_subcommand("sweep", "classify a parameter grid");
  auto* smallamp_cmd = app.add_subcommand("smallamp", "small-amplitude indices for nonlocal symbols");
  auto* bloch_cmd = app.add_subcommand("bloch-check", "compare Bloch slopes with the dispersion roots");
  auto* validate_cmd = app.add_subcommand("validate", "run the oracle suites");
  for (auto* s : {classify_cmd, sweep_cmd, smallamp_cmd, bloch_cmd, validate_cmd}) add_common(s);
  for (auto* s : {classify_cmd, sweep_cmd, smallamp_cmd, bloch_cmd}) add_params(s);
  smallamp_cmd->add_option("--symbol", f.symbol, "whitham, fkdv or ilw");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }
  try {
    if (*classify_cmd) return run_classify(build_request(f, Mode::Classify));
    if (*sweep_cmd) return run_sweep_cmd(build_request(f, Mode::Sweep));
    if (*smallamp_cmd) return run_smallamp(build_request(f, Mode::SmallAmp));
    if (*bloch_cmd) return run_bloch_check(build_request(f, Mode::BlochCheck));
    if (*validate_cmd) return run_validate(build_request(f, Mode::Validate));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "modwave/bloch.hpp"
#include "modwave/bo.hpp"
#include "modwave/mi_index.hpp"
#include "modwave/report.hpp"
#include "modwave/smallamp.hpp"

namespace py = pybind11;
using namespace modwave;

namespace {

py::dict jacobian_dict(const ParamJacobian& J) {
  py::dict d;
  d["J"] = J.J;
  d["T"] = J.T;
  d["M"] = J.M;
  d["P"] = J.P;
  d["T_E"] = J.T_E;
  d["TM_aE"] = J.TM_aE;
  d["TMP_aEc"] = J.TMP_aEc;
  d["TP_Ec"] = J.TP_Ec;
  d["MP_aE"] = J.MP_aE;
  d["cond"] = J.cond;
  return d;
}

DispersionSymbol symbol_by_name(const std::string& name, double param) {
  if (name == "whitham") return DispersionSymbol::whitham();
  if (name == "fkdv") return DispersionSymbol::fkdv(param);
  if (name == "ilw") return DispersionSymbol::ilw(param);
  if (name == "bo") return DispersionSymbol::bo();
  throw Error(ErrorCode::ConfigError, "unknown symbol '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Modulational stability of periodic traveling waves";
  static py::exception<Error> exc(m, "ModwaveError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object err = exc;
      py::object inst = err(e.what());
      inst.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(exc.ptr(), inst.ptr());
    }
  });

  m.attr("__version__") = kVersion;
  m.def("convention_fingerprint", &convention_fingerprint);

  m.def(
      "classify",
      [](const std::string& equation, double a, double E, double c, int branch) {
        const StabilityReport r = classify(equation_by_name(equation), {a, E, c, 0.0}, branch);
        py::dict d;
        d["classification"] = std::string(to_string(r.classification));
        d["delta_mi"] = r.delta_mi;
        d["tol_deg"] = r.tol_deg;
        d["mu_roots"] = r.mu_roots;
        d["bloch_slopes"] = r.bloch_slopes;
        d["jacobian"] = jacobian_dict(r.jacobian);
        d["message"] = r.message;
        return d;
      },
      py::arg("equation"), py::arg("a"), py::arg("E"), py::arg("c"), py::arg("branch") = 0);

  m.def(
      "param_jacobian",
      [](const std::string& equation, double a, double E, double c, int branch) {
        return jacobian_dict(param_jacobian(equation_by_name(equation), {a, E, c, 0.0}, branch));
      },
      py::arg("equation"), py::arg("a"), py::arg("E"), py::arg("c"), py::arg("branch") = 0);

  m.def(
      "fd_jacobian",
      [](const std::string& equation, double a, double E, double c, int branch) {
        return jacobian_dict(fd_jacobian(equation_by_name(equation), {a, E, c, 0.0}, branch));
      },
      py::arg("equation"), py::arg("a"), py::arg("E"), py::arg("c"), py::arg("branch") = 0);

  m.def(
      "conserved",
      [](const std::string& equation, double a, double E, double c, int branch) {
        const TMPH q = quadrature_TMPH(equation_by_name(equation), {a, E, c, 0.0}, branch);
        return py::dict(py::arg("T") = q.T, py::arg("M") = q.M, py::arg("P") = q.P, py::arg("H") = q.H);
      },
      py::arg("equation"), py::arg("a"), py::arg("E"), py::arg("c"), py::arg("branch") = 0);

  m.def(
      "profile",
      [](const std::string& equation, double a, double E, double c, int n, int branch) {
        const WaveProfile w = WaveProfile::resolve(equation_by_name(equation), {a, E, c, 0.0}, branch);
        return py::make_tuple(w.period(), w.sample(n));
      },
      py::arg("equation"), py::arg("a"), py::arg("E"), py::arg("c"), py::arg("n") = 128, py::arg("branch") = 0,
      "Period and n samples u(jT/n).");

  m.def(
      "kdv_params_from_roots",
      [](double alpha, double beta, double gamma) {
        const WaveParams p = kdv_params_from_roots(alpha, beta, gamma);
        return py::dict(py::arg("a") = p.a, py::arg("E") = p.E, py::arg("c") = p.c);
      },
      py::arg("alpha"), py::arg("beta"), py::arg("gamma"));

  m.def(
      "mkdv_root_classifier",
      [](double a, double E, double c, int sign) { return std::string(to_string(mkdv_root_classifier(a, E, c, sign))); },
      py::arg("a"), py::arg("E"), py::arg("c"), py::arg("sign"));

  m.def(
      "bloch_slopes",
      [](const std::string& equation, double a, double E, double c, int branch, int modes) {
        const LocalBloch lb(WaveProfile::resolve(equation_by_name(equation), {a, E, c, 0.0}, branch), modes);
        const SlopeResult s = modulation_slopes(lb);
        return py::make_tuple(s.slopes, truncation_change(lb, 1e-2));
      },
      py::arg("equation"), py::arg("a"), py::arg("E"), py::arg("c"), py::arg("branch") = 0, py::arg("modes") = 64,
      "Bloch modulation slopes and the N vs 2N truncation change.");

  m.def(
      "bo_bloch_slopes",
      [](double a, double k, double c, int modes) {
        const auto prob = make_bo_problem({a, k, c}, modes);
        return modulation_slopes(*prob).slopes;
      },
      py::arg("a"), py::arg("k"), py::arg("c"), py::arg("modes") = 64);

  m.def(
      "bo_profile", [](double a, double k, double c, int n) { return bo_sample({a, k, c}, n); }, py::arg("a"),
      py::arg("k"), py::arg("c"), py::arg("n") = 128);
  m.def(
      "bo_conserved",
      [](double a, double k, double c) {
        const BOConserved b = bo_conserved({a, k, c});
        return py::dict(py::arg("M") = b.M, py::arg("P") = b.P, py::arg("MP_ac") = b.MP_ac);
      },
      py::arg("a"), py::arg("k"), py::arg("c"));
  m.def(
      "bo_dispersion_eigenvalues", [](double k, double c) { return bo_dispersion_matrix(k, c).eigenvalues; },
      py::arg("k"), py::arg("c"));
  m.def(
      "bo_whitham_slopes", [](double a, double k, double c) { return bo_whitham_slopes({a, k, c}); }, py::arg("a"),
      py::arg("k"), py::arg("c"));

  m.def(
      "lambda_index",
      [](double k, const std::string& symbol, double param) {
        const LambdaIndex l = lambda_index(k, symbol_by_name(symbol, param));
        return py::make_tuple(l.Lambda, l.Gamma);
      },
      py::arg("k"), py::arg("symbol") = "whitham", py::arg("param") = 1.0, "(Lambda, Gamma) at wave number k.");
  m.def(
      "find_kstar",
      [](double lo, double hi, double step) {
        const KStar ks = find_kstar(DispersionSymbol::whitham(), lo, hi, step);
        return py::make_tuple(ks.kstar, ks.lo, ks.hi, ks.sign_changes);
      },
      py::arg("lo") = 0.1, py::arg("hi") = 3.0, py::arg("step") = 0.01);
  m.def(
      "delta_discriminant",
      [](double k, double A, double xi, const std::string& symbol, double param) {
        return delta_discriminant(k, A, xi, symbol_by_name(symbol, param));
      },
      py::arg("k"), py::arg("A"), py::arg("xi"), py::arg("symbol") = "whitham", py::arg("param") = 1.0);
  m.def(
      "delta_product_formula",
      [](double k, double xi, const std::string& symbol, double param) {
        return delta_product_formula(k, xi, symbol_by_name(symbol, param));
      },
      py::arg("k"), py::arg("xi"), py::arg("symbol") = "whitham", py::arg("param") = 1.0);
  m.def("lambda_fkdv", &lambda_fkdv, py::arg("k"), py::arg("alpha"));
  m.def("gamma_ilw", &gamma_ilw, py::arg("z"));
  m.def("delta_ilw", &delta_ilw, py::arg("k"), py::arg("H"));

  m.def(
      "report_json",
      [](const std::string& equation, double a, double E, double c, int branch) {
        return to_json(make_record(equation, {a, E, c, 0.0}, branch));
      },
      py::arg("equation"), py::arg("a"), py::arg("E"), py::arg("c"), py::arg("branch") = 0);
}

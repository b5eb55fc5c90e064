#include "modwave/mi_index.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <fmt/format.h>

namespace modwave {

std::string_view to_string(Stability s) {
  switch (s) {
    case Stability::Stable: return "Stable";
    case Stability::Unstable: return "Unstable";
    case Stability::Degenerate: return "Degenerate";
    case Stability::HypothesisFailed: return "HypothesisFailed";
  }
  return "Unknown";
}

std::string_view to_string(MkdvRoots r) {
  switch (r) {
    case MkdvRoots::Stable4RealRoots: return "Stable4RealRoots";
    case MkdvRoots::Unstable2Real2Complex: return "Unstable2Real2Complex";
    case MkdvRoots::Degenerate: return "Degenerate";
  }
  return "Unknown";
}

double dispersion_S(const ParamJacobian& J) { return 2.0 * J.MP_aE - J.TP_Ec; }

namespace {

double jacobian_scale(const ParamJacobian& J) {
  double s = 0.0;
  for (const auto& row : J.J)
    for (double x : row) s = std::max(s, std::abs(x));
  return s;
}

}  // namespace

HypothesisFlags check_hypotheses(const ParamJacobian& J, const Tolerances& tol) {
  HypothesisFlags h{J.T_E, J.TM_aE, J.TMP_aEc, false};
  const double s = jacobian_scale(J);
  if (std::abs(J.T_E) <= tol.hyp * s)
    throw Error(ErrorCode::HypothesisFailed, fmt::format("T_E = {:.3e} vanishes", J.T_E));
  if (std::abs(J.TM_aE) <= tol.hyp * s * s)
    throw Error(ErrorCode::HypothesisFailed, fmt::format("{{T,M}}_aE = {:.3e} vanishes", J.TM_aE));
  if (std::abs(J.TMP_aEc) <= tol.hyp * s * s * s)
    throw Error(ErrorCode::HypothesisFailed, fmt::format("{{T,M,P}} = {:.3e} vanishes", J.TMP_aEc));
  h.ok = true;
  return h;
}

double delta_mi(const ParamJacobian& J, const Tolerances& tol) {
  check_hypotheses(J, tol);
  const double S = dispersion_S(J), C = J.TMP_aEc;
  return 0.5 * S * S * S - 6.75 * C * C;
}

double delta_mi_scale(const ParamJacobian& J) {
  const double S = dispersion_S(J), C = J.TMP_aEc;
  return 0.5 * std::abs(S * S * S) + 6.75 * C * C;
}

Roots3 effective_dispersion_roots(const ParamJacobian& J, const Tolerances& tol) {
  check_hypotheses(J, tol);
  const double S = dispersion_S(J), C = J.TMP_aEc;
  // mu^3 + 0 mu^2 - (S/2) mu - C/2
  Eigen::Matrix3d comp = Eigen::Matrix3d::Zero();
  comp(1, 0) = 1.0;
  comp(2, 1) = 1.0;
  comp(0, 2) = 0.5 * C;
  comp(1, 2) = 0.5 * S;
  const Eigen::Vector3cd ev = comp.eigenvalues();
  Roots3 r{ev(0), ev(1), ev(2)};
  // One Newton step per root on the cubic.
  for (auto& z : r) {
    const auto f = z * z * z - 0.5 * S * z - 0.5 * C;
    const auto df = 3.0 * z * z - 0.5 * S;
    if (std::abs(df) > 0) z -= f / df;
  }
  const double scale = std::max({std::abs(r[0]), std::abs(r[1]), std::abs(r[2]), 1e-300});
  for (auto& z : r)
    if (std::abs(z.imag()) <= 1e-14 * scale) z = {z.real(), 0.0};
  std::sort(r.begin(), r.end(), [](auto x, auto y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  return r;
}

Roots3 predicted_bloch_slopes(const ParamJacobian& J, const Roots3& mu) {
  Roots3 s;
  for (int i = 0; i < 3; ++i) s[i] = -J.T / mu[i];
  std::sort(s.begin(), s.end(), [](auto x, auto y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  return s;
}

StabilityReport classify_jacobian(const ParamJacobian& J, const Tolerances& tol) {
  StabilityReport r;
  r.jacobian = J;
  r.cond = J.cond;
  r.hypothesis = {J.T_E, J.TM_aE, J.TMP_aEc, false};
  try {
    r.hypothesis = check_hypotheses(J, tol);
  } catch (const Error& e) {
    r.classification = Stability::HypothesisFailed;
    r.message = e.what();
    return r;
  }
  const double S = dispersion_S(J), C = J.TMP_aEc;
  r.delta_mi = 0.5 * S * S * S - 6.75 * C * C;
  r.tol_deg = tol.deg * delta_mi_scale(J);
  r.mu_roots = effective_dispersion_roots(J, tol);
  r.bloch_slopes = predicted_bloch_slopes(J, r.mu_roots);
  if (r.delta_mi > r.tol_deg)
    r.classification = Stability::Stable;
  else if (r.delta_mi < -r.tol_deg)
    r.classification = Stability::Unstable;
  else
    r.classification = Stability::Degenerate;
  return r;
}

StabilityReport classify(const EquationSpec& spec, const WaveParams& p, int branch,
                         const Tolerances& tol) {
  ParamJacobian J;
  try {
    J = param_jacobian(spec, p, branch, tol);
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::OnGamma:
      case ErrorCode::DegenerateRoots:
      case ErrorCode::SingularSystem:
      case ErrorCode::IllConditioned: {
        StabilityReport r;
        r.classification = Stability::Degenerate;
        r.message = e.what();
        return r;
      }
      default: throw;
    }
  }
  return classify_jacobian(J, tol);
}

MkdvRoots mkdv_root_classifier(double a, double E, double c, int sign, const Tolerances& tol) {
  const EquationSpec spec = mkdv(sign > 0);
  const PotentialPolynomial P = potential_polynomial(spec, {a, E, c, 0.0});
  RootSet rs;
  try {
    rs = potential_roots(P, tol.root);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DegenerateRoots) return MkdvRoots::Degenerate;
    throw;
  }
  if (rs.real.size() == 4) return MkdvRoots::Stable4RealRoots;
  if (rs.real.size() == 2) return MkdvRoots::Unstable2Real2Complex;
  throw Error(ErrorCode::DomainError, "no real roots: parameters admit no periodic wave");
}

KdvClosedForms kdv_closed_forms(double T, double M, double a, double E, double c) {
  const double R = 8 * a * a * a + 3 * a * a * c * c + 18 * E * a * c + 6 * E * c * c * c - 9 * E * E;
  if (!(R > 0.0)) throw Error(ErrorCode::DegenerateDiscriminant, "KdV discriminant is not positive");
  const double u = M / T;
  const double V = u * u * u / 6.0 + 0.5 * c * u * u - a * u;
  KdvClosedForms f;
  f.R = R;
  f.T_E = ((2 * a + c * c) * M + (3 * E - a * c) * T) / (2 * R);
  f.TM_aE = (-M * M - 2 * c * M * T + 2 * a * T * T) / (4 * R);
  f.TMP_aEc = -3.0 * T * T * T * (E - V) / R;
  const double N = (8 * a * a * a + 18 * E * a * c - 18 * E * E) * T * T * T -
                   (18 * E * a + 18 * E * c * c + 6 * a * a * c) * T * T * M -
                   (9 * E * c + 12 * a * a + 3 * a * c * c) * T * M * M +
                   (c * c * c + 3 * a * c - 3 * E) * M * M * M;
  f.two_delta_mi = 2.0 * 27.0 * N * N / (16.0 * R * R * R);
  return f;
}

}  // namespace modwave

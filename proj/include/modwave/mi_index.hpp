#pragma once

#include <array>
#include <complex>
#include <string>

#include "modwave/picard_fuchs.hpp"

namespace modwave {

enum class Stability { Stable, Unstable, Degenerate, HypothesisFailed };
std::string_view to_string(Stability s);

struct HypothesisFlags {
  double T_E = 0.0;
  double TM_aE = 0.0;
  double TMP_aEc = 0.0;
  bool ok = false;
};

using Roots3 = std::array<std::complex<double>, 3>;

struct StabilityReport {
  double delta_mi = 0.0;
  Roots3 mu_roots{};
  Roots3 bloch_slopes{};  // predicted lambda'(0)/i = -T / mu
  Stability classification = Stability::Degenerate;
  HypothesisFlags hypothesis;
  ParamJacobian jacobian;
  double cond = 0.0;
  double tol_deg = 0.0;
  std::string message;
};

// S = 2{M,P}_{a,E} - {T,P}_{E,c} and C = {T,M,P}_{a,E,c}:
// D(mu) = -mu^3 + (S/2) mu + C/2, Delta_MI = S^3/2 - (27/4) C^2.
double dispersion_S(const ParamJacobian& J);

// Throws HypothesisFailed when T_E, {T,M}_{a,E} or {T,M,P}_{a,E,c} vanish
// relative to the Jacobian scale.
HypothesisFlags check_hypotheses(const ParamJacobian& J, const Tolerances& tol = {});

double delta_mi(const ParamJacobian& J, const Tolerances& tol = {});
// Scale used for the Stable/Unstable/Degenerate boundary: S^3/2 and 27C^2/4 magnitudes.
double delta_mi_scale(const ParamJacobian& J);

// Roots of D(mu) by companion matrix, sorted by real then imaginary part.
Roots3 effective_dispersion_roots(const ParamJacobian& J, const Tolerances& tol = {});
Roots3 predicted_bloch_slopes(const ParamJacobian& J, const Roots3& mu);

StabilityReport classify(const EquationSpec& spec, const WaveParams& p, int branch = 0,
                         const Tolerances& tol = {});
StabilityReport classify_jacobian(const ParamJacobian& J, const Tolerances& tol = {});

enum class MkdvRoots { Stable4RealRoots, Unstable2Real2Complex, Degenerate };
std::string_view to_string(MkdvRoots r);

// Real-root count of E - V for f = sign * u^3 / 3.
MkdvRoots mkdv_root_classifier(double a, double E, double c, int sign, const Tolerances& tol = {});

struct KdvClosedForms {
  double T_E, TM_aE, TMP_aEc, two_delta_mi;
  double R;  // 12 * disc
};

// Closed forms for f = u^2/2 in terms of (T, M, a, E, c).
KdvClosedForms kdv_closed_forms(double T, double M, double a, double E, double c);

}  // namespace modwave

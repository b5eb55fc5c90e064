#pragma once

#include <functional>
#include <vector>

#include "modwave/equations.hpp"

namespace modwave {

// Oscillation data of a local wave in the integration variable v (u = v^{1+shift}):
// P(v) = (v - lo)(hi - v) q(v) with q > 0 on [lo, hi].
struct WaveCore {
  EquationSpec spec;
  WaveParams params;
  PotentialPolynomial poly;
  double lo = 0.0, hi = 0.0;
  Coeffs q;  // positive cofactor
  double tol_quad = 1e-11;
  int n_theta = 0;  // trapezoid points used by the last converged integral

  int shift() const { return poly.shift; }
  double v_of_theta(double theta) const;
  double u_of_v(double v) const;
  // dz/dtheta for the sin^2 parametrization v = lo + (hi-lo) sin^2(theta)
  double dz_dtheta(double v) const;
};

WaveCore resolve_core(const EquationSpec& spec, const WaveParams& p, int branch = 0,
                      const Tolerances& tol = {});

// Integrals over theta in [0, pi) by nested trapezoid doubling (the integrand is
// smooth and pi-periodic after the substitution). g(v, theta, out) fills `count`
// values. Returns the integrals; sets core.n_theta.
std::vector<double> theta_integrals(WaveCore& core, int count,
                                    const std::function<void(double, double, double*)>& g);

struct TMPH {
  double T, M, P, H;
};

// T, M = int u dz, P = int u^2 dz, H = int (u_z^2/2 - F(u)) dz over one period.
TMPH quadrature_TMPH(const EquationSpec& spec, const WaveParams& p, int branch = 0,
                     const Tolerances& tol = {});

// Z_k = loop integral of v^k P(v)^{-1/2} dv. T, M, P follow from
// weight * Z[idx_T], weight * Z[idx_M], weight * Z[idx_P].
struct MomentTable {
  std::vector<double> zeta;
  std::vector<double> I;
  double weight = 0.0;
  int shift = 0;
  int idx_T = 0, idx_M = 1, idx_P = 2;

  double T() const { return weight * zeta.at(idx_T); }
  double M() const { return weight * zeta.at(idx_M); }
  double P() const { return weight * zeta.at(idx_P); }
};

MomentTable zeta_moments(const WaveCore& core, int K_max);
MomentTable zeta_moments(const EquationSpec& spec, const WaveParams& p, int K_max,
                         int branch = 0, const Tolerances& tol = {});

// Profile evaluator obtained by inverting z(theta) from its spectrally accurate
// cosine series; u(0) = u_minus, even, T-periodic.
class WaveProfile {
 public:
  static WaveProfile resolve(const EquationSpec& spec, const WaveParams& p, int branch = 0,
                             const Tolerances& tol = {});

  double operator()(double z) const;
  std::vector<double> sample(int n) const;  // u(j T / n), j = 0..n-1

  double period() const { return T_; }
  double u_minus() const { return core_.u_of_v(core_.lo); }
  double u_plus() const { return core_.u_of_v(core_.hi); }
  const EquationSpec& spec() const { return core_.spec; }
  const WaveParams& params() const { return core_.params; }
  const WaveCore& core() const { return core_; }

 private:
  double z_of_theta(double theta) const;
  double h_of_theta(double theta) const;
  double theta_of_z(double z) const;

  WaveCore core_;
  std::vector<double> h_;  // dz/dtheta = h_[0] + sum_j h_[j] cos(2 j theta)
  double T_ = 0.0;
};

// KdV cnoidal family for f = u^2/2.
double cnoidal_eval(double alpha, double beta, double gamma, double z0, double z);
double cnoidal_period(double alpha, double beta, double gamma);

// Focusing mKdV dnoidal family, a = 0, c < 0, E < 0.
struct Dnoidal {
  double k1sq, k2sq, m, period;
};
Dnoidal dnoidal_params(double E, double c);
double dnoidal_eval(double E, double c, double z);

}  // namespace modwave

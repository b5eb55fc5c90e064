#include "modwave/waves.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <fmt/format.h>
#include <numbers>
#include <unsupported/Eigen/FFT>

#include "modwave/elliptic.hpp"

namespace modwave {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMinTheta = 16;
constexpr int kMaxTheta = 1 << 20;

}  // namespace

double WaveCore::v_of_theta(double theta) const {
  const double s = std::sin(theta);
  return lo + (hi - lo) * s * s;
}

double WaveCore::u_of_v(double v) const { return shift() == 0 ? v : std::pow(v, 1 + shift()); }

double WaveCore::dz_dtheta(double v) const {
  const int s = shift();
  const double vs = s == 0 ? 1.0 : std::pow(v, s);
  return std::numbers::sqrt2 * (1 + s) * vs / std::sqrt(peval(q, v));
}

WaveCore resolve_core(const EquationSpec& spec, const WaveParams& p, int branch,
                      const Tolerances& tol) {
  const ParameterClass pc = classify_parameters(spec, p, branch, tol.root);
  if (pc.kind == ParameterClass::OnGamma)
    throw Error(ErrorCode::OnGamma, "parameters lie on the discriminant variety");
  if (pc.kind == ParameterClass::NoBoundedOrbit)
    throw Error(ErrorCode::NoBoundedOrbit, "no bounded orbit for these parameters");
  WaveCore core;
  core.spec = spec;
  core.params = p;
  core.poly = potential_polynomial(spec, p);
  core.lo = pc.selected_v.lo;
  core.hi = pc.selected_v.hi;
  core.q = deflate2(core.poly.coeffs, core.lo, core.hi);
  for (double& x : core.q) x = -x;
  core.tol_quad = tol.quad;
  for (int j = 0; j <= 8; ++j) {
    const double v = core.lo + (core.hi - core.lo) * j / 8.0;
    const double qv = peval(core.q, v);
    if (!(qv > 0.0) || !std::isfinite(qv))
      throw Error(ErrorCode::QuadratureFailure,
                  fmt::format("cofactor not positive on the oscillation interval (q={:.3e})", qv));
  }
  return core;
}

std::vector<double> theta_integrals(WaveCore& core, int count,
                                    const std::function<void(double, double, double*)>& g) {
  std::vector<double> sum(count, 0.0), buf(count), prev(count), cur(count);
  auto add = [&](double theta) {
    g(core.v_of_theta(theta), theta, buf.data());
    for (int i = 0; i < count; ++i) {
      if (!std::isfinite(buf[i]))
        throw Error(ErrorCode::QuadratureFailure, "non-finite regularized integrand");
      sum[i] += buf[i];
    }
  };
  int n = kMinTheta;
  for (int j = 0; j < n; ++j) add(j * kPi / n);
  for (int i = 0; i < count; ++i) prev[i] = sum[i] * kPi / n;
  while (n < kMaxTheta) {
    for (int j = 0; j < n; ++j) add((2 * j + 1) * kPi / (2 * n));
    n *= 2;
    bool done = true;
    for (int i = 0; i < count; ++i) {
      cur[i] = sum[i] * kPi / n;
      if (std::abs(cur[i] - prev[i]) > core.tol_quad * std::max(1.0, std::abs(cur[i]))) done = false;
    }
    if (done) {
      core.n_theta = n;
      return cur;
    }
    prev = cur;
  }
  throw Error(ErrorCode::QuadratureFailure, "trapezoid refinement did not converge");
}

TMPH quadrature_TMPH(const EquationSpec& spec, const WaveParams& p, int branch,
                     const Tolerances& tol) {
  WaveCore core = resolve_core(spec, p, branch, tol);
  const double d = core.hi - core.lo;
  auto r = theta_integrals(core, 4, [&](double v, double theta, double* out) {
    const double w = core.dz_dtheta(v);
    const double u = core.u_of_v(v);
    const double sc = std::sin(theta) * std::cos(theta);
    const double kinetic = d * d * sc * sc * peval(core.q, v);  // u_z^2 / 2
    out[0] = w;
    out[1] = w * u;
    out[2] = w * u * u;
    out[3] = w * (kinetic - antiderivative(spec, u));
  });
  return {r[0], r[1], r[2], r[3]};
}

MomentTable zeta_moments(const WaveCore& core, int K_max) {
  MomentTable t;
  t.shift = core.shift();
  const int e = 1 + t.shift;
  t.weight = e / std::numbers::sqrt2;
  t.idx_T = t.shift;
  t.idx_M = t.shift + e;
  t.idx_P = t.shift + 2 * e;
  const int K = std::max(K_max, t.idx_P);
  WaveCore c = core;
  auto r = theta_integrals(c, K + 1, [&](double v, double, double* out) {
    double vk = 2.0 / std::sqrt(peval(c.q, v));
    for (int k = 0; k <= K; ++k) {
      out[k] = vk;
      vk *= v;
    }
  });
  t.zeta = std::move(r);
  return t;
}

MomentTable zeta_moments(const EquationSpec& spec, const WaveParams& p, int K_max, int branch,
                         const Tolerances& tol) {
  return zeta_moments(resolve_core(spec, p, branch, tol), K_max);
}

WaveProfile WaveProfile::resolve(const EquationSpec& spec, const WaveParams& p, int branch,
                                 const Tolerances& tol) {
  WaveProfile w;
  w.core_ = resolve_core(spec, p, branch, tol);
  theta_integrals(w.core_, 1, [&](double v, double, double* out) { *out = w.core_.dz_dtheta(v); });
  const int n = std::max(64, 2 * w.core_.n_theta);

  std::vector<double> samples(n);
  for (int j = 0; j < n; ++j) samples[j] = w.core_.dz_dtheta(w.core_.v_of_theta(j * kPi / n));
  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> spec_h;
  fft.fwd(spec_h, samples);

  w.h_.assign(1, spec_h[0].real() / n);
  for (int j = 1; j < n / 2; ++j) w.h_.push_back(2.0 * spec_h[j].real() / n);
  const double floor = 1e-17 * std::abs(w.h_[0]);
  while (w.h_.size() > 1 && std::abs(w.h_.back()) <= floor) w.h_.pop_back();
  w.T_ = w.h_[0] * kPi;
  return w;
}

double WaveProfile::z_of_theta(double theta) const {
  double z = h_[0] * theta;
  const double s1 = std::sin(2 * theta), c1 = std::cos(2 * theta);
  double s = s1, c = c1;
  for (std::size_t j = 1; j < h_.size(); ++j) {
    z += h_[j] * s / (2.0 * j);
    const double sn = s * c1 + c * s1;
    c = c * c1 - s * s1;
    s = sn;
  }
  return z;
}

double WaveProfile::h_of_theta(double theta) const {
  double h = h_[0];
  const double s1 = std::sin(2 * theta), c1 = std::cos(2 * theta);
  double s = s1, c = c1;
  for (std::size_t j = 1; j < h_.size(); ++j) {
    h += h_[j] * c;
    const double sn = s * c1 + c * s1;
    c = c * c1 - s * s1;
    s = sn;
  }
  return h;
}

double WaveProfile::theta_of_z(double z) const {
  // z in [0, T/2] -> theta in [0, pi/2]; safeguarded Newton.
  double a = 0.0, b = kPi / 2, theta = kPi * z / T_;
  for (int it = 0; it < 200; ++it) {
    const double f = z_of_theta(theta) - z;
    if (std::abs(f) <= 1e-15 * T_) break;
    if (f > 0) b = theta; else a = theta;
    double next = theta - f / h_of_theta(theta);
    if (!(next > a && next < b)) next = 0.5 * (a + b);
    if (std::abs(next - theta) <= 1e-16) {
      theta = next;
      break;
    }
    theta = next;
  }
  return theta;
}

double WaveProfile::operator()(double z) const {
  double r = std::fmod(z + core_.params.z0, T_);
  if (r < 0) r += T_;
  if (r > 0.5 * T_) r = T_ - r;
  return core_.u_of_v(core_.v_of_theta(theta_of_z(r)));
}

std::vector<double> WaveProfile::sample(int n) const {
  std::vector<double> u(n);
  for (int j = 0; j < n; ++j) u[j] = (*this)(j * T_ / n);
  return u;
}

namespace {

double cnoidal_m(double alpha, double beta, double gamma) {
  if (!(gamma < beta && beta < alpha))
    throw Error(ErrorCode::DomainError, "cnoidal roots must satisfy gamma < beta < alpha");
  return (alpha - beta) / (alpha - gamma);
}

}  // namespace

double cnoidal_eval(double alpha, double beta, double gamma, double z0, double z) {
  const double m = cnoidal_m(alpha, beta, gamma);
  const double cn = jacobi_cn(std::sqrt((alpha - gamma) / 12.0) * (z + z0), m);
  return beta + (alpha - beta) * cn * cn;
}

double cnoidal_period(double alpha, double beta, double gamma) {
  const double m = cnoidal_m(alpha, beta, gamma);
  return 2.0 * elliptic_K(m) / std::sqrt((alpha - gamma) / 12.0);
}

Dnoidal dnoidal_params(double E, double c) {
  const double disc = c * c + 4.0 * E / 3.0;
  if (!(c < 0.0 && E < 0.0 && disc >= 0.0))
    throw Error(ErrorCode::DomainError, "dnoidal family needs c < 0, E < 0, c^2 + 4E/3 >= 0");
  Dnoidal d;
  d.k1sq = 3.0 * (-c - std::sqrt(disc));
  d.k2sq = 3.0 * (-c + std::sqrt(disc));
  d.m = std::clamp(1.0 - d.k1sq / d.k2sq, 0.0, 1.0);
  d.period = 2.0 * elliptic_K(d.m) * std::sqrt(6.0 / d.k2sq);
  return d;
}

double dnoidal_eval(double E, double c, double z) {
  const Dnoidal d = dnoidal_params(E, c);
  const double k2 = std::sqrt(d.k2sq);
  return k2 * jacobi_dn(k2 * z / std::sqrt(6.0), d.m);
}

}  // namespace modwave

#include "modwave/bo.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <numbers>

#include "modwave/errors.hpp"

namespace modwave {

namespace {
constexpr double kPi = std::numbers::pi;
}

void bo_check(const BOParams& p) {
  if (!(p.k > 0.0) || !(p.c < 0.0) || !(p.k * p.k < p.c * p.c - 4.0 * p.a))
    throw Error(ErrorCode::ConstraintViolation,
                fmt::format("BO constraints c < 0, 0 < k^2 < c^2 - 4a violated (a={}, k={}, c={})",
                            p.a, p.k, p.c));
}

double bo_eval(const BOParams& p, double z) {
  bo_check(p);
  const double D = p.c * p.c - 4.0 * p.a;
  const double Dk = D - p.k * p.k;
  return (p.k * p.k / std::sqrt(Dk)) / (std::sqrt(D / Dk) - std::cos(p.k * z)) -
         0.5 * (std::sqrt(D) + p.c);
}

std::vector<double> bo_sample(const BOParams& p, int n) {
  const double T = 2.0 * kPi / p.k;
  std::vector<double> u(n);
  for (int j = 0; j < n; ++j) u[j] = bo_eval(p, j * T / n);
  return u;
}

BOConserved bo_conserved(const BOParams& p) {
  bo_check(p);
  const double s = std::sqrt(p.c * p.c - 4.0 * p.a);
  const double k = p.k, c = p.c;
  BOConserved r;
  r.M = 2.0 * kPi - (kPi / k) * (s + c);
  r.P = -c * kPi + (kPi / (4.0 * k)) * (s + c) * (s + c);
  // ds/da = -2/s, ds/dc = c/s
  r.M_a = 2.0 * kPi / (k * s);
  r.M_c = -(kPi / k) * (s + c) / s;
  r.P_a = -(kPi / k) * (s + c) / s;
  r.P_c = -kPi + (kPi / (2.0 * k)) * (s + c) * (s + c) / s;
  r.MP_ac = r.M_a * r.P_c - r.M_c * r.P_a;
  return r;
}

double bo_mp_closed_form(const BOParams& p) {
  bo_check(p);
  return 2.0 * kPi * kPi / (p.k * std::sqrt(p.c * p.c - 4.0 * p.a));
}

BODispersion bo_dispersion_matrix(double k, double c) {
  bo_check({0.0, k, c});
  const double T = 2.0 * kPi / k, pT = kPi * T;
  BODispersion r;
  r.D << -pT, pT * pT - (kPi / c) * (kPi / c), 0.0,
         1.0, pT, 0.0,
         2.0 * kPi * kPi, 0.0, pT;
  const Eigen::Vector3cd ev = r.D.eigenvalues();
  for (int i = 0; i < 3; ++i) r.eigenvalues[i] = ev(i);
  std::sort(r.eigenvalues.begin(), r.eigenvalues.end(),
            [](auto x, auto y) { return x.real() < y.real(); });
  const double s = pT * std::sqrt(2.0 - 1.0 / (c * T * c * T));
  r.closed_form = {-s, s, pT};
  std::sort(r.closed_form.begin(), r.closed_form.end());
  return r;
}

double bo_galilean_residual(const BOParams& p, double lambda, double s, int n) {
  const BOParams q{p.a - p.c * lambda + s * s, p.k, p.c - 2.0 * s};
  const double T = 2.0 * kPi / p.k;
  double r = 0.0;
  for (int j = 0; j < n; ++j) {
    const double z = j * T / n;
    r = std::max(r, std::abs(bo_eval(q, z) - bo_eval(p, z) - lambda));
  }
  return r;
}

std::array<double, 3> bo_whitham_slopes(const BOParams& p) {
  bo_check(p);
  std::array<double, 3> s{-p.k, p.k, std::sqrt(p.c * p.c - 4.0 * p.a)};
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace modwave

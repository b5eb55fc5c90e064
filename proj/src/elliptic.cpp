#include "modwave/elliptic.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "modwave/errors.hpp"

namespace modwave {

namespace {

void check(double m) {
  if (!(m >= 0.0 && m < 1.0)) throw Error(ErrorCode::DomainError, "elliptic parameter outside [0,1)");
}

}  // namespace

double elliptic_K(double m) {
  check(m);
  double a = 1.0, b = std::sqrt(1.0 - m);
  for (int i = 0; i < 64 && std::abs(a - b) > 1e-16 * a; ++i) {
    const double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
  }
  return std::numbers::pi / (2.0 * a);
}

JacobiSnCnDn jacobi(double z, double m) {
  check(m);
  if (m == 0.0) return {std::sin(z), std::cos(z), 1.0};
  // Abramowitz & Stegun 16.4: AGM sequence, then descend the phase.
  std::array<double, 64> a{}, c{};
  a[0] = 1.0;
  double b = std::sqrt(1.0 - m);
  c[0] = std::sqrt(m);
  int n = 0;
  while (std::abs(c[n]) > 1e-16 && n < 62) {
    a[n + 1] = 0.5 * (a[n] + b);
    c[n + 1] = 0.5 * (a[n] - b);
    b = std::sqrt(a[n] * b);
    ++n;
  }
  double phi = std::ldexp(a[n] * z, n);
  double prev = phi;
  for (int j = n; j > 0; --j) {
    prev = phi;
    phi = 0.5 * (phi + std::asin(c[j] * std::sin(phi) / a[j]));
  }
  const double sn = std::sin(phi), cn = std::cos(phi);
  // dn = cos(phi_0) / cos(phi_1 - phi_0); fall back to the identity when the
  // ratio is ill-defined.
  double dn;
  if (n > 0 && std::abs(std::cos(prev - phi)) > 1e-300)
    dn = cn / std::cos(prev - phi);
  else
    dn = std::sqrt(1.0 - m * sn * sn);
  if (!std::isfinite(dn) || std::abs(cn) < 1e-8) dn = std::sqrt(1.0 - m * sn * sn);
  return {sn, cn, dn};
}

double jacobi_sn(double z, double m) { return jacobi(z, m).sn; }
double jacobi_cn(double z, double m) { return jacobi(z, m).cn; }
double jacobi_dn(double z, double m) { return jacobi(z, m).dn; }

}  // namespace modwave

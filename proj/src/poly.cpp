#include "modwave/poly.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

namespace modwave {

Coeffs trim(Coeffs c) {
  while (c.size() > 1 && c.back() == 0.0) c.pop_back();
  return c;
}

int degree(const Coeffs& c) {
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
    if (c[i] != 0.0) return i;
  return 0;
}

double peval(const Coeffs& c, double x) {
  double r = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
  return r;
}

std::complex<double> peval(const Coeffs& c, std::complex<double> x) {
  std::complex<double> r = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
  return r;
}

Coeffs pderiv(const Coeffs& c) {
  if (c.size() <= 1) return {0.0};
  Coeffs d(c.size() - 1);
  for (std::size_t j = 1; j < c.size(); ++j) d[j - 1] = static_cast<double>(j) * c[j];
  return d;
}

double coeff_norm(const Coeffs& c) {
  double m = 0.0;
  for (double v : c) m = std::max(m, std::abs(v));
  return m;
}

std::vector<std::complex<double>> proots(const Coeffs& c0) {
  const Coeffs c = trim(c0);
  const int n = degree(c);
  if (n < 1) return {};
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) C(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) C(i, n - 1) = -c[i] / c[n];
  Eigen::EigenSolver<Eigen::MatrixXd> es(C, false);
  std::vector<std::complex<double>> r(es.eigenvalues().data(), es.eigenvalues().data() + n);

  const Coeffs d = pderiv(c);
  for (auto& z : r) {
    for (int it = 0; it < 8; ++it) {
      const auto f = peval(c, z);
      const auto fp = peval(d, z);
      if (std::abs(fp) == 0.0) break;
      const auto step = f / fp;
      const auto znew = z - step;
      // Accept only steps that do not increase the residual; near multiple
      // roots Newton stalls and the eigenvalue is already as good as it gets.
      if (std::abs(peval(c, znew)) > std::abs(f)) break;
      z = znew;
      if (std::abs(step) <= 1e-16 * (1.0 + std::abs(z))) break;
    }
  }
  // Real input: re-impose conjugate symmetry on nearly real roots.
  for (auto& z : r)
    if (std::abs(z.imag()) <= 1e-14 * (1.0 + std::abs(z.real()))) z = {z.real(), 0.0};
  return r;
}

Coeffs deflate2(const Coeffs& c0, double r1, double r2) {
  const Coeffs c = trim(c0);
  const int n = degree(c);
  // divide by (x - r1), then by (x - r2), synthetic division from the top
  auto div1 = [](const Coeffs& p, double r) {
    const int m = degree(p);
    Coeffs q(m, 0.0);
    double carry = 0.0;
    for (int i = m; i >= 1; --i) {
      carry = p[i] + carry * r;
      q[i - 1] = carry;
    }
    return q;
  };
  if (n < 2) return {0.0};
  return div1(div1(c, r1), r2);
}

double resultant(const Coeffs& p0, const Coeffs& q0) {
  const Coeffs p = trim(p0), q = trim(q0);
  const int m = degree(p), n = degree(q);
  const int s = m + n;
  if (s == 0) return 1.0;
  Eigen::MatrixXd S = Eigen::MatrixXd::Zero(s, s);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) S(i, i + j) = p[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) S(n + i, i + j) = q[n - j];
  return S.partialPivLu().determinant();
}

double discriminant(const Coeffs& p0) {
  const Coeffs p = trim(p0);
  const int n = degree(p);
  const double sign = ((n * (n - 1) / 2) % 2 == 0) ? 1.0 : -1.0;
  return sign * resultant(p, pderiv(p)) / p[n];
}

}  // namespace modwave

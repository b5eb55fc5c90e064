#include "modwave/smallamp.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <numbers>
#include <unsupported/Eigen/FFT>

namespace modwave {

namespace {

constexpr double kPi = std::numbers::pi;
using cd = std::complex<double>;
constexpr cd I1{0.0, 1.0};

void check_k(double k) {
  if (!(k > 0.0) || !std::isfinite(k)) throw Error(ErrorCode::SymbolDomain, "wave number must be positive");
}

void check_resonance(double k, const DispersionSymbol& sym, const Tolerances& tol) {
  const double m1 = sym(k);
  if (std::abs(m1 - 1.0) < tol.res)
    throw Error(ErrorCode::ResonanceError, fmt::format("m(k) = m(0) at k = {}", k));
  for (int n = 2; n <= 3; ++n)
    if (std::abs(m1 - sym(n * k)) < tol.res)
      throw Error(ErrorCode::ResonanceError, fmt::format("m(k) = m({}k) at k = {}", n, k));
}

}  // namespace

double omega(int n, double xi, double k, const DispersionSymbol& sym) {
  check_k(k);
  return (n + xi) * (sym(k) - sym(k * n + k * xi));
}

double StokesWave::eval(double z) const {
  return w0 + A * std::cos(z) + A * A * (mean2 + harmonic2 * std::cos(2 * z));
}

std::vector<double> StokesWave::sample(int n) const {
  std::vector<double> w(n);
  for (int j = 0; j < n; ++j) w[j] = eval(2 * kPi * j / n);
  return w;
}

StokesWave stokes_expand(double k, double A, double b, const DispersionSymbol& sym,
                         const Tolerances& tol) {
  check_k(k);
  check_resonance(k, sym, tol);
  StokesWave w;
  w.k = k;
  w.A = A;
  w.b = b;
  w.m1 = sym(k);
  w.m2 = sym(2 * k);
  const double one_m = 1.0 - w.m1;
  w.w0 = b * one_m - b * b * one_m;
  w.c0 = w.m1 + 2 * b * one_m - 6 * b * b * one_m;
  w.mean2 = 0.5 / (w.m1 - 1.0);
  w.harmonic2 = 0.5 / (w.m1 - w.m2);
  w.c2 = 1.0 / (w.m1 - 1.0) + 0.5 / (w.m1 - w.m2);
  w.c = w.c0 + A * A * w.c2;
  return w;
}

double stokes_residual(const StokesWave& w, const DispersionSymbol& sym, int n) {
  const std::vector<double> u = w.sample(n);
  Eigen::FFT<double> fft;
  std::vector<cd> uh;
  fft.fwd(uh, u);
  for (int j = 0; j < n; ++j) {
    const int mode = j <= n / 2 ? j : j - n;
    uh[j] *= sym(w.k * mode);
  }
  std::vector<double> Mu;
  fft.inv(Mu, uh);
  double r = 0.0;
  const double rhs = (1.0 - w.c) * (1.0 - w.c) * w.b;
  for (int j = 0; j < n; ++j) r = std::max(r, std::abs(Mu[j] - w.c * u[j] + u[j] * u[j] - rhs));
  return r;
}

Matrix3c mxi_matrix(double k, double A, double xi, const DispersionSymbol& sym,
                    const MxiOptions& opt, const Tolerances& tol) {
  check_k(k);
  check_resonance(k, sym, tol);
  const double m = sym(k), m2 = sym(2 * k), mp = sym.d1(k), mpp = sym.d2(k);
  Matrix3c M = Matrix3c::Zero();
  M(1, 2) = opt.constant_2A ? 2.0 * A : 2.0;
  if (opt.exact_omega) {
    const double w1 = omega(1, xi, k, sym), wm1 = omega(-1, xi, k, sym), w0 = omega(0, xi, k, sym);
    M(0, 0) += 0.5 * I1 * (w1 + wm1);
    M(1, 1) += 0.5 * I1 * (w1 + wm1);
    M(0, 1) += 0.5 * (w1 - wm1);
    M(1, 0) -= 0.5 * (w1 - wm1);
    M(2, 2) += I1 * w0;
  } else {
    const double s = k * mp + 0.5 * k * k * mpp;
    M(0, 0) += I1 * xi * (-k * mp);
    M(1, 1) += I1 * xi * (-k * mp);
    M(2, 2) += I1 * xi * (m - 1.0);
    M(0, 1) -= xi * xi * s;
    M(1, 0) += xi * xi * s;
  }
  const double g = 1.0 + (m - 1.0) / (2.0 * (m - m2));
  M(0, 2) -= I1 * xi * A * g * 2.0;
  M(2, 0) -= I1 * xi * A * g;
  return M;
}

Eigen::Matrix3d identity_proj(double k, double A, const DispersionSymbol& sym,
                              const Tolerances& tol) {
  check_k(k);
  check_resonance(k, sym, tol);
  const double h = A / (sym(k) - sym(2 * k));
  Eigen::Matrix3d P = Eigen::Matrix3d::Identity();
  P(0, 2) -= h;
  P(2, 0) -= 0.5 * h;
  return P;
}

namespace {

using cld = std::complex<long double>;
using Poly3 = std::array<cld, 4>;  // ascending in lambda

Poly3 pmul(const Poly3& a, const Poly3& b) {
  Poly3 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; i + j < 4; ++j) r[i + j] += a[i] * b[j];
  return r;
}

std::array<cd, 3> cubic_roots(const std::array<cd, 4>& c) {
  // companion matrix of c3 x^3 + c2 x^2 + c1 x + c0
  Eigen::Matrix3cd C = Eigen::Matrix3cd::Zero();
  C(1, 0) = 1.0;
  C(2, 1) = 1.0;
  for (int i = 0; i < 3; ++i) C(i, 2) = -c[i] / c[3];
  const Eigen::Vector3cd ev = C.eigenvalues();
  std::array<cd, 3> r{ev(0), ev(1), ev(2)};
  for (auto& z : r) {
    const cd f = ((c[3] * z + c[2]) * z + c[1]) * z + c[0];
    const cd df = (3.0 * c[3] * z + 2.0 * c[2]) * z + c[1];
    if (std::abs(df) > 0) z -= f / df;
  }
  std::sort(r.begin(), r.end(), [](cd x, cd y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });
  return r;
}

}  // namespace

CharPoly char_poly(double k, double A, double xi, const DispersionSymbol& sym,
                   const MxiOptions& opt, const Tolerances& tol) {
  if (xi == 0.0) throw Error(ErrorCode::DomainError, "xi must be nonzero");
  const Matrix3c M = mxi_matrix(k, A, xi, sym, opt, tol);
  const Eigen::Matrix3d P = identity_proj(k, A, sym, tol);
  // The discriminant cancels to O(xi^2); extended precision keeps it accurate.
  Poly3 e[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      e[i][j] = {cld(M(i, j).real(), M(i, j).imag()), cld(-P(i, j)), 0.0L, 0.0L};
  const int perm[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  const long double sgn[6] = {1, -1, -1, 1, 1, -1};
  Poly3 raw{};
  for (int p = 0; p < 6; ++p) {
    Poly3 t = pmul(pmul(e[0][perm[p][0]], e[1][perm[p][1]]), e[2][perm[p][2]]);
    for (int i = 0; i < 4; ++i) raw[i] += sgn[p] * t[i];
  }
  CharPoly cp;
  for (int i = 0; i < 4; ++i) cp.raw[i] = cd(static_cast<double>(raw[i].real()), static_cast<double>(raw[i].imag()));
  const long double cext[4] = {raw[0].imag(), raw[1].real(), raw[2].imag(), raw[3].real()};
  const long double bad[4] = {raw[0].real(), raw[1].imag(), raw[2].real(), raw[3].imag()};
  for (int j = 0; j < 4; ++j) {
    const double scale = std::max(std::abs(cp.raw[j]), std::pow(std::abs(xi), 3 - j));
    if (std::abs(static_cast<double>(bad[j])) > 1e-10 * scale)
      throw Error(ErrorCode::ParityViolation,
                  fmt::format("coefficient of lambda^{} has the wrong phase ({:.3e})", j,
                              static_cast<double>(bad[j])));
  }
  for (int j = 0; j < 4; ++j) {
    cp.c[j] = static_cast<double>(cext[j]);
    cp.d_ext[j] = cext[j] / std::pow(static_cast<long double>(xi), 3 - j);
    cp.d[j] = static_cast<double>(cp.d_ext[j]);
  }
  return cp;
}

template <class R>
R delta_from_d_impl(const std::array<R, 4>& d) {
  const R d0 = d[0], d1 = d[1], d2 = d[2], d3 = d[3];
  return 18 * d3 * d2 * d1 * d0 + d2 * d2 * d1 * d1 + 4 * d2 * d2 * d2 * d0 +
         4 * d3 * d1 * d1 * d1 - 27 * d3 * d3 * d0 * d0;
}

double delta_from_d(const std::array<double, 4>& d) { return delta_from_d_impl(d); }
long double delta_from_d(const std::array<long double, 4>& d) { return delta_from_d_impl(d); }

double delta_discriminant(double k, double A, double xi, const DispersionSymbol& sym,
                          const MxiOptions& opt, const Tolerances& tol) {
  return static_cast<double>(delta_from_d(char_poly(k, A, xi, sym, opt, tol).d_ext));
}

double delta_product_formula(double k, double xi, const DispersionSymbol& sym) {
  const double w0 = omega(0, xi, k, sym), w1 = omega(1, xi, k, sym), wm1 = omega(-1, xi, k, sym);
  const double p = (w0 - w1) * (w0 - wm1) * (w1 - wm1) / (xi * xi * xi);
  return p * p;
}

std::array<std::complex<double>, 3> depressed_roots(const CharPoly& cp) {
  const auto& d = cp.d;
  return cubic_roots({cd(-d[0]), cd(d[1]), cd(d[2]), cd(-d[3])});
}

std::array<std::complex<double>, 3> lambda_roots(const CharPoly& cp) { return cubic_roots(cp.raw); }

LambdaIndex lambda_index(double k, const DispersionSymbol& sym, const Tolerances& tol) {
  check_k(k);
  check_resonance(k, sym, tol);
  const double m = sym(k), m2 = sym(2 * k), mp = sym.d1(k), mpp = sym.d2(k);
  const double f1 = m - 1.0 + k * mp;  // (k(m-1))'
  const double f2 = 2.0 * mp + k * mpp;  // (k(m-1))''
  LambdaIndex r;
  r.Gamma = 2.0 * (m - m2) + f1;
  r.Lambda = 2.0 * k * f1 * f1 * f1 * f2 * r.Gamma / (m - m2);
  return r;
}

double lambda_oracle(double k, const DispersionSymbol& sym, double A0, double xi0,
                     const Tolerances& tol) {
  auto q = [&](double A, double xi) {
    return (delta_discriminant(k, A, xi, sym, {}, tol) - delta_discriminant(k, 0.0, xi, sym, {}, tol)) /
           (A * A);
  };
  // q carries A^2 and A^4 corrections: two Richardson levels in A.
  auto qa = [&](double xi) {
    const double q1 = q(A0, xi), q2 = q(0.5 * A0, xi), q4 = q(0.25 * A0, xi);
    const double r1 = (4.0 * q2 - q1) / 3.0, r2 = (4.0 * q4 - q2) / 3.0;
    return (16.0 * r2 - r1) / 15.0;
  };
  return (4.0 * qa(0.5 * xi0) - qa(xi0)) / 3.0;
}

std::vector<GammaSample> gamma_curve(const DispersionSymbol& sym, double lo, double hi,
                                     double step) {
  if (!(step > 0.0) || !(hi >= lo)) throw Error(ErrorCode::ConfigError, "invalid k range");
  std::vector<GammaSample> out;
  const int n = static_cast<int>(std::floor((hi - lo) / step + 1e-9));
  for (int i = 0; i <= n; ++i) {
    const double k = lo + i * step;
    const LambdaIndex li = lambda_index(k, sym);
    out.push_back({k, li.Gamma, li.Lambda});
  }
  return out;
}

KStar find_kstar(const DispersionSymbol& sym, double lo, double hi, double step, double tol_k) {
  const auto curve = gamma_curve(sym, lo, hi, step);
  KStar r{NAN, NAN, NAN, 0};
  for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
    if ((curve[i].Gamma > 0) != (curve[i + 1].Gamma > 0)) {
      if (r.sign_changes++ == 0) {
        r.lo = curve[i].k;
        r.hi = curve[i + 1].k;
      }
    }
  }
  if (r.sign_changes == 0) return r;
  double a = r.lo, b = r.hi;
  const bool pos_a = lambda_index(a, sym).Gamma > 0;
  while (b - a > tol_k) {
    const double mid = 0.5 * (a + b);
    if ((lambda_index(mid, sym).Gamma > 0) == pos_a) a = mid; else b = mid;
  }
  r.kstar = 0.5 * (a + b);
  return r;
}

double lambda_fkdv(double k, double alpha) {
  if (!(alpha > 0.5)) throw Error(ErrorCode::DomainError, "fKdV index requires alpha > 1/2");
  check_k(k);
  const double a = alpha;
  return 2.0 * std::pow(k, 4 * a) * a * std::pow(1 + a, 4) * (std::pow(2.0, a + 1) - 3 - a) /
         (std::pow(2.0, a) - 1);
}

namespace {

// sum_{n>=2} coef(n) z^{2n} / (2n)!, with every term nonnegative.
template <class Coef>
double even_series(double z, Coef coef, double growth) {
  const double z2 = z * z;
  double t = 1.0;  // z^{2n} / (2n)!
  double sum = 0.0;
  for (int n = 1; n < 2000; ++n) {
    t *= z2 / ((2.0 * n - 1) * (2.0 * n));
    if (n < 2) continue;
    const double term = coef(n, t);
    sum += term;
    if (n > growth * std::abs(z) + 4 && term <= 1e-17 * sum) break;
  }
  return sum;
}

}  // namespace

double gamma_ilw(double z) {
  // (2z)^{2n} (2n - 1) / (2n)!
  return even_series(z, [](int n, double t) { return std::pow(4.0, n) * (2.0 * n - 1) * t; }, 2.0);
}

double delta_ilw(double k, double H) {
  if (!(k > 0.0) || !(H > 0.0)) throw Error(ErrorCode::DomainError, "ILW index needs k, H > 0");
  const double z = H * k;
  // (4z^2 - 1) cosh z + cosh 3z - 8z sinh z = sum (9^n + 16n^2 - 24n - 1) z^{2n} / (2n)!
  const double N = even_series(z, [](int n, double t) {
    return (std::pow(9.0, n) + 16.0 * n * n - 24.0 * n - 1.0) * t;
  }, 3.0);
  const double sh = std::sinh(z);
  return N * N / (32.0 * std::pow(H, 4) * std::pow(sh, 12)) * gamma_ilw(z);
}

}  // namespace modwave

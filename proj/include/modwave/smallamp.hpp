#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <vector>

#include "modwave/errors.hpp"
#include "modwave/symbol.hpp"

namespace modwave {

// omega_{n,xi}(k) = (n + xi)(m(k) - m(k n + k xi))
double omega(int n, double xi, double k, const DispersionSymbol& sym);

// Small-amplitude 2 pi-periodic solutions of M_k w - c w + w^2 - (1 - c)^2 b = 0.
struct StokesWave {
  double k = 0.0, A = 0.0, b = 0.0;
  double m1 = 0.0, m2 = 0.0;  // m(k), m(2k)
  double w0 = 0.0, c0 = 0.0;
  double mean2 = 0.0;       // A^2 coefficient of the mean: 1 / (2 (m(k) - 1))
  double harmonic2 = 0.0;   // A^2 coefficient of cos(2z): 1 / (2 (m(k) - m(2k)))
  double c2 = 0.0;          // A^2 coefficient of c
  double c = 0.0;           // c0 + A^2 c2

  double eval(double z) const;
  std::vector<double> sample(int n) const;  // w(2 pi j / n)
};

StokesWave stokes_expand(double k, double A, double b, const DispersionSymbol& sym,
                         const Tolerances& tol = {});

// Max-norm residual of the profile equation for the truncated expansion,
// with M_k applied pseudospectrally on n points.
double stokes_residual(const StokesWave& w, const DispersionSymbol& sym, int n = 64);

struct MxiOptions {
  // Use the exact constant-state block (omega entries) in place of its
  // O(xi^2) Taylor truncation.
  bool exact_omega = true;
  // Entry (2,3) of the constant block is 2A; false reproduces a literal 2.
  bool constant_2A = true;
};

using Matrix3c = Eigen::Matrix3cd;

Matrix3c mxi_matrix(double k, double A, double xi, const DispersionSymbol& sym,
                    const MxiOptions& opt = {}, const Tolerances& tol = {});
Eigen::Matrix3d identity_proj(double k, double A, const DispersionSymbol& sym,
                              const Tolerances& tol = {});

// det(M - lambda P) = c3 lambda^3 + i c2 lambda^2 + c1 lambda + i c0 (c_j real).
struct CharPoly {
  std::array<std::complex<double>, 4> raw;  // coefficients of lambda^0..lambda^3
  std::array<double, 4> c;                  // c0..c3
  std::array<double, 4> d;                  // d_j = c_j / xi^{3-j}
  std::array<long double, 4> d_ext;         // d_j carried in extended precision
};

CharPoly char_poly(double k, double A, double xi, const DispersionSymbol& sym,
                   const MxiOptions& opt = {}, const Tolerances& tol = {});

// Discriminant of -d3 X^3 + d2 X^2 + d1 X - d0; ParityViolation when the
// realness pattern of the c_j fails.
double delta_discriminant(double k, double A, double xi, const DispersionSymbol& sym,
                          const MxiOptions& opt = {}, const Tolerances& tol = {});
double delta_from_d(const std::array<double, 4>& d);
long double delta_from_d(const std::array<long double, 4>& d);

// [(omega_0 - omega_1)(omega_0 - omega_-1)(omega_1 - omega_-1)]^2 / xi^6
double delta_product_formula(double k, double xi, const DispersionSymbol& sym);

// Roots X of -d3 X^3 + d2 X^2 + d1 X - d0, and lambda = -i xi X computed from
// the characteristic polynomial directly.
std::array<std::complex<double>, 3> depressed_roots(const CharPoly& cp);
std::array<std::complex<double>, 3> lambda_roots(const CharPoly& cp);

struct LambdaIndex {
  double Lambda, Gamma;
};

// Gamma = 2(m(k) - m(2k)) + (k(m-1))',
// Lambda = 2k [(k(m-1))']^3 (k(m-1))'' Gamma / (m(k) - m(2k)).
LambdaIndex lambda_index(double k, const DispersionSymbol& sym, const Tolerances& tol = {});

// A^2 coefficient of Delta from second differences in A, Richardson-extrapolated
// over A in {A0, A0/2, A0/4} and xi in {xi0, xi0/2}.
double lambda_oracle(double k, const DispersionSymbol& sym, double A0 = 1e-2, double xi0 = 1e-3,
                     const Tolerances& tol = {});

struct KStar {
  double kstar, lo, hi;
  int sign_changes;  // on the scan grid
};

// Scan Gamma on [lo, hi] with the given step and bisect the sign change.
KStar find_kstar(const DispersionSymbol& sym, double lo = 0.1, double hi = 3.0,
                 double step = 0.01, double tol_k = 1e-10);

struct GammaSample {
  double k, Gamma, Lambda;
};
std::vector<GammaSample> gamma_curve(const DispersionSymbol& sym, double lo, double hi,
                                     double step);

// 2 k^{4 alpha} alpha (1 + alpha)^4 (2^{alpha+1} - 3 - alpha) / (2^alpha - 1)
double lambda_fkdv(double k, double alpha);

// 1 - 2z^2 - cosh 2z + 2z sinh 2z, summed as its positive power series.
double gamma_ilw(double z);
double delta_ilw(double k, double H);

}  // namespace modwave

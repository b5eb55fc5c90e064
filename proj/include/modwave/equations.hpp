#pragma once

#include <complex>
#include <memory>
#include <string>
#include <vector>

#include "modwave/errors.hpp"
#include "modwave/poly.hpp"
#include "modwave/symbol.hpp"

namespace modwave {

enum class EquationKind { LocalPolynomial, LocalPowerLaw, Nonlocal };

// u_t = u_xxx + f(u)_x for the local kinds; u_t + M u_x + f(u)_x = 0 with
// Fourier multiplier M for the nonlocal kind.
struct EquationSpec {
  EquationKind kind = EquationKind::LocalPolynomial;
  std::string name;
  Coeffs f;            // LocalPolynomial / Nonlocal: f(u), ascending
  double power = 0.0;  // LocalPowerLaw: f(u) = sigma |u|^power
  double sigma = 0.0;
  std::shared_ptr<const DispersionSymbol> symbol;  // Nonlocal only
};

EquationSpec gkdv(Coeffs f, std::string name = "gkdv");
EquationSpec kdv();                    // f = u^2/2
EquationSpec mkdv(bool focusing);      // f = +-u^3/3
EquationSpec schamel();                // f = (5/2)|u|^{3/2}, so F = |u|^{5/2}
EquationSpec power_law(double power, double sigma, std::string name = "power");
EquationSpec nonlocal(DispersionSymbol symbol, Coeffs f, std::string name = "");
EquationSpec equation_by_name(const std::string& name);

double nonlinearity(const EquationSpec& spec, double u);        // f(u)
double nonlinearity_prime(const EquationSpec& spec, double u);  // f'(u)
double antiderivative(const EquationSpec& spec, double u);      // F(u), F(0) = 0

// V(u; a, c) = F(u) + (c/2) u^2 - a u
double effective_potential(const EquationSpec& spec, double a, double c, double u);

struct WaveParams {
  double a = 0.0;
  double E = 0.0;
  double c = 0.0;
  double z0 = 0.0;
};

// P = E - V written as a polynomial in the integration variable v. For the
// polynomial kinds v = u; for power laws u = v^2 so that P is polynomial in v.
struct PotentialPolynomial {
  Coeffs coeffs;
  int degree = 0;
  int shift = 0;  // u = v^{1+shift}
  // Column of d(coeffs)/d(a, E, c): index of the monomial each parameter
  // multiplies and its coefficient.
  int a_index = 1, c_index = 2;
  double c_factor = -0.5;
};

PotentialPolynomial potential_polynomial(const EquationSpec& spec, const WaveParams& p);

struct RootSet {
  std::vector<double> real;                 // ascending
  std::vector<std::complex<double>> all;    // every root
  int complex_pairs = 0;
};

// Throws DegenerateRoots when two roots coincide within tol.
RootSet potential_roots(const PotentialPolynomial& poly, double tol_root = 1e-9);

// Polynomial discriminant of P via the resultant of (P, P').
double discriminant(const PotentialPolynomial& poly);

// Closed form of the KdV discriminant under the adopted sign convention.
double kdv_discriminant(double a, double E, double c);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

struct ParameterClass {
  enum Kind { Periodic, OnGamma, NoBoundedOrbit } kind = NoBoundedOrbit;
  std::vector<Interval> intervals;  // in the integration variable, ordered by left end
  Interval selected;                // chosen interval, in u
  Interval selected_v;              // chosen interval, in the integration variable
};

// Periodic when a bounded orbit exists; the branch index picks among
// coexisting intervals (0 = leftmost).
ParameterClass classify_parameters(const EquationSpec& spec, const WaveParams& p,
                                   int branch = 0, double tol_root = 1e-9);

// Roots gamma < beta < alpha of E - V for KdV -> (a, E, c).
WaveParams kdv_params_from_roots(double alpha, double beta, double gamma);

// Text and hash of the resolved sign/grouping conventions.
const std::string& convention_text();
std::string convention_fingerprint();

}  // namespace modwave

#pragma once

#include <complex>
#include <vector>

namespace modwave {

// Real polynomial, coefficients in ascending degree: c[0] + c[1] x + ...
using Coeffs = std::vector<double>;

Coeffs trim(Coeffs c);
int degree(const Coeffs& c);

double peval(const Coeffs& c, double x);
std::complex<double> peval(const Coeffs& c, std::complex<double> x);
Coeffs pderiv(const Coeffs& c);

// Max-abs coefficient norm.
double coeff_norm(const Coeffs& c);

// All complex roots: companion-matrix eigenvalues, then Newton polishing.
std::vector<std::complex<double>> proots(const Coeffs& c);

// Quotient of c by (x - r1)(x - r2); the remainder is discarded.
Coeffs deflate2(const Coeffs& c, double r1, double r2);

// Resultant of (p, q) as the determinant of their Sylvester matrix.
double resultant(const Coeffs& p, const Coeffs& q);

// Standard discriminant (-1)^{n(n-1)/2} Res(p, p') / a_n.
double discriminant(const Coeffs& p);

}  // namespace modwave

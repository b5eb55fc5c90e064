#pragma once

namespace modwave {

// Parameter convention: m = k^2 (elliptic parameter), 0 <= m < 1.

// Complete elliptic integral of the first kind via the arithmetic-geometric mean.
double elliptic_K(double m);

struct JacobiSnCnDn {
  double sn, cn, dn;
};

// Descending Landen (AGM) scheme.
JacobiSnCnDn jacobi(double z, double m);
double jacobi_sn(double z, double m);
double jacobi_cn(double z, double m);
double jacobi_dn(double z, double m);

}  // namespace modwave

#include "modwave/equations.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fmt/format.h>

namespace modwave {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonlocalUnsupported: return "NonlocalUnsupported";
    case ErrorCode::DegenerateRoots: return "DegenerateRoots";
    case ErrorCode::OnGamma: return "OnGamma";
    case ErrorCode::NoBoundedOrbit: return "NoBoundedOrbit";
    case ErrorCode::QuadratureFailure: return "QuadratureFailure";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::IllConditioned: return "IllConditioned";
    case ErrorCode::HypothesisFailed: return "HypothesisFailed";
    case ErrorCode::DegenerateDiscriminant: return "DegenerateDiscriminant";
    case ErrorCode::ConstraintViolation: return "ConstraintViolation";
    case ErrorCode::SymbolDomain: return "SymbolDomain";
    case ErrorCode::ResonanceError: return "ResonanceError";
    case ErrorCode::ParityViolation: return "ParityViolation";
    case ErrorCode::ResolutionError: return "ResolutionError";
    case ErrorCode::BranchMixing: return "BranchMixing";
    case ErrorCode::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

EquationSpec gkdv(Coeffs f, std::string name) {
  f = trim(std::move(f));
  if (degree(f) < 1) throw Error(ErrorCode::DomainError, "nonlinearity must have degree >= 1");
  EquationSpec s;
  s.kind = EquationKind::LocalPolynomial;
  s.name = std::move(name);
  s.f = std::move(f);
  return s;
}

EquationSpec kdv() { return gkdv({0.0, 0.0, 0.5}, "kdv"); }

EquationSpec mkdv(bool focusing) {
  const double s = focusing ? 1.0 / 3.0 : -1.0 / 3.0;
  return gkdv({0.0, 0.0, 0.0, s}, focusing ? "mkdv-focusing" : "mkdv-defocusing");
}

EquationSpec power_law(double power, double sigma, std::string name) {
  const double twice = 2.0 * (power + 1.0);
  if (!(power > 0.0) || std::abs(twice - std::round(twice)) > 1e-12)
    throw Error(ErrorCode::DomainError, "power-law exponent must be a positive half-integer");
  EquationSpec s;
  s.kind = EquationKind::LocalPowerLaw;
  s.name = std::move(name);
  s.power = power;
  s.sigma = sigma;
  return s;
}

EquationSpec schamel() { return power_law(1.5, 2.5, "schamel"); }

EquationSpec nonlocal(DispersionSymbol symbol, Coeffs f, std::string name) {
  EquationSpec s;
  s.kind = EquationKind::Nonlocal;
  s.name = name.empty() ? symbol.name() : std::move(name);
  s.f = trim(std::move(f));
  s.symbol = std::make_shared<const DispersionSymbol>(std::move(symbol));
  return s;
}

EquationSpec equation_by_name(const std::string& name) {
  if (name == "kdv") return kdv();
  if (name == "mkdv-focusing") return mkdv(true);
  if (name == "mkdv-defocusing") return mkdv(false);
  if (name == "schamel") return schamel();
  if (name == "whitham") return nonlocal(DispersionSymbol::whitham(), {0, 0, 1});
  if (name == "bo") return nonlocal(DispersionSymbol::bo(), {0, 0, 1});
  throw Error(ErrorCode::ConfigError, "unknown equation '" + name + "'");
}

double nonlinearity(const EquationSpec& spec, double u) {
  if (spec.kind == EquationKind::LocalPowerLaw) return spec.sigma * std::pow(std::abs(u), spec.power);
  return peval(spec.f, u);
}

double nonlinearity_prime(const EquationSpec& spec, double u) {
  if (spec.kind == EquationKind::LocalPowerLaw) {
    const double au = std::abs(u);
    const double d = spec.sigma * spec.power * std::pow(au, spec.power - 1.0);
    return u < 0 ? -d : d;
  }
  return peval(pderiv(spec.f), u);
}

double antiderivative(const EquationSpec& spec, double u) {
  if (spec.kind == EquationKind::LocalPowerLaw) {
    const double F = spec.sigma * std::pow(std::abs(u), spec.power + 1.0) / (spec.power + 1.0);
    return u < 0 ? -F : F;
  }
  double r = 0.0;
  for (std::size_t j = spec.f.size(); j-- > 0;) r = (r + spec.f[j] / (j + 1.0)) * u;
  return r;
}

double effective_potential(const EquationSpec& spec, double a, double c, double u) {
  if (spec.kind == EquationKind::Nonlocal)
    throw Error(ErrorCode::NonlocalUnsupported, "no pointwise potential for a nonlocal equation");
  return antiderivative(spec, u) + 0.5 * c * u * u - a * u;
}

PotentialPolynomial potential_polynomial(const EquationSpec& spec, const WaveParams& p) {
  PotentialPolynomial P;
  switch (spec.kind) {
    case EquationKind::Nonlocal:
      throw Error(ErrorCode::NonlocalUnsupported, "no potential polynomial for a nonlocal equation");
    case EquationKind::LocalPolynomial: {
      const int nf = degree(spec.f);
      Coeffs c(std::max(3, nf + 2), 0.0);
      for (int j = 0; j <= nf; ++j) c[j + 1] -= spec.f[j] / (j + 1.0);
      c[0] += p.E;
      c[1] += p.a;
      c[2] -= 0.5 * p.c;
      P.coeffs = trim(c);
      P.shift = 0;
      P.a_index = 1;
      P.c_index = 2;
      break;
    }
    case EquationKind::LocalPowerLaw: {
      const int top = static_cast<int>(std::lround(2.0 * (spec.power + 1.0)));
      Coeffs c(std::max(5, top + 1), 0.0);
      c[0] = p.E;
      c[2] = p.a;
      c[4] = -0.5 * p.c;
      c[top] -= spec.sigma / (spec.power + 1.0);
      P.coeffs = trim(c);
      P.shift = 1;
      P.a_index = 2;
      P.c_index = 4;
      break;
    }
  }
  P.c_factor = -0.5;
  P.degree = degree(P.coeffs);
  return P;
}

RootSet potential_roots(const PotentialPolynomial& poly, double tol_root) {
  if (poly.degree < 2) throw Error(ErrorCode::DomainError, "potential polynomial degree < 2");
  RootSet rs;
  rs.all = proots(poly.coeffs);
  double R = 0.0;
  for (auto z : rs.all) R = std::max(R, std::abs(z));

  // Multiplicity: a scale-free discriminant catches exact multiple roots that
  // the eigenvalue solver splits by ~sqrt(eps); the pairwise test catches the rest.
  const int n = poly.degree;
  const double lead = std::abs(poly.coeffs[n]);
  const double drel = std::abs(discriminant(poly.coeffs)) / std::pow(lead, 2.0 * n - 2.0) /
                      std::pow(R > 0.0 ? R : 1.0, n * (n - 1.0));
  if (drel <= tol_root)
    throw Error(ErrorCode::DegenerateRoots, fmt::format("normalized discriminant {:.3e}", drel));
  for (std::size_t i = 0; i < rs.all.size(); ++i)
    for (std::size_t j = i + 1; j < rs.all.size(); ++j) {
      const double d = std::abs(rs.all[i] - rs.all[j]);
      if (d <= tol_root * (1.0 + std::abs(rs.all[i]) + std::abs(rs.all[j])))
        throw Error(ErrorCode::DegenerateRoots, fmt::format("roots within {:.3e}", d));
    }

  for (auto z : rs.all) {
    if (std::abs(z.imag()) <= tol_root * (1.0 + std::abs(z)))
      rs.real.push_back(z.real());
    else if (z.imag() > 0)
      ++rs.complex_pairs;
  }
  std::sort(rs.real.begin(), rs.real.end());
  return rs;
}

double discriminant(const PotentialPolynomial& poly) { return discriminant(poly.coeffs); }

double kdv_discriminant(double a, double E, double c) {
  return (8 * a * a * a + 3 * a * a * c * c + 18 * E * a * c + 6 * E * c * c * c - 9 * E * E) / 12.0;
}

ParameterClass classify_parameters(const EquationSpec& spec, const WaveParams& p, int branch,
                                   double tol_root) {
  const PotentialPolynomial P = potential_polynomial(spec, p);
  ParameterClass pc;
  RootSet rs;
  try {
    rs = potential_roots(P, tol_root);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DegenerateRoots) throw;
    pc.kind = ParameterClass::OnGamma;
    return pc;
  }
  for (std::size_t i = 0; i + 1 < rs.real.size(); ++i) {
    const double lo = rs.real[i], hi = rs.real[i + 1];
    if (P.shift > 0 && lo <= 0.0) continue;  // u = v^2 needs v > 0
    if (peval(P.coeffs, 0.5 * (lo + hi)) > 0.0) pc.intervals.push_back({lo, hi});
  }
  if (pc.intervals.empty()) {
    pc.kind = ParameterClass::NoBoundedOrbit;
    return pc;
  }
  if (branch < 0 || branch >= static_cast<int>(pc.intervals.size()))
    throw Error(ErrorCode::DomainError,
                fmt::format("branch {} requested, {} interval(s) available", branch,
                            pc.intervals.size()));
  pc.kind = ParameterClass::Periodic;
  pc.selected_v = pc.intervals[branch];
  const int e = 1 + P.shift;
  pc.selected = {std::pow(pc.selected_v.lo, e), std::pow(pc.selected_v.hi, e)};
  return pc;
}

WaveParams kdv_params_from_roots(double alpha, double beta, double gamma) {
  if (!(gamma < beta && beta < alpha))
    throw Error(ErrorCode::DomainError, "roots must satisfy gamma < beta < alpha");
  WaveParams w;
  w.E = alpha * beta * gamma / 6.0;
  w.a = -(alpha * beta + beta * gamma + gamma * alpha) / 6.0;
  w.c = -(alpha + beta + gamma) / 3.0;
  return w;
}

const std::string& convention_text() {
  static const std::string text =
      "V=F+(c/2)u^2-au;"
      "kdv:f=u^2/2;mkdv:f=+-u^3/3;schamel:F=|u|^(5/2);"
      "dZk/dE=-I_k/2,dZk/da=-I_(k+1)/2,dZk/dc=+I_(k+2)/4;"
      "D(mu)=-mu^3+(mu/2)(2{M,P}aE-{T,P}Ec)+{T,M,P}/2;"
      "bloch_slope=-T/mu;"
      "Mxi(2,3)=2A;Lambda=2k((k(m-1))')^3(k(m-1))''Gamma/(m(k)-m(2k));"
      "bo:L=d(Lambda-c-2u);bo_gal:s=lambda";
  return text;
}

std::string convention_fingerprint() {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : convention_text()) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return fmt::format("{:016x}", h);
}

}  // namespace modwave

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace modwave {

enum class ErrorCode {
  NonlocalUnsupported,
  DegenerateRoots,
  OnGamma,
  NoBoundedOrbit,
  QuadratureFailure,
  DomainError,
  SingularSystem,
  IllConditioned,
  HypothesisFailed,
  DegenerateDiscriminant,
  ConstraintViolation,
  SymbolDomain,
  ResonanceError,
  ParityViolation,
  ResolutionError,
  BranchMixing,
  ConfigError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Tolerances shared across modules. Defaults follow the published contract.
struct Tolerances {
  double root = 1e-9;       // realness / multiplicity of potential roots (relative)
  double quad = 1e-11;      // quadrature convergence
  double cond_max = 1e12;   // Picard-Fuchs condition number ceiling
  double im = 1e-8;         // |Im mu| for a "real" root of D(mu)
  double sep = 1e-8;        // pairwise separation of real roots
  double hyp = 1e-10;       // hypothesis determinants
  double deg = 1e-8;        // Delta_MI degeneracy, relative to the term magnitudes
  double res = 1e-8;        // resonance denominators
  double h_sym = 1e-5;      // symbol finite-difference step
};

}  // namespace modwave

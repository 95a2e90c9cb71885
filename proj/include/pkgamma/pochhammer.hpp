#pragma once

#include <span>

#include "pkgamma/core.hpp"

namespace pkgamma {

/// Argument, step count and deformation pair of one Pochhammer evaluation.
struct PochSpec {
  double x = 0.0;
  int n = 0;
  PkParams params{1.0, 1.0};

  void validate() const;
};

/// prod_{j=0}^{n-1} (x p / k + j p). Empty product is 1. May overflow to
/// +-inf; use poch_ln for large arguments.
double poch_direct(const PochSpec& spec);

/// Log-space companion of poch_direct. A vanishing factor gives ln_abs = -inf.
SignedLog poch_ln(const PochSpec& spec);

/// Elementary symmetric polynomial e_s of `values` (degree-by-degree
/// polynomial build, O(n s)). Throws Index when s > values.size().
double elementary_symmetric(std::span<const double> values, int s);

// Expansion in powers of x/k with coefficients e_s(1, ..., n-1).
double poch_symmetric(const PochSpec& spec);

// p^n (x/k)_n through the classical rising factorial.
double poch_reduce(const PochSpec& spec);

// (p q)^(n q) prod_{r=1}^{q} ((x/k + r - 1)/q)_n, equal to the symbol with
// n*q factors.
double poch_generalized(const PochSpec& spec, int q);

// Gamma ratio G(x + n k) / G(x) computed in log space. Throws PoleError.
double poch_gamma_ratio(const PochSpec& spec);

/// d/dp of the symbol: (n / p) times the symbol.
double poch_dp(const PochSpec& spec);

/// d/dk of the symbol as a logarithmic derivative:
/// value * (-n/k + sum_{s=1}^{n-1} s / (x + s k)).
/// Throws Domain when a factor x + s k vanishes.
double poch_dk(const PochSpec& spec);

/// Same derivative by the product rule:
/// (p/k) sum_{s=1}^{n-1} s P(x)_s P(x + (s+1)k)_{n-1-s} - (n/k) P(x)_n.
double poch_dk_product(const PochSpec& spec);

/// The printed variant that multiplies the full symbol P(x)_n inside the
/// sum instead of P(x)_s. Used by the audit only.
double poch_dk_printed(const PochSpec& spec);

enum class RescaleMode {
  StepChange,       // P_p(x)_{n,s} = P_p(kx/s)_{n,k}
  StepAndScale,     // P_p(x)_{n,s} = (p/s)^n P_s(kx/s)_{n,k}
  ScaleChange,      // P_p(x)_{n,k} = (p/s)^n P_s(x)_{n,k}
};

struct IdentitySides {
  double lhs = 0.0;
  double rhs = 0.0;
};

/// Evaluates both sides of a rescaling relation; `s_new` is the auxiliary
/// positive scale s.
IdentitySides poch_rescale(const PochSpec& spec, double s_new, RescaleMode mode);

}  // namespace pkgamma

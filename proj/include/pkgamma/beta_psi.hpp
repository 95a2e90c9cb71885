#pragma once

#include "pkgamma/core.hpp"
#include "pkgamma/quadrature.hpp"

namespace pkgamma {

struct BetaArgs {
  double x = 1.0;
  double y = 1.0;
  PkParams params{1.0, 1.0};

  void validate() const;
};

/// (1/k) B(x/k, y/k) from log-gamma values. Does not depend on p.
EvalReal beta_closed(const BetaArgs& args);

/// Gamma-ratio definition G(x) G(y) / G(x + y) with the p-k Gamma; p cancels.
EvalReal beta_gamma_ratio(const BetaArgs& args);

enum class BetaForm {
  Unit,       // (1/k) int_0^1 t^(x/k-1) (1-t)^(y/k-1) dt
  Symmetric,  // (1/k) int_0^1 (t^(x/k-1) + t^(y/k-1)) / (1+t)^((x+y)/k) dt
  Semiaxis,   // int_0^inf t^(x-1) (1+t^k)^(-(x+y)/k) dt
};

EvalReal beta_integral(const BetaArgs& args, BetaForm form, const QuadratureSpec& quad = {});

struct PsiEval {
  double value = 0.0;
  double abs_err = 0.0;
};

/// d/dx ln G(x) = ln(p)/k + psi(x/k)/k. Throws PoleError.
PsiEval psi(const PkParams& params, double x);

/// The printed normalization ln(p)/k + psi(x/k), kept for the audit.
double psi_printed(const PkParams& params, double x);

enum class PsiSeries {
  Harmonic,  // ln p/k - gamma/k - 1/x + (x/k) sum_{n>=1} 1/(n (x + n k))
  Shifted,   // ln p/k - gamma/k + ((x-k)/k) sum_{n>=0} 1/((n+1)(x + n k))
};

/// Truncated series with an Euler-Maclaurin tail correction. x > 0, terms >= 10.
PsiEval psi_series(const PkParams& params, double x, PsiSeries form, long terms, bool printed = false);

/// ln G(1) + int_1^x psi(t) dt.
EvalReal ln_gamma_via_psi(const PkParams& params, double x, const QuadratureSpec& quad = {});

/// zeta_k(x, r) = sum_{n>=0} (x + n k)^(-r): partial sum of `terms` terms
/// plus Euler-Maclaurin tail; abs_err bounds the omitted remainder.
EvalReal k_zeta(double x, int r, double k, long terms = 32);

/// d^r/dx^r ln G(x) = (-1)^r (r-1)! zeta_k(x, r), r >= 2, x > 0.
PsiEval polygamma(const PkParams& params, double x, int r);

/// Printed variant carrying an extra factor k.
double polygamma_printed(const PkParams& params, double x, int r);

}  // namespace pkgamma

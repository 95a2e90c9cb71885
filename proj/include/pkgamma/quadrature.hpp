#pragma once

#include <functional>

#include "pkgamma/core.hpp"

namespace pkgamma {

struct QuadratureSpec {
  double abs_tol = 1e-12;
  double rel_tol = 1e-11;
  int max_refinements = 12;

  void validate() const;
};

/// Integrand on (0,1) that also receives 1 - t, computed without
/// cancellation, so factors like (1 - t)^(b-1) stay accurate at the right end.
using SplitIntegrand = std::function<double(double t, double one_minus_t)>;
using Integrand = std::function<double(double t)>;

// Double-exponential (tanh-sinh) rule on (0,1). Algebraic endpoint
// singularities t^(a-1), (1-t)^(b-1) with a, b > 0 are handled.
// Throws PartialResultError(NoConvergence) when the tolerance is not met.
EvalReal integrate_unit(const Integrand& f, const QuadratureSpec& spec = {});
EvalReal integrate_unit_split(const SplitIntegrand& f, const QuadratureSpec& spec = {});

// Double-exponential (exp-sinh) rule on (0,inf).
EvalReal integrate_semiaxis(const Integrand& f, const QuadratureSpec& spec = {});

}  // namespace pkgamma

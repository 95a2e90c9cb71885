#pragma once

#include <span>
#include <vector>

#include "pkgamma/core.hpp"
#include "pkgamma/quadrature.hpp"

namespace pkgamma {

struct UpperParam {
  double a;
  double p;
  double k;
};

struct LowerParam {
  double b;
  double t;
  double s;
};

/// Upper triples (a, p, k) and lower triples (b, t, s) of the p-k
/// hypergeometric series. Construction rejects lower parameters with b/s a
/// non-positive integer (LowerPole) and non-positive scales.
class HyperParams {
 public:
  HyperParams(std::vector<UpperParam> upper, std::vector<LowerParam> lower);

  const std::vector<UpperParam>& upper() const noexcept { return upper_; }
  const std::vector<LowerParam>& lower() const noexcept { return lower_; }
  std::size_t r() const noexcept { return upper_.size(); }
  std::size_t q() const noexcept { return lower_.size(); }

  /// prod p_i / prod t_j
  double scale() const;

  /// Number of terms when some a_i/k_i is a non-positive integer, else -1.
  long terminating_degree() const;

 private:
  std::vector<UpperParam> upper_;
  std::vector<LowerParam> lower_;
};

enum class ConvergenceKind { AllFinite, FiniteRadius, DivergentFormal };

struct ConvergenceClass {
  ConvergenceKind kind = ConvergenceKind::AllFinite;
  double radius = 0.0;  // only for FiniteRadius: prod t / prod p
};

ConvergenceClass classify(const HyperParams& hp);

struct HyperReduction {
  std::vector<double> classical_upper;  // a_i / k_i
  std::vector<double> classical_lower;  // b_j / s_j
  double scale = 1.0;                   // prod p_i / prod t_j
};

HyperReduction reduce_classical(const HyperParams& hp);

struct SeriesOptions {
  double tol = 1e-14;
  long max_terms = 100000;
};

/// Term-recurrence evaluation. Stops after three consecutive terms below
/// tol * |sum|. Throws Divergent (r > q+1, or |x| >= radius), LowerPole,
/// or PartialResultError(MaxTermsExceeded).
EvalReal hyper_series(const HyperParams& hp, double x, const SeriesOptions& opts = {});

/// Classical pFq(upper; lower; z) by its own term recurrence.
EvalReal classical_hyper_series(std::span<const double> upper, std::span<const double> lower, double z,
                                const SeriesOptions& opts = {});

/// |term_{n+1} / term_n| of the p-k series at x.
double term_ratio(const HyperParams& hp, double x, double n);

/// Series coefficient c_n = prod P_{p_i}(a_i)_{n,k_i} / (prod P_{t_j}(b_j)_{n,s_j} n!),
/// built from independent Pochhammer products.
double series_coefficient(const HyperParams& hp, int n);

/// Relative residual of the coefficient recurrence implied by the
/// differential equation, for n = 0 .. n_max - 1:
/// |c_{n+1}(n+1) prod(n + b_j/s_j) - A c_n prod(n + a_i/k_i)| / scale.
std::vector<double> ode_coefficient_residuals(const HyperParams& hp, int n_max);

/// Applies [theta prod(theta + b/s - 1) - A x prod(theta + a/k)] to the
/// series at x with central differences of step h in ln|x|; returns |L W|.
double ode_residual(const HyperParams& hp, double x, double h);

/// sum_n P_p(a)_{n,k} x^n / n!, |x| < 1/p, accumulated in extended precision.
EvalReal pk_binomial(double a, const PkParams& params, double x);

/// (1 - x p)^(-a/k).
double pk_binomial_closed(double a, const PkParams& params, double x);

/// Beta-weighted integral for one upper and one lower parameter:
/// G(b/s) / (G(a/k) G(b/s - a/k)) int_0^1 t^(a/k-1) (1-t)^(b/s-a/k-1) e^(A x t) dt.
/// Requires 0 < a/k < b/s.
EvalReal confluent_integral(const HyperParams& hp, double x, const QuadratureSpec& quad = {});

}  // namespace pkgamma

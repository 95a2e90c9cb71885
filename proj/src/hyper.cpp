#include "pkgamma/hyper.hpp"

#include <cfloat>
#include <cmath>
#include <string>

#include "pkgamma/pochhammer.hpp"

namespace pkgamma {

namespace {

bool is_nonpositive_integer(double v, double tol) {
  if (v > tol) return false;
  return std::fabs(v - std::nearbyint(v)) <= tol;
}

void require_positive(double v, const char* what) {
  if (!(std::isfinite(v) && v > 0.0)) throw_invalid(std::string("hypergeometric scale ") + what + " must be positive");
}

struct SumResult {
  double value;
  double abs_err;
};

// Shared driver: `ratio(n)` returns term_{n+1}/term_n.
template <class Ratio>
SumResult sum_series(const Ratio& ratio, long terminating, const SeriesOptions& opts, const char* name) {
  CompensatedSum sum;
  double term = 1.0;
  sum.add(term);
  int small = 0;
  double last_ratio = 0.0;
  for (long n = 0; n < opts.max_terms; ++n) {
    if (terminating >= 0 && n >= terminating) return {sum.value(), 4.0 * DBL_EPSILON * std::fabs(sum.value())};
    last_ratio = ratio(n);
    term *= last_ratio;
    sum.add(term);
    if (term == 0.0) return {sum.value(), 4.0 * DBL_EPSILON * std::fabs(sum.value())};
    small = std::fabs(term) < opts.tol * std::fabs(sum.value()) ? small + 1 : 0;
    if (small >= 3) {
      const double rho = std::fabs(ratio(n + 1));
      const double tail = rho < 1.0 ? std::fabs(term) * rho / (1.0 - rho) : std::fabs(term);
      return {sum.value(), tail + 4.0 * DBL_EPSILON * std::fabs(sum.value())};
    }
  }
  throw PartialResultError(ErrorCode::MaxTermsExceeded, std::string(name) + ": max_terms reached", sum.value(),
                           std::fabs(term));
}

// Coefficients of prod_i (theta + roots_i) as a polynomial in theta.
std::vector<double> poly_from_roots(std::span<const double> shifts) {
  std::vector<double> c{1.0};
  for (double s : shifts) {
    std::vector<double> next(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i] += s * c[i];
      next[i + 1] += c[i];
    }
    c.swap(next);
  }
  return c;
}

// Finite-difference weights for derivatives 0..max_order at 0 on `nodes`.
std::vector<std::vector<double>> fd_weights(std::span<const double> nodes, int max_order) {
  const std::size_t n = nodes.size();
  std::vector<std::vector<double>> c(n, std::vector<double>(static_cast<std::size_t>(max_order) + 1, 0.0));
  double c1 = 1.0;
  double c4 = nodes[0];
  c[0][0] = 1.0;
  for (std::size_t i = 1; i < n; ++i) {
    const int mn = std::min<int>(static_cast<int>(i), max_order);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = nodes[i];
    for (std::size_t j = 0; j < i; ++j) {
      const double c3 = nodes[i] - nodes[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k)
          c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  return c;
}

}  // namespace

HyperParams::HyperParams(std::vector<UpperParam> upper, std::vector<LowerParam> lower)
    : upper_(std::move(upper)), lower_(std::move(lower)) {
  for (const auto& u : upper_) {
    if (!std::isfinite(u.a)) throw_invalid("upper parameter a must be finite");
    require_positive(u.p, "p");
    require_positive(u.k, "k");
  }
  for (const auto& l : lower_) {
    if (!std::isfinite(l.b)) throw_invalid("lower parameter b must be finite");
    require_positive(l.t, "t");
    require_positive(l.s, "s");
    if (is_nonpositive_integer(l.b / l.s, kPoleTolerance))
      throw Error(ErrorCode::LowerPole, "lower parameter b/s is a non-positive integer");
  }
}

double HyperParams::scale() const {
  double a = 1.0;
  for (const auto& u : upper_) a *= u.p;
  for (const auto& l : lower_) a /= l.t;
  return a;
}

long HyperParams::terminating_degree() const {
  long best = -1;
  for (const auto& u : upper_) {
    const double z = u.a / u.k;
    if (is_nonpositive_integer(z, 1e-12)) {
      const long deg = static_cast<long>(-std::nearbyint(z)) + 1;
      if (best < 0 || deg < best) best = deg;
    }
  }
  return best;
}

ConvergenceClass classify(const HyperParams& hp) {
  ConvergenceClass out;
  if (hp.r() <= hp.q()) {
    out.kind = ConvergenceKind::AllFinite;
  } else if (hp.r() == hp.q() + 1) {
    out.kind = ConvergenceKind::FiniteRadius;
    out.radius = 1.0 / hp.scale();
  } else {
    out.kind = ConvergenceKind::DivergentFormal;
  }
  return out;
}

HyperReduction reduce_classical(const HyperParams& hp) {
  HyperReduction out;
  for (const auto& u : hp.upper()) out.classical_upper.push_back(u.a / u.k);
  for (const auto& l : hp.lower()) out.classical_lower.push_back(l.b / l.s);
  out.scale = hp.scale();
  return out;
}

double term_ratio(const HyperParams& hp, double x, double n) {
  double num = x;
  for (const auto& u : hp.upper()) num *= u.p * (u.a / u.k + n);
  double den = n + 1.0;
  for (const auto& l : hp.lower()) den *= l.t * (l.b / l.s + n);
  return std::fabs(num / den);
}

EvalReal hyper_series(const HyperParams& hp, double x, const SeriesOptions& opts) {
  if (!std::isfinite(x)) throw_domain("hyper_series: x must be finite");
  const long degree = hp.terminating_degree();
  const ConvergenceClass cls = classify(hp);
  if (degree < 0) {
    if (cls.kind == ConvergenceKind::DivergentFormal && x != 0.0)
      throw Error(ErrorCode::Divergent, "hyper_series: r > q + 1, the series diverges for x != 0");
    if (cls.kind == ConvergenceKind::FiniteRadius && std::fabs(x) >= cls.radius)
      throw Error(ErrorCode::Divergent, "hyper_series: |x| lies outside the radius of convergence");
  }
  EvalReal out;
  out.method = Method::Series;
  if (x == 0.0) {
    out.value = 1.0;
    return out;
  }
  const auto ratio = [&](long n) {
    const double dn = static_cast<double>(n);
    double num = x;
    for (const auto& u : hp.upper()) num *= u.p * (u.a / u.k + dn);
    double den = dn + 1.0;
    for (const auto& l : hp.lower()) den *= l.t * (l.b / l.s + dn);
    return num / den;
  };
  const SumResult s = sum_series(ratio, degree, opts, "hyper_series");
  out.value = s.value;
  out.abs_err = s.abs_err;
  return out;
}

EvalReal classical_hyper_series(std::span<const double> upper, std::span<const double> lower, double z,
                                const SeriesOptions& opts) {
  long degree = -1;
  for (double a : upper)
    if (is_nonpositive_integer(a, 1e-12)) {
      const long d = static_cast<long>(-std::nearbyint(a)) + 1;
      if (degree < 0 || d < degree) degree = d;
    }
  for (double b : lower)
    if (is_nonpositive_integer(b, kPoleTolerance))
      throw Error(ErrorCode::LowerPole, "classical lower parameter is a non-positive integer");
  if (degree < 0) {
    if (upper.size() > lower.size() + 1 && z != 0.0)
      throw Error(ErrorCode::Divergent, "classical series diverges for p > q + 1");
    if (upper.size() == lower.size() + 1 && std::fabs(z) >= 1.0)
      throw Error(ErrorCode::Divergent, "classical series: |z| >= 1");
  }
  EvalReal out;
  out.method = Method::Series;
  if (z == 0.0) {
    out.value = 1.0;
    return out;
  }
  const auto ratio = [&](long n) {
    const double dn = static_cast<double>(n);
    double num = z;
    for (double a : upper) num *= a + dn;
    double den = dn + 1.0;
    for (double b : lower) den *= b + dn;
    return num / den;
  };
  const SumResult s = sum_series(ratio, degree, opts, "classical_hyper_series");
  out.value = s.value;
  out.abs_err = s.abs_err;
  return out;
}

double series_coefficient(const HyperParams& hp, int n) {
  double num = 1.0;
  for (const auto& u : hp.upper()) num *= poch_direct(PochSpec{u.a, n, PkParams(u.p, u.k)});
  double den = 1.0;
  for (const auto& l : hp.lower()) den *= poch_direct(PochSpec{l.b, n, PkParams(l.t, l.s)});
  for (int i = 2; i <= n; ++i) den *= i;
  return num / den;
}

std::vector<double> ode_coefficient_residuals(const HyperParams& hp, int n_max) {
  const HyperReduction red = reduce_classical(hp);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(std::max(n_max, 0)));
  double c_n = series_coefficient(hp, 0);
  for (int n = 0; n < n_max; ++n) {
    const double c_next = series_coefficient(hp, n + 1);
    double left = c_next * (n + 1.0);
    for (double beta : red.classical_lower) left *= n + beta;
    double right = red.scale * c_n;
    for (double alpha : red.classical_upper) right *= n + alpha;
    const double scale = std::fmax(std::fabs(left), std::fabs(right));
    out.push_back(scale == 0.0 ? 0.0 : std::fabs(left - right) / scale);
    c_n = c_next;
  }
  return out;
}

double ode_residual(const HyperParams& hp, double x, double h) {
  if (x == 0.0 || !std::isfinite(x)) throw_domain("ode_residual: x must be finite and non-zero");
  if (!(h > 0.0 && h < 0.5)) throw_invalid("ode_residual: step h must lie in (0, 0.5)");
  const ConvergenceClass cls = classify(hp);
  if (cls.kind == ConvergenceKind::DivergentFormal && hp.terminating_degree() < 0)
    throw Error(ErrorCode::Divergent, "ode_residual: r > q + 1");
  const HyperReduction red = reduce_classical(hp);

  // theta prod_j (theta + beta_j - 1)
  std::vector<double> lower_shifts{0.0};
  for (double beta : red.classical_lower) lower_shifts.push_back(beta - 1.0);
  const std::vector<double> left = poly_from_roots(lower_shifts);
  const std::vector<double> right = poly_from_roots(red.classical_upper);
  const int order = static_cast<int>(std::max(left.size(), right.size())) - 1;

  // x = sign * exp(u): theta = d/du. Central stencil, second order accurate.
  const int half = (order + 1) / 2;
  std::vector<double> nodes;
  for (int j = -half; j <= half; ++j) nodes.push_back(j * h);
  const auto weights = fd_weights(nodes, order);
  const double sign = x < 0.0 ? -1.0 : 1.0;
  const double u0 = std::log(std::fabs(x));
  std::vector<double> values;
  for (double node : nodes) values.push_back(hyper_series(hp, sign * std::exp(u0 + node)).value);

  auto theta_pow = [&](int m) {
    double acc = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i][static_cast<std::size_t>(m)] * values[i];
    return acc;
  };
  double lw = 0.0;
  for (std::size_t m = 0; m < left.size(); ++m) lw += left[m] * theta_pow(static_cast<int>(m));
  for (std::size_t m = 0; m < right.size(); ++m) lw -= red.scale * x * right[m] * theta_pow(static_cast<int>(m));
  return std::fabs(lw);
}

EvalReal pk_binomial(double a, const PkParams& params, double x) {
  if (!std::isfinite(a) || !std::isfinite(x)) throw_domain("pk_binomial: arguments must be finite");
  const double p = params.p();
  if (std::fabs(x) * p >= 1.0) throw Error(ErrorCode::Divergent, "pk_binomial: requires |x| < 1/p");
  const long double first = static_cast<long double>(a) * p / params.k();
  long double term = 1.0L;
  long double sum = 1.0L;
  int small = 0;
  EvalReal out;
  out.method = Method::Series;
  for (long n = 0; n < 2000000; ++n) {
    // n-th factor of the Pochhammer product, times x / (n + 1)
    term *= (first + static_cast<long double>(n) * p) * x / static_cast<long double>(n + 1);
    sum += term;
    if (term == 0.0L) break;
    small = std::fabs(term) < 1e-21L * std::fabs(sum) ? small + 1 : 0;
    if (small >= 3) {
      const double rho = std::fabs(x) * p;
      out.abs_err = static_cast<double>(std::fabs(term)) * rho / (1.0 - rho);
      break;
    }
  }
  out.value = static_cast<double>(sum);
  out.abs_err += 2.0 * DBL_EPSILON * std::fabs(out.value);
  return out;
}

double pk_binomial_closed(double a, const PkParams& params, double x) {
  const double xp = x * params.p();
  if (std::fabs(xp) >= 1.0) throw Error(ErrorCode::Divergent, "pk_binomial: requires |x| < 1/p");
  return std::exp(-(a / params.k()) * std::log1p(-xp));
}

EvalReal confluent_integral(const HyperParams& hp, double x, const QuadratureSpec& quad) {
  if (hp.r() != 1 || hp.q() != 1)
    throw Error(ErrorCode::UnsupportedShape, "confluent_integral: only one upper and one lower parameter");
  if (!std::isfinite(x)) throw_domain("confluent_integral: x must be finite");
  const UpperParam& up = hp.upper().front();
  const LowerParam& lo = hp.lower().front();
  const double alpha = up.a / up.k;
  const double beta = lo.b / lo.s;
  if (!(alpha > 0.0 && beta > alpha)) throw_domain("confluent_integral: requires 0 < a/k < b/s");
  const double z = up.p / lo.t * x;
  const EvalReal integral = integrate_unit_split(
      [&](double t, double tc) {
        return std::exp((alpha - 1.0) * std::log(t) + (beta - alpha - 1.0) * std::log(tc) + z * t);
      },
      quad);
  const double ln_pref = ln_gamma_classical(beta).value - ln_gamma_classical(alpha).value -
                         ln_gamma_classical(beta - alpha).value;
  const double pref = std::exp(ln_pref);
  EvalReal out;
  out.method = Method::Integral;
  out.value = pref * integral.value;
  out.abs_err = pref * integral.abs_err + 8.0 * DBL_EPSILON * std::fabs(out.value);
  return out;
}

}  // namespace pkgamma

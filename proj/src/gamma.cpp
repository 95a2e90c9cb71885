#include "pkgamma/gamma.hpp"

#include <cfloat>
#include <cmath>
#include <limits>

namespace pkgamma {

namespace {

// sum_{n > N} n^(-m) by Euler-Maclaurin, m >= 2.
double zeta_tail(int m, double big_n) {
  const double inv = 1.0 / big_n;
  const double lead = std::pow(inv, m - 1);
  return lead / (m - 1) - 0.5 * lead * inv + m / 12.0 * lead * inv * inv -
         m * (m + 1.0) * (m + 2.0) / 720.0 * lead * std::pow(inv, 4);
}

struct TailSum {
  double value = 0.0;
  double err = 0.0;
};

// sum_{m>=2} coeff(m) * zeta_tail(m, N), truncated once terms are negligible.
template <class Coeff>
TailSum product_tail(double z, double big_n, const Coeff& coeff) {
  TailSum out;
  if (std::fabs(z) >= 0.5 * big_n) {
    out.err = HUGE_VAL;
    return out;
  }
  for (int m = 2; m <= 80; ++m) {
    const double term = coeff(m) * zeta_tail(m, big_n);
    out.value += term;
    out.err = std::fabs(term);
    if (out.err < 1e-20 * std::fmax(1.0, std::fabs(out.value))) break;
  }
  // Euler-Maclaurin remainder of the m = 2 tail.
  out.err += std::fabs(coeff(2)) * 30.0 / 30240.0 * std::pow(big_n, -7);
  return out;
}

void require_terms(long terms) {
  if (terms < 1) throw_invalid("product evaluators need at least one factor");
}

}  // namespace

GammaEval gamma_closed(const PkParams& params, double x) {
  if (!std::isfinite(x)) throw_domain("gamma_closed: argument must be finite");
  if (const auto pole = pole_check(params, x); pole.is_pole) throw PoleError(pole.pole_index);
  const double z = x / params.k();
  const EvalReal lg = ln_gamma_classical(z);
  const double scale = z * std::log(params.p()) - std::log(params.k());
  GammaEval out;
  out.ln_value = scale + lg.value;
  out.sign = lg.sign;
  out.abs_err_ln = lg.abs_err + 2.0 * DBL_EPSILON * (std::fabs(scale) + 1.0);
  out.method = Method::Closed;
  if (std::fabs(out.ln_value) < 600.0 && std::fabs(z) < 150.0) {
    const long double direct = std::pow(static_cast<long double>(params.p()), static_cast<long double>(z)) *
                               std::tgamma(static_cast<long double>(z)) / static_cast<long double>(params.k());
    if (std::isfinite(direct) && direct != 0.0L) out.linear = static_cast<double>(direct);
  }
  return out;
}

GammaEval gamma_limit(const PkParams& params, double x, long n, bool accelerate) {
  if (!(std::isfinite(x) && x > 0.0)) throw_domain("gamma_limit: x must be positive");
  if (n < 8) throw_invalid("gamma_limit: n must be >= 8");
  const double z = x / params.k();
  const double ln_p = std::log(params.p());

  // ln G(m) = -ln k + z ln p + (z-1) ln m + ln m - ln z - sum_{j<m} log1p(z/j)
  auto ln_g = [&](long m, double sum) {
    const double ln_m = std::log(static_cast<double>(m));
    return -std::log(params.k()) + z * ln_p + (z - 1.0) * ln_m + ln_m - std::log(z) - sum;
  };

  const long last = accelerate ? 4 * n : n;
  CompensatedSum acc;
  double at_n = 0.0, at_2n = 0.0, at_4n = 0.0;
  for (long j = 1; j < last; ++j) {
    acc.add(std::log1p(z / static_cast<double>(j)));
    if (j == n - 1) at_n = acc.value();
    if (j == 2 * n - 1) at_2n = acc.value();
  }
  at_4n = acc.value();

  GammaEval out;
  out.method = Method::Limit;
  out.sign = 1;
  const double l1 = ln_g(n, at_n);
  if (!accelerate) {
    out.ln_value = l1;
    out.abs_err_ln = std::fabs(z * (z - 1.0)) / (2.0 * static_cast<double>(n));
    return out;
  }
  const double l2 = ln_g(2 * n, at_2n);
  const double l4 = ln_g(4 * n, at_4n);
  const double r1a = 2.0 * l2 - l1;
  const double r1b = 2.0 * l4 - l2;
  const double r2 = (4.0 * r1b - r1a) / 3.0;
  out.ln_value = r2;
  out.abs_err_ln = std::fabs(r2 - r1b) + 8.0 * DBL_EPSILON * std::fabs(at_4n);
  return out;
}

GammaEval gamma_integral(const PkParams& params, double x, double a_scale, const QuadratureSpec& quad) {
  if (!(std::isfinite(x) && x > 0.0)) throw_domain("gamma_integral: x must be positive");
  if (!(std::isfinite(a_scale) && a_scale > 0.0)) throw_domain("gamma_integral: scale a must be positive");
  const double k = params.k();
  const double rate = a_scale / params.p();
  auto integrand = [&](double t) {
    const double ln_t = std::log(t);
    return std::exp((x - 1.0) * ln_t - rate * std::exp(k * ln_t));
  };
  const EvalReal integral = integrate_semiaxis(integrand, quad);
  if (!(integral.value > 0.0)) throw_domain("gamma_integral: quadrature produced a non-positive value");
  GammaEval out;
  out.method = Method::Integral;
  out.ln_value = x / k * std::log(a_scale) + std::log(integral.value);
  out.abs_err_ln = integral.abs_err / integral.value;
  return out;
}

GammaEval gamma_euler_product(const PkParams& params, double x, long terms, ProductForm form) {
  if (!(std::isfinite(x) && x > 0.0)) throw_domain("gamma_euler_product: x must be positive");
  require_terms(terms);
  const double z = x / params.k();
  CompensatedSum acc;
  double mag = 0.0;
  for (long n = 1; n <= terms; ++n) {
    const double dn = static_cast<double>(n);
    const double term = z * std::log1p(1.0 / dn) - std::log1p(z / dn);
    acc.add(term);
    mag += std::fabs(z / dn);
  }
  // log factor = sum_{m>=2} (-1)^(m+1) (z - z^m) / (m n^m)
  const TailSum tail = product_tail(z, static_cast<double>(terms), [&](int m) {
    const double sgn = (m % 2 == 0) ? -1.0 : 1.0;
    return sgn * (z - std::pow(z, m)) / m;
  });
  const double prefactor = form == ProductForm::Corrected ? std::log(x) : std::log(params.k());
  GammaEval out;
  out.method = Method::EulerProduct;
  out.ln_value = z * std::log(params.p()) - prefactor + acc.value() + tail.value;
  out.abs_err_ln = tail.err + 4.0 * DBL_EPSILON * mag;
  return out;
}

namespace {

struct SignedSum {
  double value = 0.0;
  int sign = 1;
  double mag = 0.0;
};

// sum_{n=1}^{N} (ln|1 + z/n| - drift * z/n) with the sign of the product.
SignedSum log_factor_sum(double z, long terms, double drift) {
  CompensatedSum acc;
  SignedSum out;
  for (long n = 1; n <= terms; ++n) {
    const double y = z / static_cast<double>(n);
    const double f = 1.0 + y;
    if (f < 0.0) out.sign = -out.sign;
    const double ln_f = std::fabs(y) < 0.5 ? std::log1p(y) : std::log(std::fabs(f));
    acc.add(ln_f - drift * y);
    out.mag += std::fabs(y);
  }
  out.value = acc.value();
  return out;
}

GammaEval pole_reciprocal(Method method) {
  GammaEval out;
  out.method = method;
  out.at_pole = true;
  out.ln_value = -std::numeric_limits<double>::infinity();
  return out;
}

}  // namespace

GammaEval gamma_gauss_recip(const PkParams& params, double x, long terms, ProductForm form) {
  if (!std::isfinite(x)) throw_domain("gamma_gauss_recip: argument must be finite");
  require_terms(terms);
  if (pole_check(params, x).is_pole) return pole_reciprocal(Method::EulerProduct);
  const double z = x / params.k();
  const double big_n = static_cast<double>(terms);
  const SignedSum sum = log_factor_sum(z, terms, 0.0);
  const TailSum tail = product_tail(z, big_n, [&](int m) {
    const double sgn = (m % 2 == 0) ? -1.0 : 1.0;
    return sgn * std::pow(z, m) / m;
  });
  // H_N - ln N - gamma by Euler-Maclaurin.
  const double harmonic_gap = 0.5 / big_n - 1.0 / (12.0 * big_n * big_n) + 1.0 / (120.0 * std::pow(big_n, 4));
  double ln_pref = std::log(std::fabs(x)) - z * std::log(params.p());
  if (form == ProductForm::Printed) ln_pref -= std::log(params.k());
  GammaEval out;
  out.method = Method::EulerProduct;
  out.sign = (x < 0.0 ? -1 : 1) * sum.sign;
  out.ln_value = ln_pref + sum.value - z * std::log(big_n) + tail.value - z * harmonic_gap;
  out.abs_err_ln = tail.err + std::fabs(z) / (252.0 * std::pow(big_n, 6)) + 4.0 * DBL_EPSILON * sum.mag;
  return out;
}

GammaEval gamma_weierstrass_recip(const PkParams& params, double x, long terms, ProductForm form) {
  if (!std::isfinite(x)) throw_domain("gamma_weierstrass_recip: argument must be finite");
  require_terms(terms);
  if (pole_check(params, x).is_pole) return pole_reciprocal(Method::Weierstrass);
  const double z = x / params.k();
  const SignedSum sum = log_factor_sum(z, terms, 1.0);
  const TailSum tail = product_tail(z, static_cast<double>(terms), [&](int m) {
    const double sgn = (m % 2 == 0) ? -1.0 : 1.0;
    return sgn * std::pow(z, m) / m;
  });
  double ln_pref = std::log(std::fabs(x)) - z * std::log(params.p()) + kEulerGamma * z;
  if (form == ProductForm::Printed) ln_pref -= std::log(params.k());
  GammaEval out;
  out.method = Method::Weierstrass;
  out.sign = (x < 0.0 ? -1 : 1) * sum.sign;
  out.ln_value = ln_pref + sum.value + tail.value;
  out.abs_err_ln = tail.err + 4.0 * DBL_EPSILON * sum.mag;
  return out;
}

GammaRescaleSides gamma_rescale(const PkParams& from, const PkParams& to, double x, GammaRescale mode) {
  const double r = from.p();
  const double s = from.k();
  const double p = to.p();
  const double k = to.k();
  GammaRescaleSides out;
  switch (mode) {
    case GammaRescale::StepChange:
      out.lhs = gamma_closed(PkParams(p, s), x);
      out.rhs = gamma_closed(to, k * x / s);
      out.rhs.ln_value += std::log(k / s);
      break;
    case GammaRescale::FullChange:
      out.lhs = gamma_closed(from, x);
      out.rhs = gamma_closed(to, k * x / s);
      out.rhs.ln_value += std::log(k / s) + x / s * std::log(r / p);
      break;
    case GammaRescale::ScaleChange:
      out.lhs = gamma_closed(PkParams(r, k), x);
      out.rhs = gamma_closed(to, x);
      out.rhs.ln_value += x / k * std::log(r / p);
      break;
  }
  out.rhs.linear = NAN;  // the shift above applies to the log only
  return out;
}

}  // namespace pkgamma

#include "pkgamma/beta_psi.hpp"

#include <cfloat>
#include <cmath>

#include "pkgamma/gamma.hpp"

namespace pkgamma {

void BetaArgs::validate() const {
  if (!(std::isfinite(x) && x > 0.0)) throw_domain("beta: x must be positive");
  if (!(std::isfinite(y) && y > 0.0)) throw_domain("beta: y must be positive");
}

EvalReal beta_closed(const BetaArgs& args) {
  args.validate();
  const double k = args.params.k();
  const EvalReal a = ln_gamma_classical(args.x / k);
  const EvalReal b = ln_gamma_classical(args.y / k);
  const EvalReal c = ln_gamma_classical((args.x + args.y) / k);
  const double ln_b = a.value + b.value - c.value - std::log(k);
  EvalReal out;
  out.value = std::exp(ln_b);
  out.abs_err = out.value * (a.abs_err + b.abs_err + c.abs_err);
  out.method = Method::Closed;
  return out;
}

EvalReal beta_gamma_ratio(const BetaArgs& args) {
  args.validate();
  const GammaEval gx = gamma_closed(args.params, args.x);
  const GammaEval gy = gamma_closed(args.params, args.y);
  const GammaEval gxy = gamma_closed(args.params, args.x + args.y);
  EvalReal out;
  out.value = std::exp(gx.ln_value + gy.ln_value - gxy.ln_value);
  out.abs_err = out.value * (gx.abs_err_ln + gy.abs_err_ln + gxy.abs_err_ln);
  out.method = Method::Closed;
  return out;
}

EvalReal beta_integral(const BetaArgs& args, BetaForm form, const QuadratureSpec& quad) {
  args.validate();
  const double k = args.params.k();
  const double a = args.x / k;
  const double b = args.y / k;
  EvalReal out;
  switch (form) {
    case BetaForm::Unit: {
      out = integrate_unit_split(
          [&](double t, double tc) { return std::exp((a - 1.0) * std::log(t) + (b - 1.0) * std::log(tc)); },
          quad);
      out.value /= k;
      out.abs_err /= k;
      break;
    }
    case BetaForm::Symmetric: {
      out = integrate_unit(
          [&](double t) {
            const double ln_t = std::log(t);
            const double ln_den = (a + b) * std::log1p(t);
            return std::exp((a - 1.0) * ln_t - ln_den) + std::exp((b - 1.0) * ln_t - ln_den);
          },
          quad);
      out.value /= k;
      out.abs_err /= k;
      break;
    }
    case BetaForm::Semiaxis: {
      const double x = args.x;
      const double expo = (args.x + args.y) / k;
      out = integrate_semiaxis(
          [&](double t) {
            const double ln_t = std::log(t);
            // ln(1 + t^k) without overflow for large t
            const double kl = k * ln_t;
            const double ln_1p = kl > 0.0 ? kl + std::log1p(std::exp(-kl)) : std::log1p(std::exp(kl));
            return std::exp((x - 1.0) * ln_t - expo * ln_1p);
          },
          quad);
      break;
    }
  }
  out.method = Method::Integral;
  return out;
}

PsiEval psi(const PkParams& params, double x) {
  if (!std::isfinite(x)) throw_domain("psi: argument must be finite");
  if (const auto pole = pole_check(params, x); pole.is_pole) throw PoleError(pole.pole_index);
  const double k = params.k();
  const double classical = digamma_classical(x / k);
  PsiEval out;
  out.value = std::log(params.p()) / k + classical / k;
  out.abs_err = 4.0 * DBL_EPSILON * (std::fabs(classical) + std::fabs(std::log(params.p()))) / k;
  return out;
}

double psi_printed(const PkParams& params, double x) {
  if (const auto pole = pole_check(params, x); pole.is_pole) throw PoleError(pole.pole_index);
  return std::log(params.p()) / params.k() + digamma_classical(x / params.k());
}

namespace {

// Euler-Maclaurin tail sum_{n >= m0} f(n) for f(n) = 1/((n + c1)(n + c2)),
// using int_{m0}^inf f = ln((m0 + c2)/(m0 + c1)) / (c2 - c1).
double rational_tail(double m0, double c1, double c2, double& err) {
  const double d = c2 - c1;
  const double u = m0 + c1;
  const double v = m0 + c2;
  const double integral = std::fabs(d) < 1e-12 * u ? 1.0 / u : std::log1p(d / u) / d;
  const double f = 1.0 / (u * v);
  const double fp = -(u + v) / (u * u * v * v);  // f'(m0)
  // f''' ~ -24/m^5 scale
  err = 24.0 / (720.0 * std::pow(u, 5));
  return integral + 0.5 * f - fp / 12.0;
}

}  // namespace

PsiEval psi_series(const PkParams& params, double x, PsiSeries form, long terms, bool printed) {
  if (!(std::isfinite(x) && x > 0.0)) throw_domain("psi_series: x must be positive");
  if (terms < 10) throw_invalid("psi_series: at least 10 terms required");
  const double k = params.k();
  const double z = x / k;
  const double norm = printed ? 1.0 : 1.0 / k;  // printed forms lack the 1/k
  const double base = std::log(params.p()) / k - kEulerGamma * norm;
  const double big_n = static_cast<double>(terms);
  CompensatedSum acc;
  double tail_err = 0.0;
  PsiEval out;
  if (form == PsiSeries::Harmonic) {
    // (1/k) * [ -1/z + z sum_{n>=1} 1/(n (n + z)) ], printed: without 1/k
    for (long n = 1; n <= terms; ++n) {
      const double dn = static_cast<double>(n);
      acc.add(1.0 / (dn * (dn + z)));
    }
    const double tail = rational_tail(big_n + 1.0, 0.0, z, tail_err);
    out.value = base + norm * (-1.0 / z + z * (acc.value() + tail));
    out.abs_err = norm * z * tail_err + 8.0 * DBL_EPSILON * std::fabs(out.value);
  } else {
    // (1/k) * (z - 1) sum_{n>=0} 1/((n+1)(n + z))
    for (long n = 0; n < terms; ++n) {
      const double dn = static_cast<double>(n);
      acc.add(1.0 / ((dn + 1.0) * (dn + z)));
    }
    const double tail = rational_tail(big_n, 1.0, z, tail_err);
    out.value = base + norm * (z - 1.0) * (acc.value() + tail);
    out.abs_err = norm * std::fabs(z - 1.0) * tail_err + 8.0 * DBL_EPSILON * std::fabs(out.value);
  }
  return out;
}

EvalReal ln_gamma_via_psi(const PkParams& params, double x, const QuadratureSpec& quad) {
  if (!(std::isfinite(x) && x > 0.0)) throw_domain("ln_gamma_via_psi: x must be positive");
  const GammaEval at_one = gamma_closed(params, 1.0);
  EvalReal out;
  out.method = Method::Integral;
  out.value = at_one.ln_value;
  out.abs_err = at_one.abs_err_ln;
  if (x == 1.0) return out;
  const double span = x - 1.0;
  const EvalReal integral = integrate_unit([&](double u) { return psi(params, 1.0 + span * u).value; }, quad);
  out.value += span * integral.value;
  out.abs_err += std::fabs(span) * integral.abs_err;
  return out;
}

EvalReal k_zeta(double x, int r, double k, long terms) {
  if (r < 2) throw_domain("k_zeta: order r must be >= 2");
  if (!(std::isfinite(x) && x > 0.0)) throw_domain("k_zeta: x must be positive");
  if (!(std::isfinite(k) && k > 0.0)) throw_domain("k_zeta: k must be positive");
  if (terms < 1) throw_invalid("k_zeta: at least one term required");
  CompensatedSum acc;
  for (long n = 0; n < terms; ++n) acc.add(std::pow(x + static_cast<double>(n) * k, -r));

  // sum_{n>=N} f(n) = int_N^inf f + f(N)/2 - sum_j B_2j/(2j)! f^(2j-1)(N),
  // f(t) = (x + t k)^(-r), f^(m)(t) = (-1)^m r(r+1)..(r+m-1) k^m (x+tk)^(-r-m)
  const double u = x + static_cast<double>(terms) * k;
  const double f = std::pow(u, -r);
  double tail = f * u / ((r - 1.0) * k) + 0.5 * f;
  constexpr double kB[] = {1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0};
  double rising = r;        // r (r+1) ... (r + m - 1), m = 2j - 1
  double deriv_scale = k / u;
  double fact = 2.0;        // (2j)!
  double last = 0.0;
  for (int j = 1; j <= 5; ++j) {
    const int m = 2 * j - 1;
    if (j > 1) {
      rising *= (r + m - 2.0) * (r + m - 1.0);
      deriv_scale *= (k / u) * (k / u);
      fact *= (2.0 * j - 1.0) * (2.0 * j);
    }
    const double deriv = -rising * deriv_scale * f;  // odd derivative, sign (-1)^m = -1
    last = kB[j - 1] / fact * deriv;
    tail -= last;
  }
  EvalReal out;
  out.method = Method::Series;
  out.value = acc.value() + tail;
  out.abs_err = std::fabs(last) + 4.0 * DBL_EPSILON * std::fabs(out.value);
  return out;
}

PsiEval polygamma(const PkParams& params, double x, int r) {
  if (r < 2) throw_domain("polygamma: order r must be >= 2");
  if (!(std::isfinite(x) && x > 0.0)) throw_domain("polygamma: x must be positive");
  double fact = 1.0;
  for (int i = 2; i < r; ++i) fact *= i;
  const EvalReal zeta = k_zeta(x, r, params.k());
  const double sign = r % 2 == 0 ? 1.0 : -1.0;
  return {sign * fact * zeta.value, fact * zeta.abs_err};
}

double polygamma_printed(const PkParams& params, double x, int r) {
  return params.k() * polygamma(params, x, r).value;
}

}  // namespace pkgamma

#include "pkgamma/pochhammer.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "pkgamma/gamma.hpp"

namespace pkgamma {

void PochSpec::validate() const {
  if (!std::isfinite(x)) throw_invalid("Pochhammer argument must be finite");
  if (n < 0) throw_invalid("Pochhammer step count must be non-negative");
}

double poch_direct(const PochSpec& spec) {
  spec.validate();
  const double p = spec.params.p();
  const double start = spec.x * p / spec.params.k();
  double prod = 1.0;
  for (int j = 0; j < spec.n; ++j) prod *= start + j * p;
  return prod;
}

SignedLog poch_ln(const PochSpec& spec) {
  spec.validate();
  const double p = spec.params.p();
  const double start = spec.x * p / spec.params.k();
  CompensatedSum acc;
  int sign = 1;
  for (int j = 0; j < spec.n; ++j) {
    const double f = start + j * p;
    if (f == 0.0) return {-std::numeric_limits<double>::infinity(), 1};
    if (f < 0.0) sign = -sign;
    acc.add(std::log(std::fabs(f)));
  }
  return {acc.value(), sign};
}

double elementary_symmetric(std::span<const double> values, int s) {
  if (s < 0 || static_cast<std::size_t>(s) > values.size())
    throw Error(ErrorCode::Index, "elementary_symmetric: degree exceeds variable count");
  // coeff[j] = e_j of the values consumed so far
  std::vector<double> coeff(static_cast<std::size_t>(s) + 1, 0.0);
  coeff[0] = 1.0;
  std::size_t seen = 0;
  for (double v : values) {
    ++seen;
    const std::size_t top = std::min<std::size_t>(seen, static_cast<std::size_t>(s));
    for (std::size_t j = top; j >= 1; --j) coeff[j] += v * coeff[j - 1];
  }
  return coeff[static_cast<std::size_t>(s)];
}

double poch_symmetric(const PochSpec& spec) {
  spec.validate();
  if (spec.n == 0) return 1.0;
  const int n = spec.n;
  std::vector<double> ints(static_cast<std::size_t>(n - 1));
  for (int i = 0; i < n - 1; ++i) ints[static_cast<std::size_t>(i)] = i + 1;

  // Build every e_s(1..n-1) in one pass.
  std::vector<double> e(static_cast<std::size_t>(n), 0.0);
  e[0] = 1.0;
  for (int i = 0; i < n - 1; ++i)
    for (int j = i + 1; j >= 1; --j) e[static_cast<std::size_t>(j)] += ints[static_cast<std::size_t>(i)] * e[static_cast<std::size_t>(j - 1)];

  const double ratio = spec.x / spec.params.k();
  double sum = 0.0;
  double pw = ratio;  // ratio^(n-s), s from n-1 down to 0
  for (int s = n - 1; s >= 0; --s) {
    sum += e[static_cast<std::size_t>(s)] * pw;
    pw *= ratio;
  }
  return std::pow(spec.params.p(), n) * sum;
}

double poch_reduce(const PochSpec& spec) {
  spec.validate();
  const double z = spec.x / spec.params.k();
  double rising = 1.0;
  for (int j = 0; j < spec.n; ++j) rising *= z + j;
  return std::pow(spec.params.p(), spec.n) * rising;
}

double poch_generalized(const PochSpec& spec, int q) {
  spec.validate();
  if (q < 1) throw_invalid("poch_generalized: block count q must be >= 1");
  const double z = spec.x / spec.params.k();
  double prod = 1.0;
  for (int r = 1; r <= q; ++r) {
    const double base = (z + r - 1) / q;
    for (int j = 0; j < spec.n; ++j) prod *= base + j;
  }
  const double total = static_cast<double>(spec.n) * q;
  return std::pow(spec.params.p() * q, total) * prod;
}

double poch_gamma_ratio(const PochSpec& spec) {
  spec.validate();
  const double shifted = spec.x + spec.n * spec.params.k();
  const GammaEval top = gamma_closed(spec.params, shifted);
  const GammaEval bottom = gamma_closed(spec.params, spec.x);
  return top.sign * bottom.sign * std::exp(top.ln_value - bottom.ln_value);
}

double poch_dp(const PochSpec& spec) {
  if (spec.n == 0) return 0.0;
  return spec.n / spec.params.p() * poch_direct(spec);
}

double poch_dk(const PochSpec& spec) {
  spec.validate();
  if (spec.n == 0) return 0.0;
  const double k = spec.params.k();
  double log_deriv = -spec.n / k;
  for (int s = 0; s < spec.n; ++s) {
    const double f = spec.x + s * k;
    if (f == 0.0) throw_domain("poch_dk: factor x + s k vanishes");
    if (s > 0) log_deriv += s / f;
  }
  return poch_direct(spec) * log_deriv;
}

namespace {

double sub_symbol(const PochSpec& spec, double x, int n) {
  return poch_direct(PochSpec{x, n, spec.params});
}

}  // namespace

double poch_dk_product(const PochSpec& spec) {
  spec.validate();
  if (spec.n == 0) return 0.0;
  const double p = spec.params.p();
  const double k = spec.params.k();
  double sum = 0.0;
  for (int s = 1; s <= spec.n - 1; ++s)
    sum += s * sub_symbol(spec, spec.x, s) * sub_symbol(spec, spec.x + (s + 1) * k, spec.n - 1 - s);
  return p / k * sum - spec.n / k * poch_direct(spec);
}

double poch_dk_printed(const PochSpec& spec) {
  spec.validate();
  if (spec.n == 0) return 0.0;
  const double p = spec.params.p();
  const double k = spec.params.k();
  const double full = poch_direct(spec);
  double sum = 0.0;
  for (int s = 1; s <= spec.n - 1; ++s)
    sum += s * full * sub_symbol(spec, spec.x + (s + 1) * k, spec.n - 1 - s);
  return p / k * sum - spec.n / k * full;
}

IdentitySides poch_rescale(const PochSpec& spec, double s_new, RescaleMode mode) {
  spec.validate();
  if (!(std::isfinite(s_new) && s_new > 0.0)) throw_invalid("poch_rescale: scale s must be positive");
  const double p = spec.params.p();
  const double k = spec.params.k();
  const double x = spec.x;
  const int n = spec.n;
  IdentitySides out;
  switch (mode) {
    case RescaleMode::StepChange:
      out.lhs = poch_direct(PochSpec{x, n, PkParams(p, s_new)});
      out.rhs = poch_direct(PochSpec{k * x / s_new, n, PkParams(p, k)});
      break;
    case RescaleMode::StepAndScale:
      out.lhs = poch_direct(PochSpec{x, n, PkParams(p, s_new)});
      out.rhs = std::pow(p / s_new, n) * poch_direct(PochSpec{k * x / s_new, n, PkParams(s_new, k)});
      break;
    case RescaleMode::ScaleChange:
      out.lhs = poch_direct(PochSpec{x, n, PkParams(p, k)});
      out.rhs = std::pow(p / s_new, n) * poch_direct(PochSpec{x, n, PkParams(s_new, k)});
      break;
  }
  return out;
}

}  // namespace pkgamma

#include "pkgamma/core.hpp"

#include <algorithm>
#include <array>
#include <cfloat>
#include <cmath>
#include <limits>
#include <numbers>

namespace pkgamma {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::Domain: return "domain_error";
    case ErrorCode::Pole: return "pole";
    case ErrorCode::NoConvergence: return "no_convergence";
    case ErrorCode::Divergent: return "divergent_input";
    case ErrorCode::MaxTermsExceeded: return "max_terms_exceeded";
    case ErrorCode::LowerPole: return "lower_pole";
    case ErrorCode::UnsupportedShape: return "unsupported_shape";
    case ErrorCode::Index: return "index_error";
  }
  return "unknown";
}

const char* to_string(Method m) noexcept {
  switch (m) {
    case Method::Closed: return "closed";
    case Method::Limit: return "limit";
    case Method::Integral: return "integral";
    case Method::EulerProduct: return "euler_product";
    case Method::Weierstrass: return "weierstrass";
    case Method::Series: return "series";
  }
  return "unknown";
}

namespace {

using Wide = long double;

// B_2, B_4, ..., B_20
constexpr std::array<Wide, 10> kBernoulli = {
    1.0L / 6.0L,       -1.0L / 30.0L,   1.0L / 42.0L,         -1.0L / 30.0L,     5.0L / 66.0L,
    -691.0L / 2730.0L, 7.0L / 6.0L,     -3617.0L / 510.0L,    43867.0L / 798.0L, -174611.0L / 330.0L,
};

constexpr Wide kPiWide = 3.141592653589793238462643383279502884L;
constexpr Wide kHalfLn2Pi = 0.918938533204672741780329736405617639L;
constexpr double kShiftThreshold = 10.0;

// Stirling series; z >= kShiftThreshold.
Wide ln_gamma_asymptotic(Wide z) {
  const Wide inv = 1.0L / z;
  const Wide inv2 = inv * inv;
  Wide corr = 0.0L;
  Wide pw = inv;
  for (int j = 1; j <= 8; ++j) {
    corr += kBernoulli[j - 1] / (Wide(2 * j) * Wide(2 * j - 1)) * pw;
    pw *= inv2;
  }
  return (z - 0.5L) * std::log(z) - z + kHalfLn2Pi + corr;
}

Wide ln_gamma_positive(Wide z) {
  if (z >= kShiftThreshold) return ln_gamma_asymptotic(z);
  Wide prod = 1.0L;
  Wide s = z;
  while (s < kShiftThreshold) {
    prod *= s;
    s += 1.0L;
  }
  return ln_gamma_asymptotic(s) - std::log(prod);
}

Wide digamma_asymptotic(Wide z) {
  const Wide inv = 1.0L / z;
  const Wide inv2 = inv * inv;
  Wide corr = 0.0L;
  Wide pw = inv2;
  for (int j = 1; j <= 8; ++j) {
    corr += kBernoulli[j - 1] / Wide(2 * j) * pw;
    pw *= inv2;
  }
  return std::log(z) - 0.5L * inv - corr;
}

Wide digamma_positive(Wide z) {
  Wide shift = 0.0L;
  while (z < kShiftThreshold) {
    shift += 1.0L / z;
    z += 1.0L;
  }
  return digamma_asymptotic(z) - shift;
}

// Returns n with |z + n| <= tol, n >= 0, or -1 when z is not a pole.
std::int64_t pole_index_of(double z, double tol) {
  if (z > tol) return -1;
  const double n = -std::nearbyint(z);
  if (n < 0.0) return -1;
  if (std::fabs(z + n) <= tol) return static_cast<std::int64_t>(n);
  return -1;
}

double nonpole_distance(double z) { return std::fabs(z - std::nearbyint(z)); }

}  // namespace

double sin_pi(double z) {
  if (!std::isfinite(z)) return std::numeric_limits<double>::quiet_NaN();
  const double n = std::nearbyint(z);
  const double r = z - n;  // exact
  const double s = std::sin(std::numbers::pi * r);
  return std::fmod(n, 2.0) == 0.0 ? s : -s;
}

double cos_pi(double z) {
  if (!std::isfinite(z)) return std::numeric_limits<double>::quiet_NaN();
  const double n = std::nearbyint(z);
  const double r = z - n;
  const double c = std::sin(std::numbers::pi * (0.5 - std::fabs(r)));
  return std::fmod(n, 2.0) == 0.0 ? c : -c;
}

EvalReal ln_gamma_classical(double z) {
  if (!std::isfinite(z)) throw_domain("ln_gamma_classical: argument must be finite");
  if (const auto idx = pole_index_of(z, kPoleTolerance); idx >= 0) throw PoleError(idx);

  EvalReal out;
  out.method = Method::Closed;
  if (z > 0.0) {
    out.value = static_cast<double>(ln_gamma_positive(z));
    out.sign = 1;
  } else {
    // Gamma(z) Gamma(1-z) = pi / sin(pi z); Gamma(1-z) > 0 here.
    const double s = sin_pi(z);
    const Wide lg = std::log(kPiWide) - std::log(std::fabs(static_cast<Wide>(s))) -
                    ln_gamma_positive(1.0L - static_cast<Wide>(z));
    out.value = static_cast<double>(lg);
    out.sign = s > 0.0 ? 1 : -1;
  }
  out.abs_err = 4.0 * DBL_EPSILON * std::fmax(1.0, std::fabs(out.value));
  if (z <= 0.0) {
    const double dist = nonpole_distance(z);
    if (dist < kNearPoleFlag) {
      out.near_pole = true;
      out.abs_err += DBL_EPSILON * std::fmax(1.0, std::fabs(z)) / dist;
    }
  }
  out.overflow = std::fabs(out.value) > std::log(DBL_MAX);
  return out;
}

double digamma_classical(double z) {
  if (!std::isfinite(z)) throw_domain("digamma_classical: argument must be finite");
  if (const auto idx = pole_index_of(z, kPoleTolerance); idx >= 0) throw PoleError(idx);
  if (z > 0.0) return static_cast<double>(digamma_positive(z));
  // psi(1-z) - psi(z) = pi cot(pi z)
  const Wide cot = static_cast<Wide>(cos_pi(z)) / static_cast<Wide>(sin_pi(z));
  return static_cast<double>(digamma_positive(1.0L - static_cast<Wide>(z)) - kPiWide * cot);
}

double polygamma_classical(int m, double z) {
  if (m < 1) throw_domain("polygamma_classical: order must be >= 1");
  if (!(std::isfinite(z) && z > 0.0)) throw_domain("polygamma_classical: argument must be positive");

  Wide factorial_m = 1.0L;
  for (int i = 2; i <= m; ++i) factorial_m *= i;
  const Wide sign = (m % 2 == 1) ? 1.0L : -1.0L;  // (-1)^(m+1)

  const Wide threshold = std::max<Wide>(20.0L, 2.0L * m);
  Wide x = z;
  Wide shift = 0.0L;
  while (x < threshold) {
    shift += std::pow(x, -static_cast<Wide>(m + 1));
    x += 1.0L;
  }

  // (m-1)!/x^m + m!/(2 x^(m+1)) + sum_j B_2j (2j+m-1)! / ((2j)! x^(2j+m))
  const Wide inv = 1.0L / x;
  Wide asym = factorial_m / m * std::pow(inv, m) + factorial_m * 0.5L * std::pow(inv, m + 1);
  Wide ratio = factorial_m / m;  // (2j+m-1)! / (2j)!, starting from (m-1)!/0!
  Wide pw = std::pow(inv, m);
  for (int j = 1; j <= 10; ++j) {
    ratio *= Wide(2 * j + m - 2) * Wide(2 * j + m - 1) / (Wide(2 * j - 1) * Wide(2 * j));
    pw *= inv * inv;
    asym += kBernoulli[j - 1] * ratio * pw;
  }
  return static_cast<double>(sign * (asym + factorial_m * shift));
}

PoleReport pole_check(const PkParams& params, double x) {
  PoleReport rep;
  const auto idx = pole_index_of(x / params.k(), kPoleTolerance);
  if (idx >= 0) {
    rep.is_pole = true;
    rep.pole_index = idx;
  }
  return rep;
}

}  // namespace pkgamma

#pragma once

#include <cmath>
#include <cstdint>

#include "pkgamma/errors.hpp"

namespace pkgamma {

inline constexpr double kEulerGamma = 0.57721566490153286061;

/// Pole tolerance, measured in units of the step k: x is a pole when
/// |x/k + n| <= kPoleTolerance for some integer n >= 0.
inline constexpr double kPoleTolerance = 1e-9;

/// Distance (in units of k) below which evaluation proceeds but is flagged
/// as near-pole and carries an inflated error estimate.
inline constexpr double kNearPoleFlag = 1e-6;

/// The deformation pair (p, k). Both strictly positive and finite.
class PkParams {
 public:
  PkParams(double p, double k) : p_(p), k_(k) {
    if (!(std::isfinite(p) && p > 0.0)) throw_invalid("p must be positive and finite");
    if (!(std::isfinite(k) && k > 0.0)) throw_invalid("k must be positive and finite");
  }
  double p() const noexcept { return p_; }
  double k() const noexcept { return k_; }

 private:
  double p_;
  double k_;
};

enum class Method { Closed, Limit, Integral, EulerProduct, Weierstrass, Series };

const char* to_string(Method m) noexcept;

struct EvalReal {
  double value = 0.0;
  double abs_err = 0.0;
  int sign = 1;  // sign of the represented quantity when value is a logarithm
  Method method = Method::Closed;
  bool overflow = false;   // exp(value) is not representable; log-space value kept
  bool near_pole = false;  // within kNearPoleFlag of a pole, abs_err inflated
};

struct PoleReport {
  bool is_pole = false;
  std::int64_t pole_index = 0;
};

/// ln|x| together with the sign of x.
struct SignedLog {
  double ln_abs = 0.0;
  int sign = 1;
  double value() const { return sign * std::exp(ln_abs); }
};

/// value = ln|Gamma(z)|, sign = sign of Gamma(z).
EvalReal ln_gamma_classical(double z);

double digamma_classical(double z);

/// m-th derivative of the digamma function, m >= 1, z > 0.
double polygamma_classical(int m, double z);

PoleReport pole_check(const PkParams& params, double x);

/// sin(pi*z) with exact argument reduction.
double sin_pi(double z);
double cos_pi(double z);

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double v) noexcept {
    const double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v))
      comp_ += (sum_ - t) + v;
    else
      comp_ += (v - t) + sum_;
    sum_ = t;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Relative deviation |a - b| / |b|, falling back to |a - b| when b == 0.
inline double relative_error(double a, double b) {
  const double d = std::fabs(a - b);
  return b == 0.0 ? d : d / std::fabs(b);
}

}  // namespace pkgamma

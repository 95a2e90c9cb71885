#include "pkgamma/quadrature.hpp"

#include <cfloat>
#include <cmath>
#include <numbers>
#include <string>

namespace pkgamma {

void QuadratureSpec::validate() const {
  if (!(abs_tol > 0.0 && abs_tol < 1.0)) throw_invalid("quadrature abs_tol must lie in (0,1)");
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) throw_invalid("quadrature rel_tol must lie in (0,1)");
  if (max_refinements < 1 || max_refinements > 30)
    throw_invalid("quadrature max_refinements must lie in [1,30]");
}

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr int kMinLevels = 3;

// Beyond |u| > kFiniteGuard a non-finite integrand value is treated as an
// underflowed endpoint contribution rather than an error.
constexpr double kFiniteGuard = 3.0;

struct Node {
  double weighted = 0.0;  // w(u) * f(x(u))
  bool stop = false;      // u lies outside the representable range
};

struct SweepState {
  CompensatedSum sum;
  double l1 = 0.0;
  double peak = 0.0;
  double cut_factor = 0.0;  // 0 disables truncation
  double limit[2] = {HUGE_VAL, HUGE_VAL};  // |u| bound per direction, fixed at level 0
};

// Sums nodes u = j*h in one direction: every j at level 0, odd j afterwards.
// At level 0, with truncation enabled, the sweep ends once two consecutive
// weighted values fall below cut_factor times the largest value seen; the
// reached |u| (plus one coarse step) bounds all finer levels.
template <class NodeFn>
void sweep(double h, bool all, int dir, const NodeFn& node, SweepState& st) {
  const long start = all ? (dir > 0 ? 0 : 1) : 1;
  const long stride = all ? 1 : 2;
  double& limit = st.limit[dir > 0 ? 0 : 1];
  int quiet = 0;
  for (long j = start;; j += stride) {
    const double u = dir * static_cast<double>(j) * h;
    if (std::fabs(u) > limit) break;
    const Node n = node(u);
    if (n.stop) break;
    st.sum.add(n.weighted);
    const double mag = std::fabs(n.weighted);
    st.l1 += mag;
    st.peak = std::fmax(st.peak, mag);
    if (all && st.cut_factor > 0.0) {
      quiet = mag < st.cut_factor * st.peak ? quiet + 1 : 0;
      if (quiet >= 2) {
        limit = std::fabs(u) + h;
        break;
      }
    }
  }
}

template <class NodeFn>
EvalReal refine(const NodeFn& node, double cut_factor, const QuadratureSpec& spec, const char* name) {
  spec.validate();
  SweepState st;
  st.cut_factor = cut_factor;
  double h = 1.0;
  sweep(h, true, +1, node, st);
  sweep(h, true, -1, node, st);
  double prev = h * st.sum.value();
  double estimate = prev;
  double err = std::fabs(prev);

  for (int level = 1; level <= spec.max_refinements; ++level) {
    h *= 0.5;
    sweep(h, false, +1, node, st);
    sweep(h, false, -1, node, st);
    estimate = h * st.sum.value();
    const double roundoff = 8.0 * DBL_EPSILON * h * st.l1;
    err = std::fmax(std::fabs(estimate - prev), roundoff);
    prev = estimate;
    if (!std::isfinite(estimate)) break;
    if (level >= kMinLevels && err <= std::fmax(spec.abs_tol, spec.rel_tol * std::fabs(estimate))) {
      EvalReal out;
      out.value = estimate;
      out.abs_err = err;
      out.method = Method::Integral;
      return out;
    }
  }
  throw PartialResultError(ErrorCode::NoConvergence,
                           std::string(name) + ": tolerance not met within max_refinements",
                           estimate, err);
}

double checked(double v, double u) {
  if (std::isfinite(v)) return v;
  if (std::fabs(u) > kFiniteGuard) return 0.0;
  throw_domain("integrand is not finite at an interior node");
}

}  // namespace

EvalReal integrate_unit_split(const SplitIntegrand& f, const QuadratureSpec& spec) {
  // t = 1/(1+exp(-2s)), 1-t = 1/(1+exp(2s)), s = (pi/2) sinh u
  const double s_max = -std::log(DBL_MIN) / 2.0;
  auto node = [&](double u) {
    Node n;
    const double s = kHalfPi * std::sinh(u);
    if (std::fabs(s) > s_max) {
      n.stop = true;
      return n;
    }
    const double t = 1.0 / (1.0 + std::exp(-2.0 * s));
    const double tc = 1.0 / (1.0 + std::exp(2.0 * s));
    const double w = std::numbers::pi * std::cosh(u) * t * tc;
    n.weighted = w == 0.0 ? 0.0 : checked(w * f(t, tc), u);
    return n;
  };
  return refine(node, 0.0, spec, "integrate_unit");
}

EvalReal integrate_unit(const Integrand& f, const QuadratureSpec& spec) {
  return integrate_unit_split([&](double t, double) { return f(t); }, spec);
}

EvalReal integrate_semiaxis(const Integrand& f, const QuadratureSpec& spec) {
  // t = exp(s), s = (pi/2) sinh u. Sweeps are cut where the integrand has
  // dropped below abs_tol * 1e-2 of the dominant contribution.
  const double s_max = std::log(DBL_MAX) - 1.0;
  const double s_min = std::log(DBL_MIN);
  auto node = [&](double u) {
    Node n;
    const double s = kHalfPi * std::sinh(u);
    if (s > s_max || s < s_min) {
      n.stop = true;
      return n;
    }
    const double t = std::exp(s);
    const double w = t * kHalfPi * std::cosh(u);
    n.weighted = checked(w * f(t), u);
    return n;
  };
  return refine(node, 1e-2 * spec.abs_tol, spec, "integrate_semiaxis");
}

}  // namespace pkgamma

#include "pkgamma/audit.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <thread>

#include "json.hpp"
#include "pkgamma/beta_psi.hpp"
#include "pkgamma/gamma.hpp"
#include "pkgamma/hyper.hpp"
#include "pkgamma/pochhammer.hpp"

namespace pkgamma {

namespace {

enum class Metric { Relative, Absolute };

struct IdentityDef {
  const char* id;
  Suite suite;
  double tol;
  Metric metric;
};

// Report order within a suite follows this table.
constexpr IdentityDef kIdentities[] = {
    {"2.2", Suite::Pochhammer, 5e-13, Metric::Relative},
    {"2.20", Suite::Pochhammer, 5e-13, Metric::Relative},
    {"2.21", Suite::Pochhammer, 1e-12, Metric::Relative},
    {"2.33", Suite::Pochhammer, 1e-12, Metric::Relative},
    {"2.34", Suite::Pochhammer, 1e-13, Metric::Relative},
    {"2.4", Suite::Pochhammer, 1e-6, Metric::Relative},
    {"2.4-product", Suite::Pochhammer, 1e-12, Metric::Relative},
    {"2.5", Suite::Pochhammer, 1e-6, Metric::Relative},
    {"2.8", Suite::Pochhammer, 1e-13, Metric::Relative},
    {"2.9", Suite::Pochhammer, 1e-13, Metric::Relative},
    {"2.10", Suite::Pochhammer, 1e-13, Metric::Relative},
    {"2.7", Suite::Gamma, 1e-6, Metric::Relative},
    {"2.11", Suite::Gamma, 1e-12, Metric::Relative},
    {"2.12", Suite::Gamma, 1e-12, Metric::Relative},
    {"2.13", Suite::Gamma, 1e-12, Metric::Relative},
    {"2.14", Suite::Gamma, 1e-9, Metric::Relative},
    {"2.15", Suite::Gamma, 1e-6, Metric::Relative},
    {"2.16", Suite::Gamma, 1e-6, Metric::Relative},
    {"2.17", Suite::Gamma, 1e-9, Metric::Relative},
    {"2.18", Suite::Gamma, 1e-6, Metric::Relative},
    {"2.19", Suite::Gamma, 1e-10, Metric::Relative},
    {"2.22", Suite::Gamma, 5e-13, Metric::Relative},
    {"2.23", Suite::Gamma, 1e-10, Metric::Relative},
    {"2.24", Suite::Gamma, 1e-10, Metric::Relative},
    {"2.25", Suite::Gamma, 1e-10, Metric::Relative},
    {"2.26", Suite::Gamma, 1e-10, Metric::Relative},
    {"2.27", Suite::Gamma, 1e-10, Metric::Relative},
    {"2.28", Suite::Gamma, 1e-10, Metric::Relative},
    {"2.29", Suite::Gamma, 1e-10, Metric::Relative},
    {"2.30", Suite::Gamma, 1e-10, Metric::Relative},
    {"2.31", Suite::Gamma, 1e-10, Metric::Relative},
    {"2.32", Suite::Gamma, 1e-10, Metric::Relative},
    {"3.1", Suite::Beta, 1e-10, Metric::Relative},
    {"3.2", Suite::Beta, 1e-9, Metric::Relative},
    {"3.3", Suite::Beta, 1e-9, Metric::Relative},
    {"3.4", Suite::Beta, 1e-9, Metric::Relative},
    {"3.5", Suite::Beta, 1e-10, Metric::Relative},
    {"3.6", Suite::Psi, 1e-8, Metric::Relative},
    {"3.7", Suite::Psi, 1e-8, Metric::Absolute},
    {"3.8", Suite::Psi, 1e-8, Metric::Relative},
    {"3.9", Suite::Psi, 1e-6, Metric::Relative},
    {"3.10", Suite::Psi, 1e-6, Metric::Relative},
    {"3.11", Suite::Psi, 1e-4, Metric::Relative},
    {"3.11-classical", Suite::Psi, 1e-10, Metric::Relative},
    {"4.1-radius", Suite::Hyper, 1e-6, Metric::Relative},
    {"4.1-divergence", Suite::Hyper, 0.5, Metric::Absolute},
    {"4.2", Suite::Hyper, 1e-12, Metric::Relative},
    {"4.3", Suite::Hyper, 1e-13, Metric::Absolute},
    {"4.4", Suite::Hyper, 1e-12, Metric::Relative},
    {"4.5", Suite::Hyper, 1e-8, Metric::Relative},
};

const IdentityDef& def_of(const std::string& id) {
  for (const auto& d : kIdentities)
    if (id == d.id) return d;
  throw_invalid("unknown identity id: " + id);
}

constexpr double kPoleMargin = 1e-3;  // in units of k
constexpr long kProductTerms = 100000;
constexpr long kLimitTerms = 100000;
constexpr long kSeriesTerms = 100000;
constexpr int kHyperDraws = 50;
constexpr std::uint64_t kHyperSeed = 0x9e3779b97f4a7c15ULL;

struct Outcome {
  double lhs;
  double rhs_printed;
  double rhs_corrected;
};

Outcome same(double lhs, double rhs) { return {lhs, rhs, rhs}; }

struct SkipPoint {
  std::string reason;
};

struct Task {
  const IdentityDef* def;
  GridPoint point;
  std::function<Outcome()> eval;
};

GridPoint make_point(std::initializer_list<std::pair<std::string, double>> coords) {
  GridPoint p(coords);
  std::sort(p.begin(), p.end());
  return p;
}

// Skip when arg/k lies within the margin of a non-positive integer.
void require_clear(double arg, double k, const char* what) {
  const double z = arg / k;
  const double nearest = std::nearbyint(z);
  if (nearest <= 0.0 && std::fabs(z - nearest) < kPoleMargin) throw SkipPoint{std::string("near pole of ") + what};
}

double gamma_value(double p, double k, double x) { return gamma_closed(PkParams(p, k), x).value(); }

// G(a) / G(b) through logarithms.
double gamma_ratio(double p, double k, double a, double b) {
  const GammaEval ga = gamma_closed(PkParams(p, k), a);
  const GammaEval gb = gamma_closed(PkParams(p, k), b);
  return ga.sign * gb.sign * std::exp(ga.ln_value - gb.ln_value);
}

double poch(double p, double k, double x, int n) { return poch_direct(PochSpec{x, n, PkParams(p, k)}); }

// Central difference of order 1..3 with one Richardson step (h, h/2).
double derivative(const std::function<double(double)>& f, double x, double h, int order) {
  auto raw = [&](double s) {
    switch (order) {
      case 1:
        return (f(x + s) - f(x - s)) / (2.0 * s);
      case 2:
        return (f(x + s) - 2.0 * f(x) + f(x - s)) / (s * s);
      default:
        return (f(x + 2 * s) - 2.0 * f(x + s) + 2.0 * f(x - s) - f(x - 2 * s)) / (2.0 * s * s * s);
    }
  };
  return (4.0 * raw(h / 2.0) - raw(h)) / 3.0;
}

int as_int(double v) { return static_cast<int>(std::lround(v)); }

// ---------------------------------------------------------------- suites

void add_pochhammer(const AuditGrid& g, std::vector<Task>& out) {
  auto add = [&](const char* id, GridPoint pt, std::function<Outcome()> f) {
    out.push_back({&def_of(id), std::move(pt), std::move(f)});
  };
  for (double p : g.p)
    for (double k : g.k)
      for (double x : g.x)
        for (double nd : g.n) {
          const int n = as_int(nd);
          const PochSpec spec{x, n, PkParams(p, k)};
          const auto base = [&] { return make_point({{"p", p}, {"k", k}, {"x", x}, {"n", nd}}); };
          add("2.2", base(), [=] {
            if (n == 0) throw SkipPoint{"symmetric expansion needs n >= 1"};
            return same(poch_direct(spec), poch_symmetric(spec));
          });
          add("2.20", base(), [=] { return same(poch_direct(spec), poch_reduce(spec)); });
          for (int q = 1; q <= 3; ++q)
            add("2.21", make_point({{"p", p}, {"k", k}, {"x", x}, {"n", nd}, {"q", double(q)}}),
                [=] { return same(poch(p, k, x, n * q), poch_generalized(spec, q)); });
          add("2.33", base(), [=] {
            if (n == 0) throw SkipPoint{"recurrence needs n >= 1"};
            const double lhs = poch(p, k, x, n) - poch(p, k, x - k, n);
            const double lower = poch(p, k, x, n - 1);
            return Outcome{lhs, n * lower, n * p * lower};
          });
          for (double jd : g.n) {
            const int j = as_int(jd);
            add("2.34", make_point({{"p", p}, {"k", k}, {"x", x}, {"n", nd}, {"j", jd}}),
                [=] { return same(poch(p, k, x, n + j), poch(p, k, x, j) * poch(p, k, x + j * k, n)); });
          }
          add("2.4", base(), [=] {
            if (n > 8) throw SkipPoint{"derivative check limited to n <= 8"};
            const double fd = derivative([&](double kk) { return poch(p, kk, x, n); }, k, 1e-3 * k, 1);
            return Outcome{fd, poch_dk_printed(spec), poch_dk(spec)};
          });
          add("2.4-product", base(), [=] { return same(poch_dk(spec), poch_dk_product(spec)); });
          add("2.5", base(), [=] {
            if (n > 8) throw SkipPoint{"derivative check limited to n <= 8"};
            const double fd = derivative([&](double pp) { return poch(pp, k, x, n); }, p, 1e-3 * p, 1);
            return same(fd, poch_dp(spec));
          });
          const std::pair<const char*, RescaleMode> modes[] = {
              {"2.8", RescaleMode::StepChange}, {"2.9", RescaleMode::StepAndScale}, {"2.10", RescaleMode::ScaleChange}};
          for (const auto& [id, mode] : modes)
            for (double s : g.k)
              add(id, make_point({{"p", p}, {"k", k}, {"x", x}, {"n", nd}, {"s", s}}), [=, mode = mode] {
                const IdentitySides sides = poch_rescale(spec, s, mode);
                return same(sides.lhs, sides.rhs);
              });
        }
}

void add_gamma(const AuditGrid& g, std::vector<Task>& out) {
  auto add = [&](const char* id, GridPoint pt, std::function<Outcome()> f) {
    out.push_back({&def_of(id), std::move(pt), std::move(f)});
  };
  for (double p : g.p)
    for (double k : g.k) {
      const PkParams pk(p, k);
      add("2.27", make_point({{"p", p}, {"k", k}}),
          [=] { return same(gamma_value(p, k, 1.0), std::pow(p, 1.0 / k) / k * std::tgamma(1.0 / k)); });
      add("2.28", make_point({{"p", p}, {"k", k}}), [=] { return same(gamma_value(p, k, k), p / k); });
      add("2.29", make_point({{"p", p}, {"k", k}}),
          [=] { return same(gamma_value(p, k, p), std::pow(p, p / k) / k * std::tgamma(p / k)); });
      for (double x : g.x) {
        const auto base = [&] { return make_point({{"p", p}, {"k", k}, {"x", x}}); };
        const double z = x / k;
        add("2.7", base(), [=] { return same(gamma_value(p, k, x), gamma_limit(pk, x, kLimitTerms, true).value()); });
        add("2.14", base(), [=] { return same(gamma_value(p, k, x), gamma_integral(pk, x).value()); });
        add("2.15", base(), [=] {
          return Outcome{gamma_value(p, k, x), gamma_euler_product(pk, x, kProductTerms, ProductForm::Printed).value(),
                         gamma_euler_product(pk, x, kProductTerms).value()};
        });
        add("2.16", base(), [=] {
          return Outcome{1.0 / gamma_value(p, k, x), gamma_gauss_recip(pk, x, kProductTerms, ProductForm::Printed).value(),
                         gamma_gauss_recip(pk, x, kProductTerms).value()};
        });
        add("2.17", base(), [=] { return same(gamma_value(p, k, x), gamma_integral(pk, x, 2.5).value()); });
        for (double xs : {x, -x})
          add("2.18", make_point({{"p", p}, {"k", k}, {"x", xs}}), [=] {
            require_clear(xs, k, "x");
            return Outcome{1.0 / gamma_value(p, k, xs),
                           gamma_weierstrass_recip(pk, xs, kProductTerms, ProductForm::Printed).value(),
                           gamma_weierstrass_recip(pk, xs, kProductTerms).value()};
          });
        add("2.19", base(), [=] {
          const double k_gamma = std::pow(k, z - 1.0) * std::tgamma(z);
          return same(gamma_value(p, k, x), std::pow(p / k, z) * k_gamma);
        });
        add("2.23", base(), [=] { return same(gamma_value(p, k, x + k), x * p / k * gamma_value(p, k, x)); });
        for (double s : g.k)
          add("2.11", make_point({{"p", p}, {"k", k}, {"x", x}, {"s", s}}), [=] {
            const GammaRescaleSides r = gamma_rescale(PkParams(p, s), pk, x, GammaRescale::StepChange);
            return same(r.lhs.value(), r.rhs.value());
          });
        for (double r_scale : g.p)
          for (double s : g.k)
            add("2.12", make_point({{"p", p}, {"k", k}, {"x", x}, {"r", r_scale}, {"s", s}}), [=] {
              const GammaRescaleSides r = gamma_rescale(PkParams(r_scale, s), pk, x, GammaRescale::FullChange);
              return same(r.lhs.value(), r.rhs.value());
            });
        for (double r_scale : g.p)
          add("2.13", make_point({{"p", p}, {"k", k}, {"x", x}, {"r", r_scale}}), [=] {
            const GammaRescaleSides r = gamma_rescale(PkParams(r_scale, k), pk, x, GammaRescale::ScaleChange);
            return same(r.lhs.value(), r.rhs.value());
          });
        for (double nd : g.n) {
          const int n = as_int(nd);
          const auto pt = [&] { return make_point({{"p", p}, {"k", k}, {"x", x}, {"n", nd}}); };
          add("2.22", pt(), [=] { return same(poch(p, k, x, n), gamma_ratio(p, k, x + n * k, x)); });
          add("2.24", pt(), [=] {
            double prod = 1.0;
            for (int j = 0; j < n; ++j) prod *= p * (z + j);
            return same(gamma_value(p, k, x + n * k), prod * gamma_value(p, k, x));
          });
          add("2.25", pt(), [=] {
            require_clear(x - n * k, k, "x - n k");
            double prod = 1.0;
            for (int j = 1; j <= n; ++j) prod *= p / k * (x - j * k);
            return same(gamma_ratio(p, k, x, x - n * k), prod);
          });
          add("2.26", pt(), [=] {
            require_clear(x - n * k, k, "x - n k");
            require_clear(k - x, k, "k - x");
            const double sign = n % 2 == 0 ? 1.0 : -1.0;
            return same(gamma_ratio(p, k, x, x - n * k), sign * gamma_ratio(p, k, -x + n * k + k, -x + k));
          });
        }
        add("2.30", base(), [=] {
          require_clear(-x, k, "-x");
          const double lhs = gamma_value(p, k, x) * gamma_value(p, k, -x);
          const double printed = std::numbers::pi / (x * k * sin_pi(z));
          return Outcome{lhs, printed, -printed};
        });
        add("2.31", base(), [=] {
          require_clear(k - x, k, "k - x");
          return same(gamma_value(p, k, x) * gamma_value(p, k, k - x), p / (k * k) * std::numbers::pi / sin_pi(z));
        });
        for (double md : g.m) {
          const int m = as_int(md);
          add("2.32", make_point({{"p", p}, {"k", k}, {"x", x}, {"m", md}}), [=] {
            double ln_lhs = 0.0;
            int sign = 1;
            for (int r = 0; r < m; ++r) {
              const GammaEval e = gamma_closed(pk, x + k * r / m);
              ln_lhs += e.ln_value;
              sign *= e.sign;
            }
            const GammaEval big = gamma_closed(pk, m * x);
            const double ln_rhs = 0.5 * (m - 1) * std::log(p) - (m - 1) * std::log(k) +
                                  0.5 * (m - 1) * std::log(2.0 * std::numbers::pi) + (0.5 - m * z) * std::log(double(m)) +
                                  big.ln_value;
            return same(sign * std::exp(ln_lhs), big.sign * std::exp(ln_rhs));
          });
        }
      }
    }
}

void add_beta(const AuditGrid& g, std::vector<Task>& out) {
  auto add = [&](const char* id, GridPoint pt, std::function<Outcome()> f) {
    out.push_back({&def_of(id), std::move(pt), std::move(f)});
  };
  for (double p : g.p)
    for (double k : g.k)
      for (double x : g.x)
        for (double y : g.x) {
          const BetaArgs args{x, y, PkParams(p, k)};
          const auto pt = [&] { return make_point({{"p", p}, {"k", k}, {"x", x}, {"y", y}}); };
          add("3.1", pt(), [=] { return same(beta_gamma_ratio(args).value, beta_closed(args).value); });
          add("3.2", pt(), [=] { return same(beta_gamma_ratio(args).value, beta_integral(args, BetaForm::Unit).value); });
          add("3.3", pt(),
              [=] { return same(beta_gamma_ratio(args).value, beta_integral(args, BetaForm::Symmetric).value); });
          add("3.4", pt(),
              [=] { return same(beta_gamma_ratio(args).value, beta_integral(args, BetaForm::Semiaxis).value); });
          add("3.5", pt(), [=] {
            const double libm = std::exp(std::lgamma(x / k) + std::lgamma(y / k) - std::lgamma((x + y) / k)) / k;
            return same(beta_gamma_ratio(args).value, libm);
          });
        }
}

void add_psi(const AuditGrid& g, std::vector<Task>& out) {
  auto add = [&](const char* id, GridPoint pt, std::function<Outcome()> f) {
    out.push_back({&def_of(id), std::move(pt), std::move(f)});
  };
  for (double p : g.p)
    for (double k : g.k)
      for (double x : g.x) {
        const PkParams pk(p, k);
        const auto base = [&] { return make_point({{"p", p}, {"k", k}, {"x", x}}); };
        const auto ln_g = [=](double t) { return gamma_closed(PkParams(p, k), t).ln_value; };
        const auto g_lin = [=](double t) { return gamma_value(p, k, t); };
        const auto psi_of = [=](double t) { return psi(PkParams(p, k), t).value; };
        // step capped at 1e-3: G itself grows fast for small k
        const double h = 1e-3 * std::min(x, 1.0);
        add("3.6", base(), [=] { return same(derivative(ln_g, x, h, 1), derivative(g_lin, x, h, 1) / g_lin(x)); });
        add("3.7", base(), [=] {
          const double via = ln_gamma_via_psi(pk, x).value;
          return Outcome{ln_g(x), via - ln_g(1.0), via};
        });
        add("3.8", base(), [=] { return Outcome{derivative(ln_g, x, h, 1), psi_printed(pk, x), psi_of(x)}; });
        add("3.9", base(), [=] {
          return Outcome{psi_of(x), psi_series(pk, x, PsiSeries::Harmonic, kSeriesTerms, true).value,
                         psi_series(pk, x, PsiSeries::Harmonic, kSeriesTerms).value};
        });
        add("3.10", base(), [=] {
          return Outcome{psi_of(x), psi_series(pk, x, PsiSeries::Shifted, kSeriesTerms, true).value,
                         psi_series(pk, x, PsiSeries::Shifted, kSeriesTerms).value};
        });
        for (double rd : g.m) {
          const int r = as_int(rd);
          const auto pt = [&] { return make_point({{"p", p}, {"k", k}, {"x", x}, {"r", rd}}); };
          add("3.11", pt(), [=] {
            static constexpr double kStep[] = {0.0, 2e-3, 1e-2, 2e-2};
            const double fd = derivative(psi_of, x, kStep[std::min(r - 1, 3)] * x, std::min(r - 1, 3));
            return Outcome{fd, polygamma_printed(pk, x, r), polygamma(pk, x, r).value};
          });
          if (k == 1.0)
            add("3.11-classical", pt(), [=] { return same(polygamma(pk, x, r).value, polygamma_classical(r - 1, x)); });
        }
      }
}

// mt19937_64 output is fixed by the standard; the conversion to [0, 1) is
// done here so draws do not depend on the library's distributions.
struct Uniform {
  std::mt19937_64 gen;
  std::uint64_t next() { return gen(); }
  double unit() { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }
  double range(double lo, double hi) { return lo + (hi - lo) * unit(); }
};

struct HyperDraw {
  std::vector<UpperParam> upper;
  std::vector<LowerParam> lower;
  double x;
};

std::vector<HyperDraw> hyper_draws() {
  Uniform u{std::mt19937_64(kHyperSeed)};
  std::vector<HyperDraw> draws;
  for (int i = 0; i < kHyperDraws; ++i) {
    HyperDraw d;
    const int q = static_cast<int>(u.next() % 3);
    const int r = static_cast<int>(u.next() % static_cast<std::uint64_t>(q + 2));
    for (int a = 0; a < r; ++a) d.upper.push_back({u.range(-1.5, 3.0), u.range(0.5, 3.0), u.range(0.5, 3.0)});
    for (int b = 0; b < q; ++b) d.lower.push_back({u.range(0.2, 3.2), u.range(0.5, 3.0), u.range(0.5, 3.0)});
    const HyperParams hp(d.upper, d.lower);
    const ConvergenceClass cls = classify(hp);
    const double reach = cls.kind == ConvergenceKind::FiniteRadius ? 0.45 * cls.radius : 2.0 / hp.scale();
    d.x = reach * u.range(-1.0, 1.0);
    draws.push_back(std::move(d));
  }
  return draws;
}

bool raises_divergent(const HyperParams& hp, double x) {
  try {
    hyper_series(hp, x);
  } catch (const Error& e) {
    return e.code() == ErrorCode::Divergent;
  }
  return false;
}

void add_hyper(const AuditGrid& g, std::vector<Task>& out) {
  auto add = [&](const char* id, GridPoint pt, std::function<Outcome()> f) {
    out.push_back({&def_of(id), std::move(pt), std::move(f)});
  };
  const std::vector<HyperDraw> draws = hyper_draws();
  for (int i = 0; i < static_cast<int>(draws.size()); ++i) {
    const HyperDraw d = draws[static_cast<std::size_t>(i)];
    const double di = i;
    add("4.2", make_point({{"draw", di}, {"x", d.x}}), [=] {
      const HyperParams hp(d.upper, d.lower);
      const HyperReduction red = reduce_classical(hp);
      return same(hyper_series(hp, d.x).value,
                  classical_hyper_series(red.classical_upper, red.classical_lower, red.scale * d.x).value);
    });
    add("4.3", make_point({{"draw", di}}), [=] {
      const std::vector<double> res = ode_coefficient_residuals(HyperParams(d.upper, d.lower), 50);
      return same(*std::max_element(res.begin(), res.end()), 0.0);
    });
    if (d.upper.size() == d.lower.size() + 1) {
      add("4.1-radius", make_point({{"draw", di}}), [=] {
        const HyperParams hp(d.upper, d.lower);
        return same(classify(hp).radius, 1.0 / term_ratio(hp, 1.0, 1e9));
      });
      add("4.1-divergence", make_point({{"draw", di}}), [=] {
        const HyperParams hp(d.upper, d.lower);
        const double beyond = 1.05 * classify(hp).radius;
        return same(raises_divergent(hp, beyond) ? 1.0 : 0.0, term_ratio(hp, beyond, 1e6) > 1.0 ? 1.0 : 0.0);
      });
    }
  }
  // r > q + 1: any non-zero x diverges
  const std::vector<std::vector<UpperParam>> formal = {
      {{1.0, 1.0, 1.0}, {0.5, 2.0, 1.0}},
      {{1.5, 1.0, 2.0}, {0.3, 0.5, 1.0}, {2.0, 1.0, 1.0}},
  };
  for (int i = 0; i < static_cast<int>(formal.size()); ++i) {
    const auto up = formal[static_cast<std::size_t>(i)];
    add("4.1-divergence", make_point({{"draw", double(kHyperDraws + i)}}), [=] {
      const HyperParams hp(up, {});
      return same(raises_divergent(hp, 1e-3) ? 1.0 : 0.0, term_ratio(hp, 1e-3, 1e6) > 1.0 ? 1.0 : 0.0);
    });
  }
  for (double p : g.p)
    for (double k : g.k)
      for (double a : {0.5, 1.0, 2.0})
        for (double xp : {-0.9, -0.5, 0.25, 0.5, 0.9})
          add("4.4", make_point({{"p", p}, {"k", k}, {"a", a}, {"xp", xp}}), [=] {
            const PkParams pk(p, k);
            return same(pk_binomial(a, pk, xp / p).value, pk_binomial_closed(a, pk, xp / p));
          });
  struct ConfluentPoint {
    double a, b, x;
  };
  constexpr ConfluentPoint kConfluent[] = {{0.3, 1.5, -2.0}, {0.3, 1.5, 0.5}, {0.3, 3.7, 3.0}, {1.2, 1.5, -2.0},
                                           {1.2, 3.7, 0.5},  {1.2, 3.7, 3.0}, {0.5, 2.5, 1.0}, {2.0, 4.0, -1.0},
                                           {0.8, 1.1, 2.0},  {1.5, 5.0, -3.0}};
  for (const auto& c : kConfluent)
    add("4.5", make_point({{"a", c.a}, {"b", c.b}, {"x", c.x}}), [=] {
      const HyperParams hp({{c.a, 1.5, 1.0}}, {{c.b, 0.5, 1.0}});
      return same(hyper_series(hp, c.x).value, confluent_integral(hp, c.x).value);
    });
}

double deviation(Metric metric, double a, double b) {
  return metric == Metric::Absolute ? std::fabs(a - b) : relative_error(a, b);
}

IdentityRecord evaluate(const Task& task, const ToleranceTable& tol) {
  IdentityRecord rec;
  rec.identity_id = task.def->id;
  rec.point = task.point;
  rec.tolerance = tol.get(rec.identity_id);
  try {
    const Outcome o = task.eval();
    if (!std::isfinite(o.lhs) || !std::isfinite(o.rhs_printed) || !std::isfinite(o.rhs_corrected)) {
      rec.skipped = true;
      rec.error = true;
      rec.skip_reason = "non-finite value";
      return rec;
    }
    rec.lhs = o.lhs;
    rec.rhs_printed = o.rhs_printed;
    rec.rhs_corrected = o.rhs_corrected;
    rec.rel_err_printed = deviation(task.def->metric, o.lhs, o.rhs_printed);
    rec.rel_err_corrected = deviation(task.def->metric, o.lhs, o.rhs_corrected);
    rec.printed_pass = rec.rel_err_printed <= rec.tolerance;
    rec.corrected_pass = rec.rel_err_corrected <= rec.tolerance;
  } catch (const SkipPoint& s) {
    rec.skipped = true;
    rec.skip_reason = s.reason;
  } catch (const std::exception& e) {
    rec.skipped = true;
    rec.error = true;
    rec.skip_reason = std::string("evaluation error: ") + e.what();
  }
  return rec;
}

std::vector<Suite> expand(Suite s) {
  if (s != Suite::All) return {s};
  return {Suite::Pochhammer, Suite::Gamma, Suite::Beta, Suite::Psi, Suite::Hyper};
}

nlohmann::ordered_json number_or_skipped(bool skipped, double v) {
  if (skipped) return "skipped";
  return v;
}

}  // namespace

const char* to_string(Suite s) noexcept {
  switch (s) {
    case Suite::Pochhammer:
      return "pochhammer";
    case Suite::Gamma:
      return "gamma";
    case Suite::Beta:
      return "beta";
    case Suite::Psi:
      return "psi";
    case Suite::Hyper:
      return "hyper";
    case Suite::All:
      return "all";
  }
  return "unknown";
}

std::optional<Suite> parse_suite(const std::string& name) {
  for (Suite s : {Suite::Pochhammer, Suite::Gamma, Suite::Beta, Suite::Psi, Suite::Hyper, Suite::All})
    if (name == to_string(s)) return s;
  return std::nullopt;
}

AuditGrid AuditGrid::defaults() {
  return AuditGrid{{0.5, 1.0, 2.0, 3.5}, {0.5, 1.0, 2.0, 3.0}, {0.3, 0.7, 1.1, 2.5, 4.9, 7.3}, {0, 1, 2, 5, 11}, {2, 3, 4}};
}

void AuditGrid::validate() const {
  const std::pair<const char*, const std::vector<double>*> axes[] = {{"p", &p}, {"k", &k}, {"x", &x}, {"n", &n}, {"m", &m}};
  for (const auto& [name, axis] : axes) {
    if (axis->empty()) throw_invalid(std::string("grid axis '") + name + "' is empty");
    for (double v : *axis)
      if (!std::isfinite(v)) throw_invalid(std::string("grid axis '") + name + "' has a non-finite entry");
  }
  for (double v : p)
    if (v <= 0.0) throw_invalid("grid axis 'p' must be positive");
  for (double v : k)
    if (v <= 0.0) throw_invalid("grid axis 'k' must be positive");
  for (double v : n)
    if (v < 0.0 || v != std::nearbyint(v) || v > 64) throw_invalid("grid axis 'n' must hold integers in [0, 64]");
  for (double v : m)
    if (v < 2.0 || v != std::nearbyint(v) || v > 16) throw_invalid("grid axis 'm' must hold integers in [2, 16]");
}

ToleranceTable ToleranceTable::defaults() {
  ToleranceTable t;
  for (const auto& d : kIdentities) t.table_[d.id] = d.tol;
  return t;
}

double ToleranceTable::get(const std::string& id) const {
  const auto it = table_.find(id);
  if (it == table_.end()) throw_invalid("unknown identity id: " + id);
  return it->second;
}

void ToleranceTable::set(const std::string& id, double tol) {
  if (!contains(id)) throw_invalid("unknown identity id: " + id);
  if (!(std::isfinite(tol) && tol >= 0.0)) throw_invalid("tolerance must be finite and non-negative");
  table_[id] = tol;
}

void ToleranceTable::set_all(double tol) {
  if (!(std::isfinite(tol) && tol >= 0.0)) throw_invalid("tolerance must be finite and non-negative");
  for (auto& [id, v] : table_) v = tol;
}

std::vector<std::string> suite_identities(Suite s) {
  std::vector<std::string> ids;
  for (Suite part : expand(s))
    for (const auto& d : kIdentities)
      if (d.suite == part) ids.emplace_back(d.id);
  return ids;
}

AuditReport run_audit(const AuditOptions& options) {
  options.grid.validate();
  std::vector<Task> tasks;
  for (Suite part : expand(options.suite)) {
    switch (part) {
      case Suite::Pochhammer:
        add_pochhammer(options.grid, tasks);
        break;
      case Suite::Gamma:
        add_gamma(options.grid, tasks);
        break;
      case Suite::Beta:
        add_beta(options.grid, tasks);
        break;
      case Suite::Psi:
        add_psi(options.grid, tasks);
        break;
      case Suite::Hyper:
        add_hyper(options.grid, tasks);
        break;
      case Suite::All:
        break;
    }
  }

  AuditReport report;
  report.suite = options.suite;
  report.grid = options.grid;
  report.records.resize(tasks.size());
  unsigned workers = options.workers != 0 ? options.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) report.records[i] = evaluate(tasks[i], options.tolerances);
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  std::sort(report.records.begin(), report.records.end(), [](const IdentityRecord& a, const IdentityRecord& b) {
    if (a.identity_id != b.identity_id) return a.identity_id < b.identity_id;
    return a.point < b.point;
  });

  std::vector<std::string> ids = suite_identities(options.suite);
  std::sort(ids.begin(), ids.end());
  for (const auto& id : ids) {
    IdentitySummary s;
    s.identity_id = id;
    s.tolerance = options.tolerances.get(id);
    for (const auto& r : report.records) {
      if (r.identity_id != id) continue;
      if (r.skipped) {
        ++s.skipped;
        if (r.error) ++s.errors;
        continue;
      }
      ++s.evaluated;
      s.corrected_passed += r.corrected_pass;
      s.printed_passed += r.printed_pass;
      s.max_rel_err_corrected = std::max(s.max_rel_err_corrected, r.rel_err_corrected);
      s.max_rel_err_printed = std::max(s.max_rel_err_printed, r.rel_err_printed);
    }
    if (s.corrected_passed < s.evaluated || s.errors > 0)
      s.verdict = "corrected-failures";
    else if (s.evaluated == 0)
      s.verdict = "not-evaluated";
    else if (s.printed_passed < s.evaluated)
      s.verdict = "printed-form-discrepancy";
    else
      s.verdict = "holds-as-printed";
    report.summary.push_back(std::move(s));
  }
  return report;
}

bool AuditReport::all_corrected_pass() const {
  for (const auto& s : summary)
    if (s.corrected_passed < s.evaluated || s.errors > 0) return false;
  return true;
}

const IdentitySummary* AuditReport::find(const std::string& id) const {
  for (const auto& s : summary)
    if (s.identity_id == id) return &s;
  return nullptr;
}

const IdentityRecord* AuditReport::find(const std::string& id, const GridPoint& point) const {
  GridPoint sorted = point;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& r : records)
    if (r.identity_id == id && r.point == sorted) return &r;
  return nullptr;
}

std::string AuditReport::to_json() const {
  using Json = nlohmann::ordered_json;
  Json doc;
  doc["suite"] = to_string(suite);
  Json grid_json;
  grid_json["p"] = grid.p;
  grid_json["k"] = grid.k;
  grid_json["x"] = grid.x;
  grid_json["n"] = grid.n;
  grid_json["m"] = grid.m;
  doc["grid"] = grid_json;
  Json recs = Json::array();
  for (const auto& r : records) {
    Json j;
    j["identity_id"] = r.identity_id;
    Json pt = Json::object();
    for (const auto& [name, v] : r.point) pt[name] = v;
    j["grid_point"] = pt;
    j["lhs"] = number_or_skipped(r.skipped, r.lhs);
    j["rhs_printed"] = number_or_skipped(r.skipped, r.rhs_printed);
    j["rhs_corrected"] = number_or_skipped(r.skipped, r.rhs_corrected);
    j["rel_err_printed"] = number_or_skipped(r.skipped, r.rel_err_printed);
    j["rel_err_corrected"] = number_or_skipped(r.skipped, r.rel_err_corrected);
    j["tolerance"] = r.tolerance;
    j["printed_pass"] = r.skipped ? Json(nullptr) : Json(r.printed_pass);
    j["corrected_pass"] = r.skipped ? Json(nullptr) : Json(r.corrected_pass);
    j["skipped"] = r.skipped;
    j["skip_reason"] = r.skipped ? Json(r.skip_reason) : Json(nullptr);
    recs.push_back(std::move(j));
  }
  doc["records"] = std::move(recs);
  Json sum = Json::array();
  for (const auto& s : summary) {
    Json j;
    j["identity_id"] = s.identity_id;
    j["count"] = s.evaluated;
    j["skipped"] = s.skipped;
    j["errors"] = s.errors;
    j["tolerance"] = s.tolerance;
    j["max_rel_err_corrected"] = s.evaluated > 0 ? Json(s.max_rel_err_corrected) : Json(nullptr);
    j["max_rel_err_printed"] = s.evaluated > 0 ? Json(s.max_rel_err_printed) : Json(nullptr);
    j["corrected_pass_rate"] =
        s.evaluated > 0 ? Json(static_cast<double>(s.corrected_passed) / static_cast<double>(s.evaluated)) : Json(nullptr);
    j["printed_pass_rate"] =
        s.evaluated > 0 ? Json(static_cast<double>(s.printed_passed) / static_cast<double>(s.evaluated)) : Json(nullptr);
    j["verdict"] = s.verdict;
    sum.push_back(std::move(j));
  }
  doc["summary"] = std::move(sum);
  return doc.dump(2) + "\n";
}

}  // namespace pkgamma

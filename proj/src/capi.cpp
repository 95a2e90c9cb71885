#include "pkgamma/pkgamma.h"

#include <cfloat>
#include <cmath>
#include <fstream>
#include <memory>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "pkgamma/audit.hpp"
#include "pkgamma/beta_psi.hpp"
#include "pkgamma/gamma.hpp"
#include "pkgamma/hyper.hpp"
#include "pkgamma/pochhammer.hpp"

using namespace pkgamma;

struct pkg_hyper {
  std::vector<UpperParam> upper;
  std::vector<LowerParam> lower;
};

struct pkg_audit {
  AuditOptions options;
  std::optional<AuditReport> report;
  std::string json;
};

namespace {

constexpr long kLimitTerms = 100000;
constexpr long kProductTerms = 100000;
constexpr long kPsiSeriesTerms = 100000;

thread_local std::string g_last_error;

pkg_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return PKG_INVALID_ARGUMENT;
    case ErrorCode::Domain: return PKG_DOMAIN;
    case ErrorCode::Pole: return PKG_POLE;
    case ErrorCode::NoConvergence: return PKG_NO_CONVERGENCE;
    case ErrorCode::Divergent: return PKG_DIVERGENT;
    case ErrorCode::MaxTermsExceeded: return PKG_MAX_TERMS;
    case ErrorCode::LowerPole: return PKG_LOWER_POLE;
    case ErrorCode::UnsupportedShape: return PKG_UNSUPPORTED_SHAPE;
    case ErrorCode::Index: return PKG_INDEX;
  }
  return PKG_INTERNAL;
}

pkg_status fail(pkg_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

pkg_result blank_result() {
  pkg_result r{};
  r.sign = 1;
  r.method = "closed";
  return r;
}

// Runs `body`, translating exceptions into status codes. A pole error writes
// its index into `out` when one is given.
template <class F>
pkg_status guarded(pkg_result* out, F&& body) {
  g_last_error.clear();
  try {
    return body();
  } catch (const PoleError& e) {
    if (out) {
      *out = blank_result();
      out->pole_index = e.index();
    }
    return fail(PKG_POLE, e.what());
  } catch (const Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(PKG_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PKG_INTERNAL, e.what());
  }
}

template <class F>
pkg_status guarded(F&& body) {
  return guarded(nullptr, std::forward<F>(body));
}

void fill(pkg_result* out, double value, double abs_err, const char* method) {
  *out = blank_result();
  out->value = value;
  out->abs_err = abs_err;
  out->sign = value < 0 ? -1 : 1;
  out->ln_abs = std::log(std::fabs(value));
  out->method = method;
}

void fill_gamma(pkg_result* out, const GammaEval& g, bool reciprocal_of, const char* method) {
  *out = blank_result();
  out->method = method;
  out->sign = g.sign;
  if (g.at_pole) {
    out->at_pole = 1;
    out->ln_abs = -INFINITY;
    return;
  }
  out->ln_abs = reciprocal_of ? -g.ln_value : g.ln_value;
  out->overflow = out->ln_abs > std::log(DBL_MAX) ? 1 : 0;
  out->value = reciprocal_of ? 1.0 / g.value() : g.value();
  if (out->overflow) out->value = g.sign < 0 ? -HUGE_VAL : HUGE_VAL;
  out->abs_err = std::fabs(out->value) * std::expm1(g.abs_err_ln);
}

// Flags non-pole arguments within kNearPoleFlag (in units of k) of a pole.
void mark_near_pole(pkg_result* out, double k, double x) {
  const double z = x / k;
  if (z <= 0.0 && std::fabs(z - std::nearbyint(z)) < kNearPoleFlag) out->near_pole = 1;
}

ProductForm product_form(pkg_form f) { return f == PKG_FORM_PRINTED ? ProductForm::Printed : ProductForm::Corrected; }

bool valid_form(pkg_form f) { return f == PKG_FORM_CORRECTED || f == PKG_FORM_PRINTED; }

}  // namespace

extern "C" {

const char* pkg_version(void) { return "0.1.0"; }

const char* pkg_status_string(pkg_status status) {
  switch (status) {
    case PKG_OK: return "ok";
    case PKG_INVALID_ARGUMENT: return "invalid argument";
    case PKG_DOMAIN: return "domain error";
    case PKG_POLE: return "pole";
    case PKG_NO_CONVERGENCE: return "no convergence";
    case PKG_DIVERGENT: return "divergent";
    case PKG_MAX_TERMS: return "maximum terms exceeded";
    case PKG_LOWER_POLE: return "lower parameter at a pole";
    case PKG_UNSUPPORTED_SHAPE: return "unsupported shape";
    case PKG_INDEX: return "index out of range";
    case PKG_IO: return "I/O error";
    case PKG_NULL_POINTER: return "null pointer";
    case PKG_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* pkg_last_error(void) { return g_last_error.c_str(); }

pkg_status pkg_gamma(double p, double k, double x, pkg_method method, pkg_form form, pkg_result* out) {
  if (!out) return fail(PKG_NULL_POINTER, "result pointer is null");
  if (!valid_form(form)) return fail(PKG_INVALID_ARGUMENT, "unknown form");
  return guarded(out, [&] {
    const PkParams pk(p, k);
    const ProductForm pf = product_form(form);
    switch (method) {
      case PKG_METHOD_DEFAULT:
      case PKG_METHOD_CLOSED: fill_gamma(out, gamma_closed(pk, x), false, "closed"); break;
      case PKG_METHOD_LIMIT: fill_gamma(out, gamma_limit(pk, x, kLimitTerms, true), false, "limit"); break;
      case PKG_METHOD_INTEGRAL: fill_gamma(out, gamma_integral(pk, x), false, "integral"); break;
      case PKG_METHOD_EULER_PRODUCT:
        fill_gamma(out, gamma_euler_product(pk, x, kProductTerms, pf), false, "euler_product");
        break;
      case PKG_METHOD_GAUSS: fill_gamma(out, gamma_gauss_recip(pk, x, kProductTerms, pf), true, "gauss"); break;
      case PKG_METHOD_WEIERSTRASS: {
        const GammaEval g = gamma_weierstrass_recip(pk, x, kProductTerms, pf);
        if (g.at_pole) {
          const PoleReport pr = pole_check(pk, x);
          *out = blank_result();
          out->pole_index = pr.pole_index;
          return fail(PKG_POLE, "pole at index " + std::to_string(pr.pole_index));
        }
        fill_gamma(out, g, true, "weierstrass");
        break;
      }
      default: return fail(PKG_INVALID_ARGUMENT, "method not available for gamma");
    }
    mark_near_pole(out, k, x);
    return PKG_OK;
  });
}

pkg_status pkg_gamma_reciprocal(double p, double k, double x, pkg_method method, pkg_form form, pkg_result* out) {
  if (!out) return fail(PKG_NULL_POINTER, "result pointer is null");
  if (!valid_form(form)) return fail(PKG_INVALID_ARGUMENT, "unknown form");
  return guarded(out, [&] {
    const PkParams pk(p, k);
    const ProductForm pf = product_form(form);
    switch (method) {
      case PKG_METHOD_DEFAULT:
      case PKG_METHOD_CLOSED: fill_gamma(out, gamma_closed(pk, x), true, "closed"); break;
      case PKG_METHOD_GAUSS: fill_gamma(out, gamma_gauss_recip(pk, x, kProductTerms, pf), false, "gauss"); break;
      case PKG_METHOD_WEIERSTRASS: {
        const GammaEval g = gamma_weierstrass_recip(pk, x, kProductTerms, pf);
        fill_gamma(out, g, false, "weierstrass");
        if (g.at_pole) out->pole_index = pole_check(pk, x).pole_index;
        break;
      }
      default: return fail(PKG_INVALID_ARGUMENT, "method not available for the reciprocal gamma");
    }
    mark_near_pole(out, k, x);
    return PKG_OK;
  });
}

pkg_status pkg_beta(double p, double k, double x, double y, pkg_method method, pkg_result* out) {
  if (!out) return fail(PKG_NULL_POINTER, "result pointer is null");
  return guarded(out, [&] {
    const BetaArgs args{x, y, PkParams(p, k)};
    EvalReal e;
    const char* name = "closed";
    switch (method) {
      case PKG_METHOD_DEFAULT:
      case PKG_METHOD_CLOSED: e = beta_closed(args); break;
      case PKG_METHOD_GAMMA_RATIO: e = beta_gamma_ratio(args), name = "gamma_ratio"; break;
      case PKG_METHOD_INTEGRAL: e = beta_integral(args, BetaForm::Unit), name = "integral"; break;
      case PKG_METHOD_INTEGRAL_SYMMETRIC:
        e = beta_integral(args, BetaForm::Symmetric), name = "integral_symmetric";
        break;
      case PKG_METHOD_INTEGRAL_SEMIAXIS: e = beta_integral(args, BetaForm::Semiaxis), name = "integral_semiaxis"; break;
      default: return fail(PKG_INVALID_ARGUMENT, "method not available for beta");
    }
    fill(out, e.value, e.abs_err, name);
    return PKG_OK;
  });
}

pkg_status pkg_psi(double p, double k, double x, pkg_method method, pkg_form form, pkg_result* out) {
  if (!out) return fail(PKG_NULL_POINTER, "result pointer is null");
  if (!valid_form(form)) return fail(PKG_INVALID_ARGUMENT, "unknown form");
  return guarded(out, [&] {
    const PkParams pk(p, k);
    const bool printed = form == PKG_FORM_PRINTED;
    switch (method) {
      case PKG_METHOD_DEFAULT:
      case PKG_METHOD_CLOSED:
        if (printed) {
          const PsiEval ref = psi(pk, x);
          const double v = psi_printed(pk, x);
          fill(out, v, ref.abs_err * k, "closed");
        } else {
          const PsiEval e = psi(pk, x);
          fill(out, e.value, e.abs_err, "closed");
        }
        break;
      case PKG_METHOD_SERIES: {
        const PsiEval e = psi_series(pk, x, PsiSeries::Harmonic, kPsiSeriesTerms, printed);
        fill(out, e.value, e.abs_err, "series");
        break;
      }
      case PKG_METHOD_SERIES_SHIFTED: {
        const PsiEval e = psi_series(pk, x, PsiSeries::Shifted, kPsiSeriesTerms, printed);
        fill(out, e.value, e.abs_err, "series_shifted");
        break;
      }
      default: return fail(PKG_INVALID_ARGUMENT, "method not available for psi");
    }
    return PKG_OK;
  });
}

pkg_status pkg_polygamma(double p, double k, double x, int r, pkg_form form, pkg_result* out) {
  if (!out) return fail(PKG_NULL_POINTER, "result pointer is null");
  if (!valid_form(form)) return fail(PKG_INVALID_ARGUMENT, "unknown form");
  return guarded(out, [&] {
    const PkParams pk(p, k);
    const PsiEval e = polygamma(pk, x, r);
    if (form == PKG_FORM_PRINTED)
      fill(out, polygamma_printed(pk, x, r), e.abs_err * k, "closed");
    else
      fill(out, e.value, e.abs_err, "closed");
    return PKG_OK;
  });
}

pkg_status pkg_k_zeta(double x, int r, double k, pkg_result* out) {
  if (!out) return fail(PKG_NULL_POINTER, "result pointer is null");
  return guarded(out, [&] {
    const EvalReal e = k_zeta(x, r, k);
    fill(out, e.value, e.abs_err, "series");
    return PKG_OK;
  });
}

pkg_status pkg_poch(double p, double k, double x, int n, pkg_method method, int q, pkg_result* out) {
  if (!out) return fail(PKG_NULL_POINTER, "result pointer is null");
  return guarded(out, [&] {
    const PochSpec spec{x, n, PkParams(p, k)};
    double v = 0.0;
    const char* name = "direct";
    switch (method) {
      case PKG_METHOD_DEFAULT:
      case PKG_METHOD_DIRECT: v = poch_direct(spec); break;
      case PKG_METHOD_SYMMETRIC: v = poch_symmetric(spec), name = "symmetric"; break;
      case PKG_METHOD_REDUCE: v = poch_reduce(spec), name = "reduce"; break;
      case PKG_METHOD_GAMMA_RATIO: v = poch_gamma_ratio(spec), name = "gamma_ratio"; break;
      case PKG_METHOD_SERIES: v = poch_generalized(spec, q), name = "generalized"; break;
      default: return fail(PKG_INVALID_ARGUMENT, "method not available for poch");
    }
    fill(out, v, 4.0 * DBL_EPSILON * (n + 1) * std::fabs(v), name);
    if (!std::isfinite(v)) out->overflow = 1;
    return PKG_OK;
  });
}

pkg_status pkg_pole_check(double p, double k, double x, int* is_pole, long long* pole_index) {
  if (!is_pole || !pole_index) return fail(PKG_NULL_POINTER, "output pointer is null");
  return guarded([&] {
    const PoleReport r = pole_check(PkParams(p, k), x);
    *is_pole = r.is_pole ? 1 : 0;
    *pole_index = r.pole_index;
    return PKG_OK;
  });
}

pkg_status pkg_binomial(double a, double p, double k, double x, pkg_result* out) {
  if (!out) return fail(PKG_NULL_POINTER, "result pointer is null");
  return guarded(out, [&] {
    const EvalReal e = pk_binomial(a, PkParams(p, k), x);
    fill(out, e.value, e.abs_err, "series");
    return PKG_OK;
  });
}

pkg_status pkg_hyper_create(pkg_hyper** out) {
  if (!out) return fail(PKG_NULL_POINTER, "handle pointer is null");
  *out = new (std::nothrow) pkg_hyper{};
  return *out ? PKG_OK : fail(PKG_INTERNAL, "out of memory");
}

pkg_status pkg_hyper_add_upper(pkg_hyper* h, double a, double p, double k) {
  if (!h) return fail(PKG_NULL_POINTER, "handle is null");
  return guarded([&] {
    h->upper.push_back({a, p, k});
    return PKG_OK;
  });
}

pkg_status pkg_hyper_add_lower(pkg_hyper* h, double b, double t, double s) {
  if (!h) return fail(PKG_NULL_POINTER, "handle is null");
  return guarded([&] {
    h->lower.push_back({b, t, s});
    return PKG_OK;
  });
}

pkg_status pkg_hyper_series(const pkg_hyper* h, double x, pkg_result* out) {
  if (!h || !out) return fail(PKG_NULL_POINTER, "handle or result pointer is null");
  return guarded(out, [&] {
    const EvalReal e = hyper_series(HyperParams(h->upper, h->lower), x);
    fill(out, e.value, e.abs_err, "series");
    return PKG_OK;
  });
}

pkg_status pkg_hyper_confluent(const pkg_hyper* h, double x, pkg_result* out) {
  if (!h || !out) return fail(PKG_NULL_POINTER, "handle or result pointer is null");
  return guarded(out, [&] {
    const EvalReal e = confluent_integral(HyperParams(h->upper, h->lower), x);
    fill(out, e.value, e.abs_err, "integral");
    return PKG_OK;
  });
}

pkg_status pkg_hyper_classify(const pkg_hyper* h, pkg_convergence* kind, double* radius) {
  if (!h || !kind || !radius) return fail(PKG_NULL_POINTER, "handle or output pointer is null");
  return guarded([&] {
    const ConvergenceClass c = classify(HyperParams(h->upper, h->lower));
    switch (c.kind) {
      case ConvergenceKind::AllFinite: *kind = PKG_CONVERGENCE_ALL_FINITE, *radius = INFINITY; break;
      case ConvergenceKind::FiniteRadius: *kind = PKG_CONVERGENCE_FINITE_RADIUS, *radius = c.radius; break;
      case ConvergenceKind::DivergentFormal: *kind = PKG_CONVERGENCE_DIVERGENT, *radius = 0.0; break;
    }
    return PKG_OK;
  });
}

void pkg_hyper_destroy(pkg_hyper* h) { delete h; }

pkg_status pkg_audit_create(pkg_audit** out) {
  if (!out) return fail(PKG_NULL_POINTER, "handle pointer is null");
  *out = new (std::nothrow) pkg_audit{};
  return *out ? PKG_OK : fail(PKG_INTERNAL, "out of memory");
}

pkg_status pkg_audit_set_suite(pkg_audit* h, const char* suite) {
  if (!h || !suite) return fail(PKG_NULL_POINTER, "handle or suite is null");
  const auto s = parse_suite(suite);
  if (!s) return fail(PKG_INVALID_ARGUMENT, std::string("unknown suite: ") + suite);
  h->options.suite = *s;
  return PKG_OK;
}

pkg_status pkg_audit_set_axis(pkg_audit* h, const char* axis, const double* values, size_t count) {
  if (!h || !axis || (!values && count > 0)) return fail(PKG_NULL_POINTER, "handle, axis or values is null");
  const std::string name = axis;
  AuditGrid& g = h->options.grid;
  std::vector<double>* target = name == "p"   ? &g.p
                                : name == "k" ? &g.k
                                : name == "x" ? &g.x
                                : name == "n" ? &g.n
                                : name == "m" ? &g.m
                                              : nullptr;
  if (!target) return fail(PKG_INVALID_ARGUMENT, "unknown axis: " + name);
  return guarded([&] {
    target->assign(values, values + count);
    return PKG_OK;
  });
}

pkg_status pkg_audit_set_tolerance(pkg_audit* h, const char* identity_id, double tol) {
  if (!h || !identity_id) return fail(PKG_NULL_POINTER, "handle or identity is null");
  return guarded([&] {
    h->options.tolerances.set(identity_id, tol);
    return PKG_OK;
  });
}

pkg_status pkg_audit_set_all_tolerances(pkg_audit* h, double tol) {
  if (!h) return fail(PKG_NULL_POINTER, "handle is null");
  return guarded([&] {
    h->options.tolerances.set_all(tol);
    return PKG_OK;
  });
}

pkg_status pkg_audit_set_workers(pkg_audit* h, unsigned workers) {
  if (!h) return fail(PKG_NULL_POINTER, "handle is null");
  h->options.workers = workers;
  return PKG_OK;
}

pkg_status pkg_audit_run(pkg_audit* h) {
  if (!h) return fail(PKG_NULL_POINTER, "handle is null");
  return guarded([&] {
    h->report.reset();
    h->json.clear();
    AuditReport r = run_audit(h->options);
    h->json = r.to_json();
    h->report = std::move(r);
    return PKG_OK;
  });
}

pkg_status pkg_audit_report_json(const pkg_audit* h, const char** json, size_t* length) {
  if (!h || !json) return fail(PKG_NULL_POINTER, "handle or output pointer is null");
  if (!h->report) return fail(PKG_INVALID_ARGUMENT, "audit has not been run");
  *json = h->json.c_str();
  if (length) *length = h->json.size();
  return PKG_OK;
}

pkg_status pkg_audit_write_report(const pkg_audit* h, const char* path) {
  if (!h || !path) return fail(PKG_NULL_POINTER, "handle or path is null");
  if (!h->report) return fail(PKG_INVALID_ARGUMENT, "audit has not been run");
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) return fail(PKG_IO, std::string("cannot open ") + path + " for writing");
  f.write(h->json.data(), static_cast<std::streamsize>(h->json.size()));
  f.close();
  if (!f) return fail(PKG_IO, std::string("write failed: ") + path);
  return PKG_OK;
}

pkg_status pkg_audit_summary_count(const pkg_audit* h, size_t* count) {
  if (!h || !count) return fail(PKG_NULL_POINTER, "handle or output pointer is null");
  if (!h->report) return fail(PKG_INVALID_ARGUMENT, "audit has not been run");
  *count = h->report->summary.size();
  return PKG_OK;
}

pkg_status pkg_audit_summary_at(const pkg_audit* h, size_t index, pkg_audit_summary* out) {
  if (!h || !out) return fail(PKG_NULL_POINTER, "handle or output pointer is null");
  if (!h->report) return fail(PKG_INVALID_ARGUMENT, "audit has not been run");
  if (index >= h->report->summary.size()) return fail(PKG_INDEX, "summary index out of range");
  const IdentitySummary& s = h->report->summary[index];
  out->identity_id = s.identity_id.c_str();
  out->count = s.evaluated;
  out->skipped = s.skipped;
  out->errors = s.errors;
  out->corrected_passed = s.corrected_passed;
  out->printed_passed = s.printed_passed;
  out->max_rel_err_corrected = s.max_rel_err_corrected;
  out->max_rel_err_printed = s.max_rel_err_printed;
  out->tolerance = s.tolerance;
  out->verdict = s.verdict.c_str();
  return PKG_OK;
}

pkg_status pkg_audit_all_corrected_pass(const pkg_audit* h, int* pass) {
  if (!h || !pass) return fail(PKG_NULL_POINTER, "handle or output pointer is null");
  if (!h->report) return fail(PKG_INVALID_ARGUMENT, "audit has not been run");
  *pass = h->report->all_corrected_pass() ? 1 : 0;
  return PKG_OK;
}

void pkg_audit_destroy(pkg_audit* h) { delete h; }

}  // extern "C"

#ifndef PKGAMMA_PKGAMMA_H
#define PKGAMMA_PKGAMMA_H

/* C interface to the p-k special function library.
 *
 * Every call returns a pkg_status. On failure the output struct is left
 * untouched except where noted, and pkg_last_error() returns a message for
 * the calling thread. Handles are opaque and must be released with the
 * matching destroy function; destroy accepts NULL. */

#include <stddef.h>

#if defined(_WIN32)
#  if defined(PKGAMMA_BUILDING)
#    define PKG_API __declspec(dllexport)
#  else
#    define PKG_API __declspec(dllimport)
#  endif
#else
#  define PKG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pkg_status {
  PKG_OK = 0,
  PKG_INVALID_ARGUMENT = 1,
  PKG_DOMAIN = 2,
  PKG_POLE = 3,
  PKG_NO_CONVERGENCE = 4,
  PKG_DIVERGENT = 5,
  PKG_MAX_TERMS = 6,
  PKG_LOWER_POLE = 7,
  PKG_UNSUPPORTED_SHAPE = 8,
  PKG_INDEX = 9,
  PKG_IO = 10,
  PKG_NULL_POINTER = 11,
  PKG_INTERNAL = 12
} pkg_status;

typedef enum pkg_method {
  PKG_METHOD_DEFAULT = 0,
  PKG_METHOD_CLOSED,
  PKG_METHOD_LIMIT,
  PKG_METHOD_INTEGRAL,
  PKG_METHOD_EULER_PRODUCT,
  PKG_METHOD_GAUSS,
  PKG_METHOD_WEIERSTRASS,
  PKG_METHOD_SERIES,
  PKG_METHOD_SERIES_SHIFTED,
  PKG_METHOD_GAMMA_RATIO,
  PKG_METHOD_INTEGRAL_SYMMETRIC,
  PKG_METHOD_INTEGRAL_SEMIAXIS,
  PKG_METHOD_DIRECT,
  PKG_METHOD_SYMMETRIC,
  PKG_METHOD_REDUCE
} pkg_method;

typedef enum pkg_form {
  PKG_FORM_CORRECTED = 0,
  PKG_FORM_PRINTED = 1
} pkg_form;

typedef struct pkg_result {
  double value;
  double abs_err;
  /* ln|value| for Gamma evaluations (kept when value overflows), else log of |value|. */
  double ln_abs;
  int sign;
  int overflow;
  int near_pole;
  /* Reciprocal routes only: x is a pole and value is exactly 0. */
  int at_pole;
  /* The integer n with x = -n k, set with PKG_POLE or at_pole. */
  long long pole_index;
  /* Static string naming the route actually used. */
  const char* method;
} pkg_result;

typedef enum pkg_convergence {
  PKG_CONVERGENCE_ALL_FINITE = 0,
  PKG_CONVERGENCE_FINITE_RADIUS = 1,
  PKG_CONVERGENCE_DIVERGENT = 2
} pkg_convergence;

typedef struct pkg_audit_summary {
  const char* identity_id; /* valid until the next run or destroy */
  long count;
  long skipped;
  long errors;
  long corrected_passed;
  long printed_passed;
  double max_rel_err_corrected;
  double max_rel_err_printed;
  double tolerance;
  const char* verdict;
} pkg_audit_summary;

typedef struct pkg_hyper pkg_hyper;
typedef struct pkg_audit pkg_audit;

PKG_API const char* pkg_version(void);
PKG_API const char* pkg_status_string(pkg_status status);
/* Message of the last failing call on this thread; empty string if none. */
PKG_API const char* pkg_last_error(void);

/* Gamma: methods CLOSED (default), LIMIT, INTEGRAL, EULER_PRODUCT, GAUSS,
 * WEIERSTRASS. `form` selects the printed prefactor for product routes. */
PKG_API pkg_status pkg_gamma(double p, double k, double x, pkg_method method, pkg_form form, pkg_result* out);

/* 1/G(x): methods CLOSED (default), GAUSS, WEIERSTRASS. At a pole the
 * WEIERSTRASS route succeeds with value 0 and at_pole set; the other
 * routes return PKG_POLE. */
PKG_API pkg_status pkg_gamma_reciprocal(double p, double k, double x, pkg_method method, pkg_form form,
                                        pkg_result* out);

/* Beta: methods CLOSED (default), GAMMA_RATIO, INTEGRAL, INTEGRAL_SYMMETRIC, INTEGRAL_SEMIAXIS. */
PKG_API pkg_status pkg_beta(double p, double k, double x, double y, pkg_method method, pkg_result* out);

/* Psi: methods CLOSED (default), SERIES, SERIES_SHIFTED. */
PKG_API pkg_status pkg_psi(double p, double k, double x, pkg_method method, pkg_form form, pkg_result* out);

/* r-th derivative of ln G, r >= 2. */
PKG_API pkg_status pkg_polygamma(double p, double k, double x, int r, pkg_form form, pkg_result* out);

PKG_API pkg_status pkg_k_zeta(double x, int r, double k, pkg_result* out);

/* Pochhammer: methods DIRECT (default), SYMMETRIC, REDUCE, GAMMA_RATIO, SERIES
 * (generalized route with `q` factors per step; q ignored otherwise). */
PKG_API pkg_status pkg_poch(double p, double k, double x, int n, pkg_method method, int q, pkg_result* out);

/* Writes 1 and the pole index when x = -n k within tolerance, else 0. */
PKG_API pkg_status pkg_pole_check(double p, double k, double x, int* is_pole, long long* pole_index);

/* (1 - x p)^(-a/k) by series. */
PKG_API pkg_status pkg_binomial(double a, double p, double k, double x, pkg_result* out);

PKG_API pkg_status pkg_hyper_create(pkg_hyper** out);
PKG_API pkg_status pkg_hyper_add_upper(pkg_hyper* h, double a, double p, double k);
PKG_API pkg_status pkg_hyper_add_lower(pkg_hyper* h, double b, double t, double s);
PKG_API pkg_status pkg_hyper_series(const pkg_hyper* h, double x, pkg_result* out);
/* Integral representation, one upper and one lower triple only. */
PKG_API pkg_status pkg_hyper_confluent(const pkg_hyper* h, double x, pkg_result* out);
PKG_API pkg_status pkg_hyper_classify(const pkg_hyper* h, pkg_convergence* kind, double* radius);
PKG_API void pkg_hyper_destroy(pkg_hyper* h);

PKG_API pkg_status pkg_audit_create(pkg_audit** out);
/* Suite name: pochhammer, gamma, beta, psi, hyper or all. */
PKG_API pkg_status pkg_audit_set_suite(pkg_audit* h, const char* suite);
/* Axis name: p, k, x, n or m. Replaces the axis values. */
PKG_API pkg_status pkg_audit_set_axis(pkg_audit* h, const char* axis, const double* values, size_t count);
PKG_API pkg_status pkg_audit_set_tolerance(pkg_audit* h, const char* identity_id, double tol);
PKG_API pkg_status pkg_audit_set_all_tolerances(pkg_audit* h, double tol);
/* 0 uses the hardware concurrency. */
PKG_API pkg_status pkg_audit_set_workers(pkg_audit* h, unsigned workers);
PKG_API pkg_status pkg_audit_run(pkg_audit* h);
/* Canonical JSON of the last run; the buffer lives until the next run or destroy. */
PKG_API pkg_status pkg_audit_report_json(const pkg_audit* h, const char** json, size_t* length);
PKG_API pkg_status pkg_audit_write_report(const pkg_audit* h, const char* path);
PKG_API pkg_status pkg_audit_summary_count(const pkg_audit* h, size_t* count);
PKG_API pkg_status pkg_audit_summary_at(const pkg_audit* h, size_t index, pkg_audit_summary* out);
PKG_API pkg_status pkg_audit_all_corrected_pass(const pkg_audit* h, int* pass);
PKG_API void pkg_audit_destroy(pkg_audit* h);

#ifdef __cplusplus
}
#endif

#endif

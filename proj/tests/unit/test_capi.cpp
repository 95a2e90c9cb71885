#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "doctest.h"
#include "pkgamma/pkgamma.h"

namespace {

constexpr double kPi = 3.141592653589793;

pkg_result eval_gamma(double p, double k, double x, pkg_method m = PKG_METHOD_CLOSED) {
  pkg_result r{};
  REQUIRE(pkg_gamma(p, k, x, m, PKG_FORM_CORRECTED, &r) == PKG_OK);
  return r;
}

}  // namespace

TEST_CASE("gamma through the C interface") {
  CHECK(eval_gamma(1, 1, 5).value == 24.0);
  CHECK(eval_gamma(2, 3, 3).value == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  const pkg_result r = eval_gamma(1, 2, -1);
  CHECK(r.value == doctest::Approx(-std::sqrt(kPi)).epsilon(1e-14));
  CHECK(r.sign == -1);
  CHECK(std::string(r.method) == "closed");
  for (pkg_method m : {PKG_METHOD_LIMIT, PKG_METHOD_INTEGRAL, PKG_METHOD_EULER_PRODUCT, PKG_METHOD_GAUSS,
                       PKG_METHOD_WEIERSTRASS}) {
    CAPTURE(m);
    const pkg_result e = eval_gamma(2, 3, 2.5, m);
    CHECK(std::fabs(e.value - eval_gamma(2, 3, 2.5).value) <= 1e-6 * e.value);
    CHECK(e.abs_err >= 0.0);
  }
}

TEST_CASE("near-pole flag") {
  CHECK(eval_gamma(1, 1, -2 + 1e-7).near_pole == 1);
  CHECK(eval_gamma(1, 1, -2.5).near_pole == 0);
  CHECK(eval_gamma(1, 1, 2).near_pole == 0);
}

TEST_CASE("overflow keeps the logarithm") {
  const pkg_result r = eval_gamma(1, 1, 200);
  CHECK(r.overflow == 1);
  CHECK(std::isinf(r.value));
  CHECK(r.ln_abs == doctest::Approx(std::lgamma(200.0)).epsilon(1e-14));
}

TEST_CASE("pole reporting") {
  pkg_result r{};
  CHECK(pkg_gamma(1, 1, -2, PKG_METHOD_CLOSED, PKG_FORM_CORRECTED, &r) == PKG_POLE);
  CHECK(r.pole_index == 2);
  CHECK(std::string(pkg_last_error()) == "pole at index 2");
  CHECK(pkg_gamma(1, 2, -4, PKG_METHOD_WEIERSTRASS, PKG_FORM_CORRECTED, &r) == PKG_POLE);
  CHECK(r.pole_index == 2);

  CHECK(pkg_gamma_reciprocal(1, 2, -4, PKG_METHOD_WEIERSTRASS, PKG_FORM_CORRECTED, &r) == PKG_OK);
  CHECK(r.at_pole == 1);
  CHECK(r.value == 0.0);
  CHECK(r.pole_index == 2);
  CHECK(pkg_gamma_reciprocal(1, 2, -4, PKG_METHOD_CLOSED, PKG_FORM_CORRECTED, &r) == PKG_POLE);

  int is_pole = -1;
  long long index = -1;
  CHECK(pkg_pole_check(2, 0.5, -1.5, &is_pole, &index) == PKG_OK);
  CHECK(is_pole == 1);
  CHECK(index == 3);
  CHECK(pkg_pole_check(2, 0.5, -1.2, &is_pole, &index) == PKG_OK);
  CHECK(is_pole == 0);
}

TEST_CASE("argument errors map to status codes") {
  pkg_result r{};
  CHECK(pkg_gamma(-1, 1, 2, PKG_METHOD_CLOSED, PKG_FORM_CORRECTED, &r) == PKG_INVALID_ARGUMENT);
  CHECK(std::strlen(pkg_last_error()) > 0);
  CHECK(pkg_gamma(1, 1, 2, PKG_METHOD_DIRECT, PKG_FORM_CORRECTED, &r) == PKG_INVALID_ARGUMENT);
  CHECK(pkg_gamma(1, 1, 2, PKG_METHOD_CLOSED, static_cast<pkg_form>(7), &r) == PKG_INVALID_ARGUMENT);
  CHECK(pkg_gamma(1, 1, -0.5, PKG_METHOD_INTEGRAL, PKG_FORM_CORRECTED, &r) == PKG_DOMAIN);
  CHECK(pkg_gamma(1, 1, 2, PKG_METHOD_CLOSED, PKG_FORM_CORRECTED, nullptr) == PKG_NULL_POINTER);
  CHECK(pkg_beta(1, 1, -1, 1, PKG_METHOD_CLOSED, &r) != PKG_OK);
  CHECK(std::string(pkg_status_string(PKG_POLE)) == "pole");
  CHECK(std::string(pkg_version()) == "0.1.0");
}

TEST_CASE("last error is per thread") {
  pkg_result r{};
  REQUIRE(pkg_gamma(1, 1, -3, PKG_METHOD_CLOSED, PKG_FORM_CORRECTED, &r) == PKG_POLE);
  std::string other;
  std::thread t([&] {
    pkg_result rr{};
    pkg_gamma(-1, 1, 1, PKG_METHOD_CLOSED, PKG_FORM_CORRECTED, &rr);
    other = pkg_last_error();
  });
  t.join();
  CHECK(std::string(pkg_last_error()) == "pole at index 3");
  CHECK(other != "pole at index 3");
}

TEST_CASE("beta, psi, polygamma, k-zeta, poch") {
  pkg_result r{};
  REQUIRE(pkg_beta(1, 2, 2, 2, PKG_METHOD_CLOSED, &r) == PKG_OK);
  CHECK(r.value == doctest::Approx(0.5).epsilon(1e-14));
  for (pkg_method m : {PKG_METHOD_GAMMA_RATIO, PKG_METHOD_INTEGRAL, PKG_METHOD_INTEGRAL_SYMMETRIC,
                       PKG_METHOD_INTEGRAL_SEMIAXIS}) {
    REQUIRE(pkg_beta(3, 2, 2, 2, m, &r) == PKG_OK);
    CHECK(r.value == doctest::Approx(0.5).epsilon(1e-9));
  }

  REQUIRE(pkg_psi(1, 1, 1, PKG_METHOD_CLOSED, PKG_FORM_CORRECTED, &r) == PKG_OK);
  CHECK(r.value == doctest::Approx(-0.5772156649015329).epsilon(1e-14));
  REQUIRE(pkg_psi(1, 2, 2, PKG_METHOD_CLOSED, PKG_FORM_CORRECTED, &r) == PKG_OK);
  const double corrected = r.value;
  REQUIRE(pkg_psi(1, 2, 2, PKG_METHOD_CLOSED, PKG_FORM_PRINTED, &r) == PKG_OK);
  CHECK(r.value == doctest::Approx(2 * corrected).epsilon(1e-14));
  REQUIRE(pkg_psi(2, 3, 1.5, PKG_METHOD_SERIES, PKG_FORM_CORRECTED, &r) == PKG_OK);
  const double series = r.value;
  REQUIRE(pkg_psi(2, 3, 1.5, PKG_METHOD_CLOSED, PKG_FORM_CORRECTED, &r) == PKG_OK);
  CHECK(series == doctest::Approx(r.value).epsilon(1e-6));
  REQUIRE(pkg_psi(2, 3, 1.5, PKG_METHOD_SERIES_SHIFTED, PKG_FORM_CORRECTED, &r) == PKG_OK);
  CHECK(r.value == doctest::Approx(series).epsilon(1e-6));

  REQUIRE(pkg_polygamma(1, 1, 1, 2, PKG_FORM_CORRECTED, &r) == PKG_OK);
  CHECK(r.value == doctest::Approx(kPi * kPi / 6).epsilon(1e-13));
  REQUIRE(pkg_polygamma(1, 2, 2, 2, PKG_FORM_PRINTED, &r) == PKG_OK);
  CHECK(r.value == doctest::Approx(kPi * kPi / 12).epsilon(1e-13));
  CHECK(pkg_polygamma(1, 1, 1, 1, PKG_FORM_CORRECTED, &r) != PKG_OK);

  REQUIRE(pkg_k_zeta(1, 2, 1, &r) == PKG_OK);
  CHECK(r.value == doctest::Approx(kPi * kPi / 6).epsilon(1e-13));

  for (pkg_method m : {PKG_METHOD_DIRECT, PKG_METHOD_SYMMETRIC, PKG_METHOD_REDUCE, PKG_METHOD_GAMMA_RATIO}) {
    REQUIRE(pkg_poch(2, 1, 2, 2, m, 0, &r) == PKG_OK);
    CHECK(r.value == doctest::Approx(24.0).epsilon(1e-13));
  }
  REQUIRE(pkg_poch(2, 1, 2, 2, PKG_METHOD_SERIES, 2, &r) == PKG_OK);
  CHECK(std::string(r.method) == "generalized");
  CHECK(pkg_poch(2, 1, 2, -1, PKG_METHOD_DIRECT, 0, &r) != PKG_OK);
}

TEST_CASE("hypergeometric handle") {
  pkg_hyper* h = nullptr;
  REQUIRE(pkg_hyper_create(&h) == PKG_OK);
  REQUIRE(pkg_hyper_add_upper(h, 2, 1, 2) == PKG_OK);
  REQUIRE(pkg_hyper_add_lower(h, 4, 1, 2) == PKG_OK);
  pkg_result r{};
  REQUIRE(pkg_hyper_series(h, 1, &r) == PKG_OK);
  CHECK(r.value == doctest::Approx(std::exp(1.0) - 1).epsilon(1e-14));
  REQUIRE(pkg_hyper_confluent(h, 1, &r) == PKG_OK);
  CHECK(r.value == doctest::Approx(std::exp(1.0) - 1).epsilon(1e-8));
  pkg_convergence kind{};
  double radius = -1;
  REQUIRE(pkg_hyper_classify(h, &kind, &radius) == PKG_OK);
  CHECK(kind == PKG_CONVERGENCE_ALL_FINITE);
  pkg_hyper_destroy(h);

  REQUIRE(pkg_hyper_create(&h) == PKG_OK);
  pkg_hyper_add_upper(h, 1, 2, 1);
  pkg_hyper_add_upper(h, 1, 1, 1);
  pkg_hyper_add_lower(h, 2, 1, 1);
  REQUIRE(pkg_hyper_classify(h, &kind, &radius) == PKG_OK);
  CHECK(kind == PKG_CONVERGENCE_FINITE_RADIUS);
  CHECK(radius == doctest::Approx(0.5));
  CHECK(pkg_hyper_series(h, 0.6, &r) == PKG_DIVERGENT);
  CHECK(pkg_hyper_confluent(h, 0.1, &r) == PKG_UNSUPPORTED_SHAPE);
  pkg_hyper_destroy(h);

  REQUIRE(pkg_hyper_create(&h) == PKG_OK);
  pkg_hyper_add_lower(h, -2, 1, 1);
  CHECK(pkg_hyper_series(h, 0.1, &r) == PKG_LOWER_POLE);
  pkg_hyper_destroy(h);
  pkg_hyper_destroy(nullptr);

  REQUIRE(pkg_binomial(1, 2, 1, 0.25, &r) == PKG_OK);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("audit handle") {
  pkg_audit* a = nullptr;
  REQUIRE(pkg_audit_create(&a) == PKG_OK);
  CHECK(pkg_audit_set_suite(a, "delta") == PKG_INVALID_ARGUMENT);
  REQUIRE(pkg_audit_set_suite(a, "gamma") == PKG_OK);
  const double p[] = {1.0}, k[] = {2.0}, x[] = {1.0};
  REQUIRE(pkg_audit_set_axis(a, "p", p, 1) == PKG_OK);
  REQUIRE(pkg_audit_set_axis(a, "k", k, 1) == PKG_OK);
  REQUIRE(pkg_audit_set_axis(a, "x", x, 1) == PKG_OK);
  CHECK(pkg_audit_set_axis(a, "z", x, 1) == PKG_INVALID_ARGUMENT);
  CHECK(pkg_audit_set_tolerance(a, "9.99", 1e-3) == PKG_INVALID_ARGUMENT);

  const char* json = nullptr;
  CHECK(pkg_audit_report_json(a, &json, nullptr) == PKG_INVALID_ARGUMENT);
  REQUIRE(pkg_audit_run(a) == PKG_OK);
  std::size_t len = 0;
  REQUIRE(pkg_audit_report_json(a, &json, &len) == PKG_OK);
  CHECK(std::strlen(json) == len);
  CHECK(std::string(json).rfind("{\n  \"suite\": \"gamma\"", 0) == 0);

  std::size_t count = 0;
  REQUIRE(pkg_audit_summary_count(a, &count) == PKG_OK);
  bool found = false;
  for (std::size_t i = 0; i < count; ++i) {
    pkg_audit_summary s{};
    REQUIRE(pkg_audit_summary_at(a, i, &s) == PKG_OK);
    if (std::string(s.identity_id) != "2.30") continue;
    found = true;
    CHECK(s.count == 1);
    CHECK(s.printed_passed == 0);
    CHECK(s.corrected_passed == 1);
    CHECK(s.max_rel_err_printed == doctest::Approx(2.0));
    CHECK(std::string(s.verdict) == "printed-form-discrepancy");
  }
  CHECK(found);
  pkg_audit_summary s{};
  CHECK(pkg_audit_summary_at(a, count, &s) == PKG_INDEX);
  int pass = -1;
  REQUIRE(pkg_audit_all_corrected_pass(a, &pass) == PKG_OK);
  CHECK(pass == 1);

  const std::string path = "capi_report_test.json";
  REQUIRE(pkg_audit_write_report(a, path.c_str()) == PKG_OK);
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == std::string(json, len));
  std::remove(path.c_str());
  CHECK(pkg_audit_write_report(a, "/nonexistent-dir/report.json") == PKG_IO);

  // a zero tolerance everywhere makes corrected forms fail
  REQUIRE(pkg_audit_set_all_tolerances(a, 0.0) == PKG_OK);
  REQUIRE(pkg_audit_run(a) == PKG_OK);
  REQUIRE(pkg_audit_all_corrected_pass(a, &pass) == PKG_OK);
  CHECK(pass == 0);

  CHECK(pkg_audit_set_axis(a, "x", nullptr, 0) == PKG_OK);
  CHECK(pkg_audit_run(a) == PKG_INVALID_ARGUMENT);
  pkg_audit_destroy(a);
  pkg_audit_destroy(nullptr);
}

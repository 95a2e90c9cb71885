// Command-line front end over the C interface: eval, audit, table.

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pkgamma/pkgamma.h"

namespace {

using ojson = nlohmann::ordered_json;

enum Exit { kOk = 0, kUsage = 1, kDomain = 2, kIo = 3, kAuditFailed = 4 };

constexpr long kMaxTableRows = 1000000;

struct UsageError {
  std::string message;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

double parse_real(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  if (t.empty()) throw UsageError{what + ": empty value"};
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size() || errno == ERANGE || !std::isfinite(v))
    throw UsageError{what + ": not a finite real: '" + text + "'"};
  return v;
}

int parse_int(const std::string& text, const std::string& what) {
  const double v = parse_real(text, what);
  if (v != std::nearbyint(v) || std::fabs(v) > 1e9) throw UsageError{what + ": not an integer: '" + text + "'"};
  return static_cast<int>(v);
}

struct Triple {
  double a, b, c;
};

// "a:p:k,a:p:k" -> triples
std::vector<Triple> parse_triples(const std::string& text, const std::string& what) {
  std::vector<Triple> out;
  if (trim(text).empty()) return out;
  for (const auto& item : split(text, ',')) {
    const auto parts = split(item, ':');
    if (parts.size() != 3) throw UsageError{what + ": expected value:scale:step triples, got '" + item + "'"};
    out.push_back({parse_real(parts[0], what), parse_real(parts[1], what), parse_real(parts[2], what)});
  }
  return out;
}

struct EvalInputs {
  std::string function;
  std::optional<std::string> x;
  std::optional<std::string> y;
  std::optional<std::string> n;
  std::optional<std::string> r;
  std::optional<std::string> q;
  std::optional<std::string> a;
  std::optional<std::string> b;
  std::string p_text = "1";
  std::string k_text = "1";
  std::string method;
  std::string form = "corrected";
  std::string format = "text";
};

const std::map<std::string, std::map<std::string, pkg_method>>& methods_by_function() {
  static const std::map<std::string, std::map<std::string, pkg_method>> table = {
      {"gamma",
       {{"closed", PKG_METHOD_CLOSED},
        {"limit", PKG_METHOD_LIMIT},
        {"integral", PKG_METHOD_INTEGRAL},
        {"euler", PKG_METHOD_EULER_PRODUCT},
        {"gauss", PKG_METHOD_GAUSS},
        {"weierstrass", PKG_METHOD_WEIERSTRASS}}},
      {"beta",
       {{"closed", PKG_METHOD_CLOSED},
        {"gamma_ratio", PKG_METHOD_GAMMA_RATIO},
        {"integral", PKG_METHOD_INTEGRAL},
        {"integral_symmetric", PKG_METHOD_INTEGRAL_SYMMETRIC},
        {"integral_semiaxis", PKG_METHOD_INTEGRAL_SEMIAXIS}}},
      {"psi", {{"closed", PKG_METHOD_CLOSED}, {"series", PKG_METHOD_SERIES}, {"series_shifted", PKG_METHOD_SERIES_SHIFTED}}},
      {"poch",
       {{"direct", PKG_METHOD_DIRECT},
        {"symmetric", PKG_METHOD_SYMMETRIC},
        {"reduce", PKG_METHOD_REDUCE},
        {"gamma_ratio", PKG_METHOD_GAMMA_RATIO},
        {"generalized", PKG_METHOD_SERIES}}},
      {"polygamma", {{"closed", PKG_METHOD_CLOSED}}},
      {"kzeta", {{"series", PKG_METHOD_SERIES}}},
      {"hyper", {{"series", PKG_METHOD_SERIES}, {"integral", PKG_METHOD_INTEGRAL}}},
  };
  return table;
}

std::string function_names() {
  std::string s;
  for (const auto& [name, _] : methods_by_function()) s += (s.empty() ? "" : ", ") + name;
  return s;
}

pkg_method resolve_method(const std::string& function, const std::string& method) {
  const auto& table = methods_by_function();
  const auto f = table.find(function);
  if (f == table.end()) throw UsageError{"unknown function '" + function + "' (expected one of: " + function_names() + ")"};
  if (method.empty()) return PKG_METHOD_DEFAULT;
  const auto m = f->second.find(method);
  if (m == f->second.end()) {
    std::string names;
    for (const auto& [n, _] : f->second) names += (names.empty() ? "" : ", ") + n;
    throw UsageError{"method '" + method + "' not available for " + function + " (expected one of: " + names + ")"};
  }
  return m->second;
}

pkg_form resolve_form(const std::string& form) {
  if (form == "corrected") return PKG_FORM_CORRECTED;
  if (form == "printed") return PKG_FORM_PRINTED;
  throw UsageError{"form must be 'corrected' or 'printed'"};
}

const std::string& require(const std::optional<std::string>& v, const char* flag, const std::string& function) {
  if (!v) throw UsageError{function + " requires --" + std::string(flag)};
  return *v;
}

class HyperHandle {
 public:
  HyperHandle() {
    if (pkg_hyper_create(&h_) != PKG_OK) throw UsageError{"cannot allocate hypergeometric handle"};
  }
  ~HyperHandle() { pkg_hyper_destroy(h_); }
  HyperHandle(const HyperHandle&) = delete;
  HyperHandle& operator=(const HyperHandle&) = delete;
  pkg_hyper* get() const { return h_; }

 private:
  pkg_hyper* h_ = nullptr;
};

// Parsed parameters of one evaluation, except the point x.
struct Evaluator {
  std::string function;
  pkg_method method = PKG_METHOD_DEFAULT;
  pkg_form form = PKG_FORM_CORRECTED;
  double p = 1.0, k = 1.0, y = 0.0;
  int n = 0, r = 0, q = 1;
  std::vector<Triple> upper, lower;

  pkg_status operator()(double x, pkg_result* out) const {
    if (function == "gamma") return pkg_gamma(p, k, x, method, form, out);
    if (function == "beta") return pkg_beta(p, k, x, y, method, out);
    if (function == "psi") return pkg_psi(p, k, x, method, form, out);
    if (function == "poch") return pkg_poch(p, k, x, n, method, q, out);
    if (function == "polygamma") return pkg_polygamma(p, k, x, r, form, out);
    if (function == "kzeta") return pkg_k_zeta(x, r, k, out);
    HyperHandle h;
    for (const auto& t : upper)
      if (pkg_status s = pkg_hyper_add_upper(h.get(), t.a, t.b, t.c); s != PKG_OK) return s;
    for (const auto& t : lower)
      if (pkg_status s = pkg_hyper_add_lower(h.get(), t.a, t.b, t.c); s != PKG_OK) return s;
    return method == PKG_METHOD_INTEGRAL ? pkg_hyper_confluent(h.get(), x, out) : pkg_hyper_series(h.get(), x, out);
  }
};

Evaluator build_evaluator(const EvalInputs& in, ojson& inputs) {
  Evaluator ev;
  ev.function = in.function;
  ev.method = resolve_method(in.function, in.method);
  ev.form = resolve_form(in.form);
  ev.p = parse_real(in.p_text, "--p");
  ev.k = parse_real(in.k_text, "--k");
  inputs["function"] = in.function;
  if (in.function != "kzeta") inputs["p"] = ev.p;
  inputs["k"] = ev.k;
  if (in.function == "beta") {
    ev.y = parse_real(require(in.y, "y", in.function), "--y");
    inputs["y"] = ev.y;
  }
  if (in.function == "poch") {
    ev.n = parse_int(require(in.n, "n", in.function), "--n");
    inputs["n"] = ev.n;
    if (ev.method == PKG_METHOD_SERIES) {
      ev.q = parse_int(require(in.q, "q", in.function), "--q");
      inputs["q"] = ev.q;
    }
  }
  if (in.function == "polygamma" || in.function == "kzeta") {
    ev.r = parse_int(require(in.r, "r", in.function), "--r");
    inputs["r"] = ev.r;
  }
  if (in.function == "hyper") {
    ev.upper = parse_triples(in.a.value_or(""), "--a");
    ev.lower = parse_triples(in.b.value_or(""), "--b");
    ojson up = ojson::array(), lo = ojson::array();
    for (const auto& t : ev.upper) up.push_back({t.a, t.b, t.c});
    for (const auto& t : ev.lower) lo.push_back({t.a, t.b, t.c});
    inputs["a"] = up;
    inputs["b"] = lo;
  }
  inputs["form"] = in.form;
  return ev;
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ojson error_json(pkg_status s) {
  ojson e;
  e["error"] = pkg_status_string(s);
  e["reason"] = pkg_last_error();
  return e;
}

int run_eval(const EvalInputs& in) {
  if (in.format != "text" && in.format != "json") throw UsageError{"--format must be text or json for eval"};
  ojson inputs;
  const Evaluator ev = build_evaluator(in, inputs);
  const double x = parse_real(require(in.x, "x", in.function), "--x");
  inputs["x"] = x;
  pkg_result res{};
  const pkg_status s = ev(x, &res);
  const bool json = in.format == "json";
  if (s != PKG_OK) {
    if (json) {
      ojson e = error_json(s);
      e["inputs"] = inputs;
      std::printf("%s\n", e.dump(2).c_str());
    } else {
      std::fprintf(stderr, "error: %s: %s\n", pkg_status_string(s), pkg_last_error());
    }
    return kDomain;
  }
  if (json) {
    ojson o;
    if (res.overflow) {
      o["value"] = nullptr;
      o["ln_abs"] = res.ln_abs;
      o["sign"] = res.sign;
    } else {
      o["value"] = res.value;
    }
    o["abs_err"] = std::isfinite(res.abs_err) ? ojson(res.abs_err) : ojson(nullptr);
    o["method"] = res.method;
    if (res.at_pole) o["at_pole"] = true;
    o["inputs"] = inputs;
    std::printf("%s\n", o.dump(2).c_str());
  } else {
    if (res.overflow)
      std::printf("value = %s exp(%s) (overflow)\n", res.sign < 0 ? "-" : "+", fmt17(res.ln_abs).c_str());
    else
      std::printf("value = %s\n", fmt17(res.value).c_str());
    std::printf("abs_err = %.3g\nmethod = %s\n", res.abs_err, res.method);
  }
  return kOk;
}

struct Sweep {
  double start, stop, step;
  long rows;
};

Sweep parse_sweep(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw UsageError{"sweep must be start:stop:step, got '" + text + "'"};
  Sweep s{parse_real(parts[0], "sweep start"), parse_real(parts[1], "sweep stop"), parse_real(parts[2], "sweep step"), 0};
  if (!(s.step > 0)) throw UsageError{"sweep step must be positive"};
  if (!(s.stop >= s.start)) throw UsageError{"sweep stop must not be below start"};
  const double count = std::floor((s.stop - s.start) / s.step * (1.0 + 1e-12) + 1e-9) + 1.0;
  if (count > static_cast<double>(kMaxTableRows))
    throw UsageError{"sweep has more than " + std::to_string(kMaxTableRows) + " rows"};
  s.rows = static_cast<long>(count);
  return s;
}

int run_table(const EvalInputs& in) {
  if (in.format != "csv" && in.format != "json") throw UsageError{"--format must be csv or json for table"};
  ojson inputs;
  const Evaluator ev = build_evaluator(in, inputs);
  const Sweep sw = parse_sweep(require(in.x, "x", in.function));
  const bool json = in.format == "json";
  ojson rows = ojson::array();
  if (!json) std::printf("x,value,abs_err\n");
  for (long i = 0; i < sw.rows; ++i) {
    const double x = sw.start + static_cast<double>(i) * sw.step;
    pkg_result res{};
    const pkg_status s = ev(x, &res);
    const bool ok = s == PKG_OK && !res.overflow;
    if (json) {
      ojson row;
      row["x"] = x;
      row["value"] = ok ? ojson(res.value) : ojson(nullptr);
      row["abs_err"] = ok && std::isfinite(res.abs_err) ? ojson(res.abs_err) : ojson(nullptr);
      if (s != PKG_OK) row["error"] = pkg_last_error();
      else if (res.overflow) row["error"] = "overflow";
      rows.push_back(std::move(row));
    } else {
      std::printf("%s,%s,%s\n", fmt17(x).c_str(), ok ? fmt17(res.value).c_str() : "nan",
                  ok ? fmt17(res.abs_err).c_str() : "nan");
    }
  }
  if (json) {
    ojson o;
    o["inputs"] = inputs;
    o["rows"] = rows;
    std::printf("%s\n", o.dump(2).c_str());
  }
  return kOk;
}

struct AuditInputs {
  std::string suite;
  std::string grid = "default";
  std::optional<std::string> out;
  std::vector<std::string> tol;
  std::string format = "text";
  unsigned workers = 0;
};

class AuditHandle {
 public:
  AuditHandle() {
    if (pkg_audit_create(&h_) != PKG_OK) throw UsageError{"cannot allocate audit handle"};
  }
  ~AuditHandle() { pkg_audit_destroy(h_); }
  AuditHandle(const AuditHandle&) = delete;
  AuditHandle& operator=(const AuditHandle&) = delete;
  pkg_audit* get() const { return h_; }

 private:
  pkg_audit* h_ = nullptr;
};

void check_usage(pkg_status s, const std::string& what) {
  if (s != PKG_OK) throw UsageError{what + ": " + pkg_last_error()};
}

// "default" or "p=0.5,1;k=1,2;x=0.3" (omitted axes keep their defaults)
void apply_grid(pkg_audit* h, const std::string& spec) {
  if (trim(spec) == "default") return;
  if (trim(spec).empty()) throw UsageError{"grid is empty"};
  for (const auto& part : split(spec, ';')) {
    if (trim(part).empty()) continue;
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw UsageError{"grid axis must be name=v1,v2,...: '" + part + "'"};
    const std::string name = trim(part.substr(0, eq));
    const std::string list = part.substr(eq + 1);
    if (trim(list).empty()) throw UsageError{"grid axis '" + name + "' is empty"};
    std::vector<double> values;
    for (const auto& v : split(list, ',')) values.push_back(parse_real(v, "grid axis " + name));
    check_usage(pkg_audit_set_axis(h, name.c_str(), values.data(), values.size()), "grid");
  }
}

void apply_tolerances(pkg_audit* h, const std::vector<std::string>& specs) {
  for (const auto& spec : specs) {
    for (const auto& item : split(spec, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) {
        check_usage(pkg_audit_set_all_tolerances(h, parse_real(item, "--tol")), "--tol");
      } else {
        const std::string id = trim(item.substr(0, eq));
        check_usage(pkg_audit_set_tolerance(h, id.c_str(), parse_real(item.substr(eq + 1), "--tol " + id)), "--tol");
      }
    }
  }
}

std::string rate(long num, long den) {
  if (den == 0) return "-";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f%%", 100.0 * static_cast<double>(num) / static_cast<double>(den));
  return buf;
}

int run_audit_cmd(const AuditInputs& in) {
  if (in.format != "text" && in.format != "json") throw UsageError{"--format must be text or json for audit"};
  AuditHandle h;
  check_usage(pkg_audit_set_suite(h.get(), in.suite.c_str()), "suite");
  apply_grid(h.get(), in.grid);
  apply_tolerances(h.get(), in.tol);
  pkg_audit_set_workers(h.get(), in.workers);
  if (pkg_status s = pkg_audit_run(h.get()); s != PKG_OK) {
    if (s == PKG_INVALID_ARGUMENT) throw UsageError{pkg_last_error()};
    std::fprintf(stderr, "error: audit failed: %s\n", pkg_last_error());
    return kDomain;
  }
  if (in.out) {
    if (pkg_audit_write_report(h.get(), in.out->c_str()) != PKG_OK) {
      std::fprintf(stderr, "error: %s\n", pkg_last_error());
      return kIo;
    }
  }
  int pass = 0;
  pkg_audit_all_corrected_pass(h.get(), &pass);
  if (in.format == "json") {
    const char* text = nullptr;
    pkg_audit_report_json(h.get(), &text, nullptr);
    std::fputs(text, stdout);
  } else {
    std::size_t count = 0;
    pkg_audit_summary_count(h.get(), &count);
    std::printf("%-16s %7s %7s %10s %10s %12s %12s  %s\n", "identity", "count", "skipped", "corrected", "printed",
                "max_err", "max_err_prt", "verdict");
    for (std::size_t i = 0; i < count; ++i) {
      pkg_audit_summary s{};
      pkg_audit_summary_at(h.get(), i, &s);
      std::printf("%-16s %7ld %7ld %10s %10s %12.3e %12.3e  %s\n", s.identity_id, s.count, s.skipped,
                  rate(s.corrected_passed, s.count).c_str(), rate(s.printed_passed, s.count).c_str(),
                  s.max_rel_err_corrected, s.max_rel_err_printed, s.verdict);
    }
    std::printf("corrected forms: %s\n", pass ? "all pass" : "FAILURES");
  }
  return pass ? kOk : kAuditFailed;
}

void add_eval_flags(CLI::App* cmd, EvalInputs& in, bool table) {
  cmd->add_option("function", in.function, "gamma, beta, psi, poch, polygamma, kzeta or hyper")->required();
  cmd->add_option("--p", in.p_text, "deformation parameter p (default 1)");
  cmd->add_option("--k", in.k_text, "step k (default 1)");
  cmd->add_option("--x", in.x, table ? "sweep range start:stop:step" : "argument x");
  cmd->add_option("--y", in.y, "second beta argument");
  cmd->add_option("--n", in.n, "Pochhammer length");
  cmd->add_option("--r", in.r, "derivative order or zeta exponent");
  cmd->add_option("--q", in.q, "factors per step of the generalized Pochhammer route");
  cmd->add_option("--a", in.a, "hypergeometric upper triples a:p:k,...");
  cmd->add_option("--b", in.b, "hypergeometric lower triples b:t:s,...");
  cmd->add_option("--method", in.method, "evaluation route");
  cmd->add_option("--form", in.form, "corrected or printed");
  cmd->add_option("--format", in.format, table ? "csv or json" : "text or json");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-k Gamma family evaluator and identity auditor"};
  app.require_subcommand(1);

  EvalInputs eval_in;
  CLI::App* eval = app.add_subcommand("eval", "evaluate one function at one point");
  add_eval_flags(eval, eval_in, false);

  EvalInputs table_in;
  table_in.format = "csv";
  CLI::App* table = app.add_subcommand("table", "evaluate a function over a sweep of x");
  add_eval_flags(table, table_in, true);

  AuditInputs audit_in;
  CLI::App* audit = app.add_subcommand("audit", "check identities over a parameter grid");
  audit->add_option("suite", audit_in.suite, "pochhammer, gamma, beta, psi, hyper or all")->required();
  audit->add_option("--grid", audit_in.grid, "'default' or 'p=..;k=..;x=..;n=..;m=..'");
  audit->add_option("--out", audit_in.out, "write the JSON report to this path");
  audit->add_option("--tol", audit_in.tol, "tolerance for all identities, or id=tol[,id=tol...]");
  audit->add_option("--format", audit_in.format, "text or json");
  audit->add_option("--workers", audit_in.workers, "worker threads (0: all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (eval->parsed()) return run_eval(eval_in);
    if (table->parsed()) return run_table(table_in);
    return run_audit_cmd(audit_in);
  } catch (const UsageError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.message.c_str());
    return kUsage;
  }
}

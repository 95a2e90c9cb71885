#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pkgamma {

enum class Suite { Pochhammer, Gamma, Beta, Psi, Hyper, All };

const char* to_string(Suite s) noexcept;
std::optional<Suite> parse_suite(const std::string& name);

/// Axes of the audit grid. Every axis must be non-empty.
struct AuditGrid {
  std::vector<double> p;
  std::vector<double> k;
  std::vector<double> x;
  std::vector<double> n;
  std::vector<double> m;

  static AuditGrid defaults();
  /// Throws InvalidArgument on an empty axis, non-finite entries, p or k
  /// not positive, n not a non-negative integer, m not an integer >= 2.
  void validate() const;
};

/// Per-identity tolerance table. Unknown identifiers are rejected.
class ToleranceTable {
 public:
  static ToleranceTable defaults();
  double get(const std::string& id) const;
  void set(const std::string& id, double tol);
  void set_all(double tol);
  bool contains(const std::string& id) const { return table_.count(id) != 0; }
  const std::map<std::string, double>& entries() const { return table_; }

 private:
  std::map<std::string, double> table_;
};

/// Named coordinates of one evaluation, kept sorted by name.
using GridPoint = std::vector<std::pair<std::string, double>>;

struct IdentityRecord {
  std::string identity_id;
  GridPoint point;
  bool skipped = false;
  bool error = false;  // skipped because evaluation raised, not by exclusion
  std::string skip_reason;
  double lhs = 0.0;
  double rhs_printed = 0.0;
  double rhs_corrected = 0.0;
  double rel_err_printed = 0.0;
  double rel_err_corrected = 0.0;
  double tolerance = 0.0;
  bool printed_pass = false;
  bool corrected_pass = false;
};

struct IdentitySummary {
  std::string identity_id;
  long evaluated = 0;
  long skipped = 0;
  long errors = 0;
  long corrected_passed = 0;
  long printed_passed = 0;
  double max_rel_err_corrected = 0.0;
  double max_rel_err_printed = 0.0;
  double tolerance = 0.0;
  std::string verdict;  // holds-as-printed | printed-form-discrepancy | corrected-failures | not-evaluated
};

struct AuditOptions {
  Suite suite = Suite::All;
  AuditGrid grid = AuditGrid::defaults();
  ToleranceTable tolerances = ToleranceTable::defaults();
  unsigned workers = 0;  // 0: hardware concurrency
};

struct AuditReport {
  Suite suite = Suite::All;
  AuditGrid grid;
  std::vector<IdentityRecord> records;  // sorted by (identity_id, point)
  std::vector<IdentitySummary> summary;  // sorted by identity_id

  /// Every evaluated record passes in corrected form and no evaluation raised.
  bool all_corrected_pass() const;
  /// Canonical JSON body: {suite, grid, records, summary}; no timestamps.
  std::string to_json() const;
  const IdentitySummary* find(const std::string& id) const;
  const IdentityRecord* find(const std::string& id, const GridPoint& point) const;
};

AuditReport run_audit(const AuditOptions& options);

/// Identity identifiers covered by a suite, in report order.
std::vector<std::string> suite_identities(Suite s);

}  // namespace pkgamma

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pkgamma {

enum class ErrorCode {
  InvalidArgument,
  Domain,
  Pole,
  NoConvergence,
  Divergent,
  MaxTermsExceeded,
  LowerPole,
  UnsupportedShape,
  Index,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class PoleError : public Error {
 public:
  explicit PoleError(std::int64_t index)
      : Error(ErrorCode::Pole, "pole at index " + std::to_string(index)), index_(index) {}
  std::int64_t index() const noexcept { return index_; }

 private:
  std::int64_t index_;
};

/// Thrown by iterative evaluators that ran out of budget. The best partial
/// result is kept in the payload.
class PartialResultError : public Error {
 public:
  PartialResultError(ErrorCode code, const std::string& what, double partial, double abs_err)
      : Error(code, what), partial_(partial), abs_err_(abs_err) {}
  double partial() const noexcept { return partial_; }
  double abs_err() const noexcept { return abs_err_; }

 private:
  double partial_;
  double abs_err_;
};

[[noreturn]] inline void throw_domain(const std::string& what) { throw Error(ErrorCode::Domain, what); }
[[noreturn]] inline void throw_invalid(const std::string& what) {
  throw Error(ErrorCode::InvalidArgument, what);
}

}  // namespace pkgamma

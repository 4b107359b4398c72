#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qrg {

enum class ErrorKind {
  InvalidArgument,
  NotAUnit,
  UnsupportedModulus,
  TooLarge,
  UnsupportedFamily,
  PrimeSearchFailed,
  TrivialGroup,
  NotCommuting,
  NotUnitary,
  NotNormalizing,
  UnsupportedPrime,
  UnsupportedParameters,
  OutOfTheoremRange,
  GroupMismatch,
  MeanNotZero,
  PreconditionUnmet,
  NotProper,
  BudgetExceeded,
  Internal,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind so the
/// CLI can map it onto an exit code and an {error, detail} object.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& detail) {
  throw Error(kind, detail);
}

}  // namespace qrg

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qhs {

enum class ErrorKind {
  SingularMatrix,
  DivisionByZero,
  ConductorMismatch,
  NotRational,
  NotATree,
  NotNegativeDefinite,
  OrderCapExceeded,
  InternalInvariantViolated,
  InvalidBaseVertex,
  NotQHS,
  InvalidArgument,
  ParseError,
};

constexpr std::string_view kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ConductorMismatch: return "ConductorMismatch";
    case ErrorKind::NotRational: return "NotRational";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::NotNegativeDefinite: return "NotNegativeDefinite";
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::InternalInvariantViolated: return "InternalInvariantViolated";
    case ErrorKind::InvalidBaseVertex: return "InvalidBaseVertex";
    case ErrorKind::NotQHS: return "NotQHS";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above; the
/// message always starts with the kind name so CLI output stays greppable.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(kind_name(kind)) +
                           (detail.empty() ? "" : ": " + detail)),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& detail = {}) {
  throw Error(kind, detail);
}

}  // namespace qhs

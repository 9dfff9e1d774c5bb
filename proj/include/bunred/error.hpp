#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bunred {

enum class ErrorKind {
  InvalidType,
  InvalidArgument,
  DomainError,
  Overflow,
  BaseCaseReached,
  InternalInvariantViolation,
  BaseMismatch,
  NotCovered,
  HypothesisNotMet,
  InvalidSplitting,
  TheoremContradicted,
  CertificateInvalid,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so callers (and the CLI's
/// exit-code mapping) can branch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace bunred

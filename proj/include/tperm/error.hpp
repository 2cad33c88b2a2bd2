#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tperm {

enum class ErrorKind {
  DuplicateResidue,
  NotAWindowPermutation,
  BadPeriod,
  PeriodMismatch,
  ShiftMismatch,
  NotSubmodular,
  BadAsymptotics,
  InconsistentPeriod,
  EmptySequence,
  TooLarge,
  NoUniqueMax,
  ShiftNonzero,
  ShiftSumMismatch,
  BadParameters,
};

std::string_view to_string(ErrorKind kind);

/// Domain error raised by every library operation. The kind names the
/// violated precondition; what() carries a one-line diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Malformed text or JSON input.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& detail) : std::runtime_error("ParseError: " + detail) {}
};

}  // namespace tperm

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace leonard {

/// Failure categories surfaced by every module. The CLI maps these onto exit codes.
enum class ErrorKind {
  DescriptorMismatch,
  DimMismatch,
  DivisionByZero,
  Singular,
  ModulusTooLarge,
  InvalidModulus,
  NotMultiplicityFree,
  BadOrdering,
  IndexOutOfRange,
  SplitDoesNotExist,
  PatternViolation,
  NotIrreducibleTridiagonal,
  InvariantViolation,
  NotLeonard,
  NotCanonicalForm,
  Parse,
  RetryBudgetExceeded,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace leonard

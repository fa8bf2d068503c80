#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "leonard/error.hpp"
#include "leonard/field.hpp"

namespace leonard::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kParse = 2,
  kNotMultiplicityFree = 3,
  kModulusTooLarge = 4,
  kInvariantViolation = 5,
  kNotLeonard = 6,
  kRetryBudget = 7,
};

int exit_code(ErrorKind kind) noexcept;

struct CommandResult {
  int exit_code = kOk;
  std::string out;  // JSON only
  std::string err;  // diagnostics
};

CommandResult classify(std::string_view input);
CommandResult construct(std::string_view input);
CommandResult certify(std::string_view input);
/// Newline-delimited parameter-array instance documents.
CommandResult random(std::uint64_t seed, std::size_t d, std::string_view field, std::size_t count);

}  // namespace leonard::cli

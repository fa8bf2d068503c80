#include "leonard/cli.hpp"

#include <functional>

#include "leonard/document.hpp"
#include "leonard/sampler.hpp"

namespace leonard::cli {

namespace {

CommandResult guarded(const std::function<std::string()>& body) {
  try {
    return CommandResult{kOk, body(), ""};
  } catch (const Error& e) {
    return CommandResult{exit_code(e.kind()), "", std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace

int exit_code(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::InvalidModulus:
    case ErrorKind::BadOrdering:
    case ErrorKind::DimMismatch:
    case ErrorKind::DescriptorMismatch:
      return kParse;
    case ErrorKind::NotMultiplicityFree: return kNotMultiplicityFree;
    case ErrorKind::ModulusTooLarge: return kModulusTooLarge;
    case ErrorKind::NotLeonard: return kNotLeonard;
    case ErrorKind::RetryBudgetExceeded: return kRetryBudget;
    default: return kInvariantViolation;
  }
}

CommandResult classify(std::string_view input) {
  return guarded([&] { return doc::print(doc::to_json(doc::classify(doc::parse_instance(input)))); });
}

CommandResult construct(std::string_view input) {
  return guarded([&] { return doc::print(doc::to_json(doc::construct(doc::parse_instance(input)))); });
}

CommandResult certify(std::string_view input) {
  return guarded([&] { return doc::print(doc::to_json(doc::certify(doc::parse_instance(input)))); });
}

CommandResult random(std::uint64_t seed, std::size_t d, std::string_view field, std::size_t count) {
  return guarded([&] {
    const FieldDescriptor f = doc::field_from_json(doc::Json(std::string(field)));
    std::string out;
    for (auto& pa : random_parameter_arrays(seed, d, f, count)) {
      out += doc::print_line(doc::to_json(doc::InstanceDocument{f, std::move(pa), std::nullopt}));
    }
    return out;
  });
}

}  // namespace leonard::cli

#include "leonard/error.hpp"

namespace leonard {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DescriptorMismatch: return "DescriptorMismatch";
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::ModulusTooLarge: return "ModulusTooLarge";
    case ErrorKind::InvalidModulus: return "InvalidModulus";
    case ErrorKind::NotMultiplicityFree: return "NotMultiplicityFree";
    case ErrorKind::BadOrdering: return "BadOrdering";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::SplitDoesNotExist: return "SplitDoesNotExist";
    case ErrorKind::PatternViolation: return "PatternViolation";
    case ErrorKind::NotIrreducibleTridiagonal: return "NotIrreducibleTridiagonal";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::NotLeonard: return "NotLeonard";
    case ErrorKind::NotCanonicalForm: return "NotCanonicalForm";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::RetryBudgetExceeded: return "RetryBudgetExceeded";
  }
  return "Unknown";
}

}  // namespace leonard

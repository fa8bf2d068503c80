#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "leonard/leonard.hpp"

namespace leonard {

struct SamplerConfig {
  std::size_t retry_budget = 1000;
};

/// Draws a parameter array passing check_parameter_array. theta and theta*
/// come from one family (quadratic in i, or a + b q^i + c q^-i with a shared q)
/// so the eigenvalue ratios agree; phi_1 is drawn and varphi follows from it.
/// Throws RetryBudgetExceeded when no array is found within the budget.
ParameterArray random_parameter_array(std::mt19937_64& rng, std::size_t d, const FieldDescriptor& field,
                                      const SamplerConfig& config = {});

/// `count` arrays from one generator seeded with `seed`.
std::vector<ParameterArray> random_parameter_arrays(std::uint64_t seed, std::size_t d, const FieldDescriptor& field,
                                                    std::size_t count, const SamplerConfig& config = {});

}  // namespace leonard

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "leonard/linalg.hpp"
#include "leonard/matrix.hpp"

namespace leonard {

/// Ordered eigenvalues and primitive idempotents of a multiplicity-free matrix.
///
/// Construction goes through spectral_data(), which checks
///   m E_i = theta_i E_i,  E_i E_j = delta_ij E_i,  sum E_i = I,
///   m = sum theta_i E_i,  rank E_i = 1
/// before handing the value out.
struct SpectralData {
  Matrix matrix;
  std::vector<FieldElement> eigenvalues;
  std::vector<Matrix> idempotents;

  std::size_t dim() const noexcept { return eigenvalues.size(); }
  /// Same matrix, eigenvalues and idempotents listed back to front.
  SpectralData reversed() const;
};

bool is_multiplicity_free(const Matrix& m, const RootSearchConfig& config = {});

/// Distinct eigenvalues of a multiplicity-free matrix in canonical order.
/// Throws NotMultiplicityFree.
std::vector<FieldElement> canonical_eigenvalues(const Matrix& m, const RootSearchConfig& config = {});

/// E_i = prod_{j != i} (m - theta_j I) / (theta_i - theta_j), in the given
/// eigenvalue order (canonical when omitted). Throws NotMultiplicityFree,
/// BadOrdering.
SpectralData spectral_data(const Matrix& m, std::optional<std::span<const FieldElement>> order = std::nullopt,
                           const RootSearchConfig& config = {});

/// Spanning vector of E_i V: the first nonzero column of E_i, first nonzero entry scaled to 1.
Vector eigenspace(const SpectralData& sd, std::size_t i);

}  // namespace leonard

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "leonard/matrix.hpp"
#include "leonard/polynomial.hpp"
#include "leonard/spectral.hpp"

namespace leonard {

/// Which products F_i X F_j vanish, for X one matrix and F_0..F_d the
/// primitive idempotents of the other.
struct ZeroPattern {
  std::size_t dim = 0;
  std::vector<std::uint8_t> vanishes;  // row-major, 1 = product is zero

  bool operator()(std::size_t i, std::size_t j) const { return vanishes[i * dim + j] != 0; }
  bool is_symmetric() const;
  friend bool operator==(const ZeroPattern&, const ZeroPattern&) = default;
};

enum class PatternClass { LowerPattern, UpperPattern, IrreducibleTridiagonal, Other };

std::string_view to_string(PatternClass c) noexcept;

/// Zero below the subdiagonal, nonzero on it.
bool satisfies_lower(const ZeroPattern& zp);
/// Zero above the superdiagonal, nonzero on it.
bool satisfies_upper(const ZeroPattern& zp);
PatternClass classify_pattern(const ZeroPattern& zp);

/// Table of E'_i a E'_j = 0, where E'_k are the idempotents in `other`.
ZeroPattern zero_pattern(const Matrix& a, const SpectralData& other);

/// An ordering of the eigenvalues of A and one of A*.
struct OrderingPair {
  std::vector<FieldElement> theta_order;
  std::vector<FieldElement> theta_star_order;

  OrderingPair with_theta_reversed() const;
  friend bool operator==(const OrderingPair&, const OrderingPair&) = default;
};

/// Both spectral decompositions under one ordering pair.
struct SpectralPair {
  SpectralData primal;  // A, theta, E
  SpectralData dual;    // A*, theta*, E*

  const Matrix& a() const noexcept { return primal.matrix; }
  const Matrix& a_star() const noexcept { return dual.matrix; }
  OrderingPair orderings() const { return {primal.eigenvalues, dual.eigenvalues}; }
};

/// Throws NotMultiplicityFree, BadOrdering, DimMismatch, DescriptorMismatch.
SpectralPair spectral_pair(const Matrix& a, const Matrix& a_star, const std::optional<OrderingPair>& orderings = std::nullopt);

/// A split decomposition exists iff E*_i A E*_j has the lower pattern and
/// E_i A* E_j has the upper pattern.
bool exists_split(const SpectralPair& sp);
bool exists_split(const Matrix& a, const Matrix& a_star, const OrderingPair& orderings);

struct Decomposition {
  std::vector<Vector> spanners;
};

/// Basis u_0..u_d with (A - theta_i I) u_i = u_{i+1}, (A - theta_d I) u_d = 0,
/// (A* - theta*_i I) u_i = phi_i u_{i-1}, (A* - theta*_0 I) u_0 = 0.
struct SplitCertificate {
  Decomposition decomposition;
  std::vector<FieldElement> split_sequence;  // phi_1..phi_d
  OrderingPair orderings;

  const std::vector<Vector>& basis() const noexcept { return decomposition.spanners; }
  /// Matrix with column i equal to u_i.
  Matrix basis_matrix() const;
};

/// u_i = prod_{h<i} (A - theta_h I) v*_0 with v*_0 = scale * eigenspace(E*_0).
/// Every certificate invariant is checked before return. Throws SplitDoesNotExist.
SplitCertificate build_split(const SpectralPair& sp, const std::optional<FieldElement>& scale = std::nullopt);
SplitCertificate build_split(const Matrix& a, const Matrix& a_star, const OrderingPair& orderings);

/// span(u_i) equals prod_{h<i}(A - theta_h I) E*_0 V and prod_{h>i}(A* - theta*_h I) E_d V for every i.
bool split_uniqueness_witness(const SplitCertificate& cert, const SpectralPair& sp);

/// The five sum/intersection identities satisfied by a split decomposition, for every i.
bool subspace_identities(const SplitCertificate& cert, const SpectralPair& sp);

/// Matrix P whose column i spans the i-th eigenspace of `sd`.
Matrix eigenbasis(const SpectralData& sd);
/// a written in the basis eigenbasis(sd): P^{-1} a P.
Matrix in_eigenbasis(const Matrix& a, const SpectralData& sd);

/// f_0 = 1, lambda f_j = sum_{i <= j+1} B_ij f_i, with B = in_eigenbasis(a, other).
/// Needs the lower pattern on E'_i a E'_j; throws PatternViolation otherwise.
std::vector<Polynomial> graded_polynomials(const Matrix& a, const SpectralData& other);

/// {a^h v_0 : 0 <= h <= d} is linearly independent, v_0 spanning the first eigenspace of `other`.
bool iso_to_module_check(const Matrix& a, const SpectralData& other);

}  // namespace leonard

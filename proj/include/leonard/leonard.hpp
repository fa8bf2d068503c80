#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "leonard/matrix.hpp"
#include "leonard/splitdecomp.hpp"

namespace leonard {

// ---------------------------------------------------------------------------
// Leonard-system predicate

/// The four vanishing conditions on the products E*_i A E*_j ("dual") and
/// E_i A* E_j ("primal"). "Lower" means zero for i - j > 1 and nonzero for
/// i - j = 1; "Upper" is the transposed statement.
enum class ProductCondition : std::uint8_t { DualLower = 0, DualUpper = 1, PrimalLower = 2, PrimalUpper = 3 };

std::string_view to_string(ProductCondition c) noexcept;

using ConditionFlags = std::array<bool, 4>;  // indexed by ProductCondition

struct FailureWitness {
  std::size_t i;
  std::size_t j;
  ProductCondition condition;
  Matrix product;  // the offending E*_i A E*_j or E_i A* E_j
};

struct LeonardVerdict {
  bool is_leonard_system = false;
  ConditionFlags flags{};
  std::optional<FailureWitness> failure_witness;
  ZeroPattern dual_pattern;    // E*_i A E*_j
  ZeroPattern primal_pattern;  // E_i A* E_j

  bool flag(ProductCondition c) const { return flags[static_cast<std::size_t>(c)]; }
};

LeonardVerdict leonard_verdict(const SpectralPair& sp);
LeonardVerdict leonard_verdict(const Matrix& a, const Matrix& a_star, const OrderingPair& orderings);

/// Every ordering pair turning (A, A*) into a Leonard system. Only the two
/// traversals of each support path are tried, so at most four candidates.
std::vector<OrderingPair> find_leonard_orderings(const Matrix& a, const Matrix& a_star);

/// No matrix pair can satisfy exactly three of the four product conditions.
bool three_gives_four(const ConditionFlags& flags) noexcept;

/// Split decompositions exist for (theta, theta*) and for (reversed theta, theta*).
struct Char1Legs {
  bool forward = false;
  bool reversed = false;
  bool holds() const noexcept { return forward && reversed; }
};
Char1Legs char1_legs(const Matrix& a, const Matrix& a_star, const OrderingPair& orderings);
bool char1_check(const Matrix& a, const Matrix& a_star, const OrderingPair& orderings);

// ---------------------------------------------------------------------------
// Antiautomorphisms X -> H^{-1} X^t H

struct Antiautomorphism {
  enum class Basis { Standard };

  Matrix conjugator;           // H, first nonzero entry in reading order is 1
  Basis basis_context = Basis::Standard;
  Matrix eigenbasis_diagonal;  // D with D^{-1} B^t D = B
  Matrix eigenbasis;           // P, columns spanning E*_i V

  Matrix apply(const Matrix& x) const;
};

/// Built from the diagonal D_ii = (B_01 B_12 ... B_{i-1,i}) / (B_10 B_21 ... B_{i,i-1})
/// of the matrix B representing A in the E*-eigenbasis. Both fixed-point
/// identities are checked before return. Throws NotIrreducibleTridiagonal.
Antiautomorphism antiautomorphism_in_eigenbasis(const Matrix& a, const SpectralData& dual);

/// Basis of {H : A^t H = H A, A*^t H = H A*}.
std::vector<Matrix> conjugator_solutions(const Matrix& a, const Matrix& a_star);

/// Split decomposition for the given orderings, plus an invertible H solving the conjugator system.
bool char2_check(const Matrix& a, const Matrix& a_star, const OrderingPair& orderings);

// ---------------------------------------------------------------------------
// Parameter arrays and the lower/upper bidiagonal form

struct ParameterArray {
  FieldDescriptor field;
  std::size_t d = 0;
  std::vector<FieldElement> theta;       // theta_0..theta_d
  std::vector<FieldElement> theta_star;  // theta*_0..theta*_d
  std::vector<FieldElement> varphi;      // varphi_1..varphi_d

  OrderingPair orderings() const { return {theta, theta_star}; }
  friend bool operator==(const ParameterArray&, const ParameterArray&) = default;
};

/// Throws InvariantViolation on wrong lengths, foreign fields, repeated
/// eigenvalues or a zero varphi_i.
void validate(const ParameterArray& pa);

enum class ParameterCondition { CondI, CondII, CondIII, PhiZero };
std::string_view to_string(ParameterCondition c) noexcept;

struct LeonardParameterReport {
  bool valid = false;
  std::optional<std::vector<FieldElement>> phi;  // companion sequence phi_1..phi_d
  std::optional<ParameterCondition> failed_condition;
};

/// Closed-form test: phi_1 is solved from condition (i) at i = 1, the rest of
/// phi from (ii); then (i), (ii), the eigenvalue-ratio condition and phi_i != 0
/// are checked in that order.
LeonardParameterReport check_parameter_array(const ParameterArray& pa);

/// A lower bidiagonal (diagonal theta, subdiagonal 1), A* upper bidiagonal
/// (diagonal theta*, superdiagonal varphi).
std::pair<Matrix, Matrix> construct_pair(const ParameterArray& pa);

/// True iff (a, a_star) has exactly the shape construct_pair produces.
bool is_canonical_form(const Matrix& a, const Matrix& a_star);
/// Reads theta, theta*, varphi back off a canonical pair. Throws NotCanonicalForm.
ParameterArray parameter_array_from_canonical(const Matrix& a, const Matrix& a_star);

struct GConjugation {
  Matrix g;
  std::vector<FieldElement> phi;  // split sequence for (theta reversed, theta*)
};

/// For a canonical-form Leonard pair: G whose columns are the split basis for
/// the reversed theta ordering, so G^{-1} A G is lower bidiagonal with diagonal
/// theta_d..theta_0 and G^{-1} A* G is upper bidiagonal with superdiagonal phi.
/// `orderings` must be the diagonal orderings. Throws NotLeonard,
/// NotCanonicalForm, BadOrdering.
GConjugation g_conjugation(const Matrix& a, const Matrix& a_star, const OrderingPair& orderings);

/// Change of basis to the split basis: U^{-1} A U and U^{-1} A* U are in canonical form.
struct CanonicalForm {
  Matrix a;
  Matrix a_star;
  Matrix change_of_basis;  // U
  ParameterArray parameters;
};
CanonicalForm canonicalize(const Matrix& a, const Matrix& a_star, const OrderingPair& orderings);

}  // namespace leonard

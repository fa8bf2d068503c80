#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "leonard/matrix.hpp"
#include "leonard/polynomial.hpp"

namespace leonard {

Matrix mat_mul(const Matrix& lhs, const Matrix& rhs);

/// Basis of {x : m x = 0}, one vector per free column of the reduced form.
std::vector<Vector> kernel_basis(const Matrix& m);

/// Null space of the rectangular system whose rows are `rows` (each of length `ncols`).
std::vector<Vector> nullspace(std::span<const Vector> rows, std::size_t ncols);

std::size_t rank(const Matrix& m);
/// Dimension of the span of `vectors`.
std::size_t rank(std::span<const Vector> vectors);

/// Throws Singular.
Matrix inverse(const Matrix& m);

/// det(lambda I - m), monic. Berkowitz over GF(p), Faddeev-LeVerrier over Q.
Polynomial char_poly(const Matrix& m);
/// Division-free route; valid over any field.
Polynomial char_poly_berkowitz(const Matrix& m);
/// Divides by 1..dim; refuses (DivisionByZero) when that is impossible in the field.
Polynomial char_poly_faddeev_leverrier(const Matrix& m);

struct Root {
  FieldElement value;
  std::size_t multiplicity;
};

struct RootSearchConfig {
  /// GF(p) roots are found by trying every residue; refuse above this modulus.
  std::uint64_t max_exhaustive_modulus = 1'000'000;
};

/// All roots lying in the field, ascending in the canonical order.
/// Throws ModulusTooLarge, or InvariantViolation for the zero polynomial.
std::vector<Root> roots_in_field(const Polynomial& p, const RootSearchConfig& config = {});

/// Horner evaluation p(m).
Matrix eval_poly_at_matrix(const Polynomial& p, const Matrix& m);

// Subspaces of K^n, represented by spanning lists.

/// Reduced echelon basis of span(vectors); empty for the zero space.
std::vector<Vector> span_basis(std::span<const Vector> vectors);
bool same_span(std::span<const Vector> lhs, std::span<const Vector> rhs);
/// True iff span(sub) is contained in span(super).
bool span_contains(std::span<const Vector> super, std::span<const Vector> sub);
/// Basis of span(lhs) ∩ span(rhs), read off the kernel of [lhs | -rhs].
std::vector<Vector> intersect(std::span<const Vector> lhs, std::span<const Vector> rhs);
/// Nonzero columns of m, as a spanning list for its image.
std::vector<Vector> column_space(const Matrix& m);
bool colinear(const Vector& u, const Vector& v);

}  // namespace leonard

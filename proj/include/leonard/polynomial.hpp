#pragma once

#include <string>
#include <utility>
#include <vector>

#include "leonard/field.hpp"

namespace leonard {

/// Univariate polynomial, coefficients lowest degree first, trailing zeros stripped.
class Polynomial {
 public:
  Polynomial(FieldDescriptor field, std::vector<FieldElement> coefficients);
  static Polynomial zero(FieldDescriptor field) { return Polynomial(field, {}); }
  static Polynomial constant(const FieldElement& c) { return Polynomial(c.field(), {c}); }
  /// The polynomial lambda.
  static Polynomial variable(FieldDescriptor field);
  /// lambda - root
  static Polynomial linear_factor(const FieldElement& root);

  const FieldDescriptor& field() const noexcept { return field_; }
  const std::vector<FieldElement>& coefficients() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  FieldElement coefficient(std::size_t k) const;
  FieldElement leading() const;

  FieldElement operator()(const FieldElement& x) const;
  Polynomial derivative() const;
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator-(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(const FieldElement& s, const Polynomial& p);
  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs);

  /// Quotient and remainder; throws DivisionByZero for a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

  std::string to_string() const;

 private:
  void strip();

  FieldDescriptor field_;
  std::vector<FieldElement> coeffs_;
};

/// Monic greatest common divisor (zero if both are zero).
Polynomial gcd(Polynomial a, Polynomial b);

}  // namespace leonard

#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace leonard {

/// The ground field: the rationals, or GF(p) for a prime p < 2^31.
class FieldDescriptor {
 public:
  enum class Kind : std::uint8_t { Rationals, PrimeField };

  static FieldDescriptor rationals() noexcept { return FieldDescriptor(Kind::Rationals, 0); }
  /// Throws InvalidModulus unless `p` is a prime below 2^31.
  static FieldDescriptor prime_field(std::uint64_t p);

  Kind kind() const noexcept { return kind_; }
  bool is_rational() const noexcept { return kind_ == Kind::Rationals; }
  /// Zero for the rationals.
  std::uint32_t modulus() const noexcept { return modulus_; }

  /// "rational" or "gf:P".
  std::string to_string() const;

  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;

 private:
  FieldDescriptor(Kind kind, std::uint32_t modulus) noexcept : kind_(kind), modulus_(modulus) {}

  Kind kind_;
  std::uint32_t modulus_;
};

bool is_prime(std::uint64_t n) noexcept;

/// An exact element of a field. Rationals are held reduced with a positive
/// denominator; residues lie in [0, p). Mixing fields throws DescriptorMismatch.
class FieldElement {
 public:
  FieldElement(FieldDescriptor field, long long value);
  FieldElement(FieldDescriptor field, const mpz_class& value);
  /// Rationals only; the fraction is canonicalized.
  FieldElement(FieldDescriptor field, const mpq_class& value);

  static FieldElement zero(FieldDescriptor field) { return FieldElement(field, 0LL); }
  static FieldElement one(FieldDescriptor field) { return FieldElement(field, 1LL); }

  /// Parses `-?[0-9]+(/[1-9][0-9]*)?` over the rationals, `[0-9]+` over GF(p).
  /// Throws Parse on anything else.
  static FieldElement parse(FieldDescriptor field, std::string_view text);

  const FieldDescriptor& field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Valid only over the rationals.
  const mpq_class& rational() const;
  /// Valid only over GF(p).
  std::uint32_t residue() const;

  FieldElement inverse() const;
  std::string to_string() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);

  friend FieldElement operator+(FieldElement lhs, const FieldElement& rhs) { return lhs += rhs; }
  friend FieldElement operator-(FieldElement lhs, const FieldElement& rhs) { return lhs -= rhs; }
  friend FieldElement operator*(FieldElement lhs, const FieldElement& rhs) { return lhs *= rhs; }
  friend FieldElement operator/(FieldElement lhs, const FieldElement& rhs) { return lhs /= rhs; }

  friend bool operator==(const FieldElement& lhs, const FieldElement& rhs);

  /// Canonical total order: (numerator, denominator) lexicographically over the
  /// rationals, residue over GF(p). Used for reproducible eigenvalue orderings.
  friend std::strong_ordering canonical_compare(const FieldElement& lhs, const FieldElement& rhs);

  friend std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

 private:
  void require_same_field(const FieldElement& rhs) const;

  FieldDescriptor field_;
  std::variant<mpq_class, std::uint32_t> value_;
};

inline bool canonical_less(const FieldElement& lhs, const FieldElement& rhs) {
  return canonical_compare(lhs, rhs) == std::strong_ordering::less;
}

}  // namespace leonard

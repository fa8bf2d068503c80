#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "leonard/field.hpp"

namespace leonard {

/// A column vector over one field. Any length >= 1; rectangular linear
/// systems reuse it for their rows.
class Vector {
 public:
  Vector(FieldDescriptor field, std::vector<FieldElement> entries);
  static Vector zero(FieldDescriptor field, std::size_t dim);
  static Vector unit(FieldDescriptor field, std::size_t dim, std::size_t index);

  const FieldDescriptor& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return entries_.size(); }
  const FieldElement& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const FieldElement> entries() const noexcept { return entries_; }

  bool is_zero() const noexcept;
  /// Index of the first nonzero entry, or dim() for the zero vector.
  std::size_t leading_index() const noexcept;
  /// Scaled so the first nonzero entry is 1. The zero vector is returned unchanged.
  Vector normalized() const;

  Vector operator-() const;
  friend Vector operator+(const Vector& lhs, const Vector& rhs);
  friend Vector operator-(const Vector& lhs, const Vector& rhs);
  friend Vector operator*(const FieldElement& s, const Vector& v);
  friend bool operator==(const Vector& lhs, const Vector& rhs);

  std::vector<std::string> to_strings() const;

 private:
  FieldDescriptor field_;
  std::vector<FieldElement> entries_;
};

/// Dense square matrix, row-major, immutable once built.
class Matrix {
 public:
  /// `entries` holds dim*dim elements in row-major order; all in `field`.
  Matrix(FieldDescriptor field, std::size_t dim, std::vector<FieldElement> entries);
  static Matrix from_rows(FieldDescriptor field, const std::vector<std::vector<FieldElement>>& rows);
  /// Matrix whose column j is columns[j].
  static Matrix from_columns(std::span<const Vector> columns);
  static Matrix zero(FieldDescriptor field, std::size_t dim);
  static Matrix identity(FieldDescriptor field, std::size_t dim);
  static Matrix diagonal(std::span<const FieldElement> diag);

  const FieldDescriptor& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  const FieldElement& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  std::span<const FieldElement> entries() const noexcept { return entries_; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  Matrix transpose() const;
  FieldElement trace() const;
  bool is_zero() const noexcept;
  bool is_diagonal() const noexcept;

  Matrix operator-() const;
  friend Matrix operator+(const Matrix& lhs, const Matrix& rhs);
  friend Matrix operator-(const Matrix& lhs, const Matrix& rhs);
  friend Matrix operator*(const FieldElement& s, const Matrix& m);
  /// Product through the parallel kernel.
  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
  friend Vector operator*(const Matrix& m, const Vector& v);
  friend bool operator==(const Matrix& lhs, const Matrix& rhs);

  /// m - c*I
  Matrix shifted(const FieldElement& c) const;
  std::vector<std::vector<std::string>> to_strings() const;

 private:
  FieldDescriptor field_;
  std::size_t dim_;
  std::vector<FieldElement> entries_;
};

void require_same_shape(const Matrix& lhs, const Matrix& rhs);

}  // namespace leonard

#include "leonard/matrix.hpp"

#include "leonard/error.hpp"
#include "leonard/kernels.hpp"

namespace leonard {

namespace {

void require_field(const FieldDescriptor& expected, const FieldElement& x) {
  if (!(x.field() == expected)) {
    throw Error(ErrorKind::DescriptorMismatch, "entry over " + x.field().to_string() + " in " + expected.to_string());
  }
}

void require_same_vector_shape(const Vector& lhs, const Vector& rhs) {
  if (!(lhs.field() == rhs.field())) throw Error(ErrorKind::DescriptorMismatch, "vector fields differ");
  if (lhs.dim() != rhs.dim()) throw Error(ErrorKind::DimMismatch, "vector lengths differ");
}

}  // namespace

Vector::Vector(FieldDescriptor field, std::vector<FieldElement> entries) : field_(field), entries_(std::move(entries)) {
  if (entries_.empty()) throw Error(ErrorKind::DimMismatch, "empty vector");
  for (const auto& x : entries_) require_field(field_, x);
}

Vector Vector::zero(FieldDescriptor field, std::size_t dim) {
  return Vector(field, std::vector<FieldElement>(dim, FieldElement::zero(field)));
}

Vector Vector::unit(FieldDescriptor field, std::size_t dim, std::size_t index) {
  std::vector<FieldElement> e(dim, FieldElement::zero(field));
  e.at(index) = FieldElement::one(field);
  return Vector(field, std::move(e));
}

bool Vector::is_zero() const noexcept { return leading_index() == dim(); }

std::size_t Vector::leading_index() const noexcept {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!entries_[i].is_zero()) return i;
  }
  return entries_.size();
}

Vector Vector::normalized() const {
  std::size_t lead = leading_index();
  if (lead == dim()) return *this;
  return entries_[lead].inverse() * *this;
}

Vector Vector::operator-() const {
  std::vector<FieldElement> out;
  out.reserve(dim());
  for (const auto& x : entries_) out.push_back(-x);
  return Vector(field_, std::move(out));
}

Vector operator+(const Vector& lhs, const Vector& rhs) {
  require_same_vector_shape(lhs, rhs);
  std::vector<FieldElement> out;
  out.reserve(lhs.dim());
  for (std::size_t i = 0; i < lhs.dim(); ++i) out.push_back(lhs[i] + rhs[i]);
  return Vector(lhs.field(), std::move(out));
}

Vector operator-(const Vector& lhs, const Vector& rhs) {
  require_same_vector_shape(lhs, rhs);
  std::vector<FieldElement> out;
  out.reserve(lhs.dim());
  for (std::size_t i = 0; i < lhs.dim(); ++i) out.push_back(lhs[i] - rhs[i]);
  return Vector(lhs.field(), std::move(out));
}

Vector operator*(const FieldElement& s, const Vector& v) {
  std::vector<FieldElement> out;
  out.reserve(v.dim());
  for (const auto& x : v.entries_) out.push_back(s * x);
  return Vector(v.field(), std::move(out));
}

bool operator==(const Vector& lhs, const Vector& rhs) {
  return lhs.field() == rhs.field() && lhs.entries_ == rhs.entries_;
}

std::vector<std::string> Vector::to_strings() const {
  std::vector<std::string> out;
  out.reserve(dim());
  for (const auto& x : entries_) out.push_back(x.to_string());
  return out;
}

Matrix::Matrix(FieldDescriptor field, std::size_t dim, std::vector<FieldElement> entries)
    : field_(field), dim_(dim), entries_(std::move(entries)) {
  if (dim_ == 0) throw Error(ErrorKind::DimMismatch, "matrix dimension must be at least 1");
  if (entries_.size() != dim_ * dim_) throw Error(ErrorKind::DimMismatch, "entry count is not dim*dim");
  for (const auto& x : entries_) require_field(field_, x);
}

Matrix Matrix::from_rows(FieldDescriptor field, const std::vector<std::vector<FieldElement>>& rows) {
  std::vector<FieldElement> flat;
  flat.reserve(rows.size() * rows.size());
  for (const auto& r : rows) {
    if (r.size() != rows.size()) throw Error(ErrorKind::DimMismatch, "matrix is not square");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return Matrix(field, rows.size(), std::move(flat));
}

Matrix Matrix::from_columns(std::span<const Vector> columns) {
  if (columns.empty()) throw Error(ErrorKind::DimMismatch, "no columns");
  std::size_t n = columns.size();
  FieldDescriptor field = columns.front().field();
  std::vector<FieldElement> flat(n * n, FieldElement::zero(field));
  for (std::size_t j = 0; j < n; ++j) {
    if (columns[j].dim() != n) throw Error(ErrorKind::DimMismatch, "column length differs from column count");
    for (std::size_t i = 0; i < n; ++i) flat[i * n + j] = columns[j][i];
  }
  return Matrix(field, n, std::move(flat));
}

Matrix Matrix::zero(FieldDescriptor field, std::size_t dim) {
  return Matrix(field, dim, std::vector<FieldElement>(dim * dim, FieldElement::zero(field)));
}

Matrix Matrix::identity(FieldDescriptor field, std::size_t dim) {
  std::vector<FieldElement> flat(dim * dim, FieldElement::zero(field));
  for (std::size_t i = 0; i < dim; ++i) flat[i * dim + i] = FieldElement::one(field);
  return Matrix(field, dim, std::move(flat));
}

Matrix Matrix::diagonal(std::span<const FieldElement> diag) {
  if (diag.empty()) throw Error(ErrorKind::DimMismatch, "empty diagonal");
  std::size_t n = diag.size();
  FieldDescriptor field = diag.front().field();
  std::vector<FieldElement> flat(n * n, FieldElement::zero(field));
  for (std::size_t i = 0; i < n; ++i) flat[i * n + i] = diag[i];
  return Matrix(field, n, std::move(flat));
}

Vector Matrix::row(std::size_t i) const {
  return Vector(field_, std::vector<FieldElement>(entries_.begin() + i * dim_, entries_.begin() + (i + 1) * dim_));
}

Vector Matrix::column(std::size_t j) const {
  std::vector<FieldElement> out;
  out.reserve(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out.push_back((*this)(i, j));
  return Vector(field_, std::move(out));
}

Matrix Matrix::transpose() const {
  std::vector<FieldElement> out;
  out.reserve(entries_.size());
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) out.push_back((*this)(j, i));
  }
  return Matrix(field_, dim_, std::move(out));
}

FieldElement Matrix::trace() const {
  FieldElement t = FieldElement::zero(field_);
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_zero() const noexcept {
  for (const auto& x : entries_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_diagonal() const noexcept {
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      if (i != j && !(*this)(i, j).is_zero()) return false;
    }
  }
  return true;
}

Matrix Matrix::operator-() const {
  std::vector<FieldElement> out;
  out.reserve(entries_.size());
  for (const auto& x : entries_) out.push_back(-x);
  return Matrix(field_, dim_, std::move(out));
}

void require_same_shape(const Matrix& lhs, const Matrix& rhs) {
  if (!(lhs.field() == rhs.field())) {
    throw Error(ErrorKind::DescriptorMismatch, lhs.field().to_string() + " vs " + rhs.field().to_string());
  }
  if (lhs.dim() != rhs.dim()) {
    throw Error(ErrorKind::DimMismatch, std::to_string(lhs.dim()) + " vs " + std::to_string(rhs.dim()));
  }
}

Matrix operator+(const Matrix& lhs, const Matrix& rhs) {
  require_same_shape(lhs, rhs);
  std::vector<FieldElement> out;
  out.reserve(lhs.entries_.size());
  for (std::size_t k = 0; k < lhs.entries_.size(); ++k) out.push_back(lhs.entries_[k] + rhs.entries_[k]);
  return Matrix(lhs.field_, lhs.dim_, std::move(out));
}

Matrix operator-(const Matrix& lhs, const Matrix& rhs) {
  require_same_shape(lhs, rhs);
  std::vector<FieldElement> out;
  out.reserve(lhs.entries_.size());
  for (std::size_t k = 0; k < lhs.entries_.size(); ++k) out.push_back(lhs.entries_[k] - rhs.entries_[k]);
  return Matrix(lhs.field_, lhs.dim_, std::move(out));
}

Matrix operator*(const FieldElement& s, const Matrix& m) {
  std::vector<FieldElement> out;
  out.reserve(m.entries_.size());
  for (const auto& x : m.entries_) out.push_back(s * x);
  return Matrix(m.field_, m.dim_, std::move(out));
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) { return kernels::mat_mul(lhs, rhs); }

Vector operator*(const Matrix& m, const Vector& v) {
  if (!(m.field() == v.field())) throw Error(ErrorKind::DescriptorMismatch, "matrix/vector fields differ");
  if (m.dim() != v.dim()) throw Error(ErrorKind::DimMismatch, "matrix/vector dims differ");
  std::vector<FieldElement> out;
  out.reserve(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    FieldElement acc = FieldElement::zero(m.field());
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (!m(i, j).is_zero()) acc += m(i, j) * v[j];
    }
    out.push_back(std::move(acc));
  }
  return Vector(m.field(), std::move(out));
}

bool operator==(const Matrix& lhs, const Matrix& rhs) {
  return lhs.field_ == rhs.field_ && lhs.dim_ == rhs.dim_ && lhs.entries_ == rhs.entries_;
}

Matrix Matrix::shifted(const FieldElement& c) const {
  std::vector<FieldElement> out = entries_;
  for (std::size_t i = 0; i < dim_; ++i) out[i * dim_ + i] -= c;
  return Matrix(field_, dim_, std::move(out));
}

std::vector<std::vector<std::string>> Matrix::to_strings() const {
  std::vector<std::vector<std::string>> out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) out[i] = row(i).to_strings();
  return out;
}

}  // namespace leonard

#include "leonard/kernels.hpp"

#include <algorithm>

#include "leonard/error.hpp"

namespace leonard::kernels {

namespace {

// Row i of lhs*rhs into out[i*n .. i*n+n).
void multiply_row(const Matrix& lhs, const Matrix& rhs, std::size_t i, std::vector<FieldElement>& out) {
  const std::size_t n = lhs.dim();
  for (std::size_t j = 0; j < n; ++j) {
    FieldElement acc = FieldElement::zero(lhs.field());
    for (std::size_t k = 0; k < n; ++k) {
      const FieldElement& a = lhs(i, k);
      if (a.is_zero()) continue;
      const FieldElement& b = rhs(k, j);
      if (b.is_zero()) continue;
      acc += a * b;
    }
    out[i * n + j] = std::move(acc);
  }
}

std::uint32_t horner_mod(std::span<const std::uint32_t> coeffs, std::uint64_t r, std::uint32_t p) {
  std::uint64_t acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = (acc * r + *it) % p;
  return static_cast<std::uint32_t>(acc);
}

// Index of the first row at or below `from` with a nonzero entry in `col`.
std::size_t find_pivot(const std::vector<std::vector<FieldElement>>& rows, std::size_t from, std::size_t col) {
  for (std::size_t r = from; r < rows.size(); ++r) {
    if (!rows[r][col].is_zero()) return r;
  }
  return rows.size();
}

void normalize_pivot_row(std::vector<FieldElement>& row, std::size_t col, std::size_t ncols) {
  FieldElement inv = row[col].inverse();
  for (std::size_t c = col; c < ncols; ++c) {
    if (!row[c].is_zero()) row[c] *= inv;
  }
}

void eliminate(std::vector<FieldElement>& target, const std::vector<FieldElement>& pivot_row, std::size_t col,
               std::size_t ncols) {
  if (target[col].is_zero()) return;
  FieldElement factor = target[col];
  for (std::size_t c = col; c < ncols; ++c) {
    if (!pivot_row[c].is_zero()) target[c] -= factor * pivot_row[c];
  }
}

void check_rows(const std::vector<std::vector<FieldElement>>& rows, std::size_t ncols) {
  for (const auto& r : rows) {
    if (r.size() != ncols) throw Error(ErrorKind::DimMismatch, "ragged row in linear system");
  }
}

}  // namespace

Matrix mat_mul(const Matrix& lhs, const Matrix& rhs) {
  require_same_shape(lhs, rhs);
  const std::size_t n = lhs.dim();
  std::vector<FieldElement> out(n * n, FieldElement::zero(lhs.field()));
  const long rows = static_cast<long>(n);
#pragma omp parallel for schedule(static) if (n * n * n >= kParallelThreshold)
  for (long i = 0; i < rows; ++i) multiply_row(lhs, rhs, static_cast<std::size_t>(i), out);
  return Matrix(lhs.field(), n, std::move(out));
}

Matrix mat_mul_serial(const Matrix& lhs, const Matrix& rhs) {
  require_same_shape(lhs, rhs);
  const std::size_t n = lhs.dim();
  std::vector<FieldElement> out(n * n, FieldElement::zero(lhs.field()));
  for (std::size_t i = 0; i < n; ++i) multiply_row(lhs, rhs, i, out);
  return Matrix(lhs.field(), n, std::move(out));
}

std::vector<std::uint8_t> vanishing_products(std::span<const Matrix> left, const Matrix& middle,
                                             std::span<const Matrix> right) {
  const std::size_t nl = left.size();
  const std::size_t nr = right.size();
  const std::size_t n = middle.dim();
  const bool wide = nl * nr * n * n * n >= kParallelThreshold;

  std::vector<Matrix> middle_right(nr, middle);
  const long count_r = static_cast<long>(nr);
#pragma omp parallel for schedule(static) if (wide)
  for (long j = 0; j < count_r; ++j) middle_right[j] = mat_mul_serial(middle, right[j]);

  std::vector<std::uint8_t> table(nl * nr, 0);
  const long pairs = static_cast<long>(nl * nr);
#pragma omp parallel for schedule(dynamic, 1) if (wide)
  for (long k = 0; k < pairs; ++k) {
    const std::size_t i = static_cast<std::size_t>(k) / nr;
    const std::size_t j = static_cast<std::size_t>(k) % nr;
    table[k] = mat_mul_serial(left[i], middle_right[j]).is_zero() ? 1 : 0;
  }
  return table;
}

std::vector<std::uint8_t> vanishing_products_serial(std::span<const Matrix> left, const Matrix& middle,
                                                    std::span<const Matrix> right) {
  std::vector<std::uint8_t> table(left.size() * right.size(), 0);
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (std::size_t j = 0; j < right.size(); ++j) {
      table[i * right.size() + j] = mat_mul_serial(mat_mul_serial(left[i], middle), right[j]).is_zero() ? 1 : 0;
    }
  }
  return table;
}

std::vector<std::uint32_t> gf_root_scan(std::span<const std::uint32_t> coeffs, std::uint32_t p) {
  std::vector<std::uint32_t> roots;
  const long limit = static_cast<long>(p);
#pragma omp parallel if (std::size_t{p} * coeffs.size() >= kParallelThreshold)
  {
    std::vector<std::uint32_t> local;
#pragma omp for schedule(static) nowait
    for (long r = 0; r < limit; ++r) {
      if (horner_mod(coeffs, static_cast<std::uint64_t>(r), p) == 0) local.push_back(static_cast<std::uint32_t>(r));
    }
#pragma omp critical
    roots.insert(roots.end(), local.begin(), local.end());
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<std::uint32_t> gf_root_scan_serial(std::span<const std::uint32_t> coeffs, std::uint32_t p) {
  std::vector<std::uint32_t> roots;
  for (std::uint64_t r = 0; r < p; ++r) {
    if (horner_mod(coeffs, r, p) == 0) roots.push_back(static_cast<std::uint32_t>(r));
  }
  return roots;
}

std::vector<std::size_t> row_reduce(std::vector<std::vector<FieldElement>>& rows, std::size_t ncols) {
  check_rows(rows, ncols);
  std::vector<std::size_t> pivots;
  const bool wide = rows.size() * ncols >= kParallelThreshold;
  std::size_t next = 0;
  for (std::size_t col = 0; col < ncols && next < rows.size(); ++col) {
    std::size_t p = find_pivot(rows, next, col);
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[next]);
    normalize_pivot_row(rows[next], col, ncols);
    const auto& pivot_row = rows[next];
    const long count = static_cast<long>(rows.size());
    const long skip = static_cast<long>(next);
#pragma omp parallel for schedule(static) if (wide)
    for (long r = 0; r < count; ++r) {
      if (r != skip) eliminate(rows[r], pivot_row, col, ncols);
    }
    pivots.push_back(col);
    ++next;
  }
  return pivots;
}

std::vector<std::size_t> row_reduce_serial(std::vector<std::vector<FieldElement>>& rows, std::size_t ncols) {
  check_rows(rows, ncols);
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t col = 0; col < ncols && next < rows.size(); ++col) {
    std::size_t p = find_pivot(rows, next, col);
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[next]);
    normalize_pivot_row(rows[next], col, ncols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next) eliminate(rows[r], rows[next], col, ncols);
    }
    pivots.push_back(col);
    ++next;
  }
  return pivots;
}

}  // namespace leonard::kernels

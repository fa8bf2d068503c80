#pragma once

// Data-parallel kernels. Each OpenMP kernel has a `_serial` twin that is the
// reference implementation; the test suite checks they agree entry for entry
// and bench/ compares their throughput.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "leonard/matrix.hpp"

namespace leonard::kernels {

/// Work sizes below this run on one thread; OpenMP start-up dominates otherwise.
inline constexpr std::size_t kParallelThreshold = 4096;

Matrix mat_mul(const Matrix& lhs, const Matrix& rhs);
Matrix mat_mul_serial(const Matrix& lhs, const Matrix& rhs);

/// Table t with t[i*n + j] = 1 iff left[i] * middle * right[j] is the zero matrix.
std::vector<std::uint8_t> vanishing_products(std::span<const Matrix> left, const Matrix& middle,
                                             std::span<const Matrix> right);
std::vector<std::uint8_t> vanishing_products_serial(std::span<const Matrix> left, const Matrix& middle,
                                                    std::span<const Matrix> right);

/// Every residue r in [0, p) with sum coeffs[k] r^k == 0 (mod p), ascending.
/// `coeffs` are residues, lowest degree first.
std::vector<std::uint32_t> gf_root_scan(std::span<const std::uint32_t> coeffs, std::uint32_t p);
std::vector<std::uint32_t> gf_root_scan_serial(std::span<const std::uint32_t> coeffs, std::uint32_t p);

/// In-place reduced row echelon form of `rows` (each of length `ncols`).
/// Returns the pivot column of each nonzero row; zero rows end up at the bottom.
std::vector<std::size_t> row_reduce(std::vector<std::vector<FieldElement>>& rows, std::size_t ncols);
std::vector<std::size_t> row_reduce_serial(std::vector<std::vector<FieldElement>>& rows, std::size_t ncols);

}  // namespace leonard::kernels

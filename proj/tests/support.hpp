#pragma once

// Seeded generators and independent reference computations for the tests.
// Nothing here calls the library's elimination, kernels or spectral code.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "leonard/leonard.hpp"

namespace support {

using leonard::FieldDescriptor;
using leonard::FieldElement;
using leonard::Matrix;
using leonard::Vector;
using Rows = std::vector<std::vector<FieldElement>>;

inline FieldDescriptor gf(std::uint64_t p) { return FieldDescriptor::prime_field(p); }
inline FieldDescriptor q() { return FieldDescriptor::rationals(); }
inline FieldElement el(const FieldDescriptor& f, long long v) { return FieldElement(f, v); }
inline FieldElement el(const FieldDescriptor& f, int v) { return FieldElement(f, static_cast<long long>(v)); }
inline FieldElement el(const FieldDescriptor& f, const char* s) { return FieldElement::parse(f, s); }

inline std::vector<FieldElement> els(const FieldDescriptor& f, std::initializer_list<long long> vs) {
  std::vector<FieldElement> out;
  for (auto v : vs) out.emplace_back(f, v);
  return out;
}

inline Matrix mat(const FieldDescriptor& f, std::initializer_list<std::initializer_list<long long>> rows) {
  Rows r;
  for (const auto& row : rows) {
    r.emplace_back();
    for (auto v : row) r.back().emplace_back(f, v);
  }
  return Matrix::from_rows(f, r);
}

inline Matrix from_rows(const FieldDescriptor& f, const Rows& r) { return Matrix::from_rows(f, r); }

inline Rows rows_of(const Matrix& m) {
  Rows out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) out[i].push_back(m(i, j));
  }
  return out;
}

// ---------------------------------------------------------------------------
// generators

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t next() { return rng_(); }
  long long range(long long lo, long long hi) { return lo + static_cast<long long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }

  FieldElement element(const FieldDescriptor& f) {
    if (f.is_rational()) return FieldElement(f, range(-5, 5));
    return FieldElement(f, static_cast<long long>(rng_() % f.modulus()));
  }

  FieldElement nonzero(const FieldDescriptor& f) {
    for (;;) {
      FieldElement x = element(f);
      if (!x.is_zero()) return x;
    }
  }

  Matrix matrix(const FieldDescriptor& f, std::size_t n) {
    std::vector<FieldElement> flat;
    for (std::size_t k = 0; k < n * n; ++k) flat.push_back(element(f));
    return Matrix(f, n, std::move(flat));
  }

  Matrix invertible(const FieldDescriptor& f, std::size_t n);

  std::vector<FieldElement> distinct(const FieldDescriptor& f, std::size_t n) {
    std::vector<FieldElement> out;
    while (out.size() < n) {
      FieldElement x = f.is_rational() ? FieldElement(f, range(-20, 20)) : element(f);
      if (std::none_of(out.begin(), out.end(), [&](const FieldElement& y) { return y == x; })) out.push_back(x);
    }
    return out;
  }

  /// S diag(theta) S^{-1} for random S and distinct theta; also returns theta.
  std::pair<Matrix, std::vector<FieldElement>> multiplicity_free(const FieldDescriptor& f, std::size_t n);

 private:
  std::mt19937_64 rng_;
};

// ---------------------------------------------------------------------------
// reference linear algebra (plain Gauss-Jordan, naive products)

inline Matrix product(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.dim();
  std::vector<FieldElement> flat;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      FieldElement s = FieldElement::zero(a.field());
      for (std::size_t k = 0; k < n; ++k) s += a(i, k) * b(k, j);
      flat.push_back(s);
    }
  }
  return Matrix(a.field(), n, std::move(flat));
}

inline std::vector<FieldElement> apply(const Matrix& a, const std::vector<FieldElement>& v) {
  std::vector<FieldElement> out;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    FieldElement s = FieldElement::zero(a.field());
    for (std::size_t k = 0; k < a.dim(); ++k) s += a(i, k) * v[k];
    out.push_back(s);
  }
  return out;
}

/// Reduces in place, pivoting only in the first ncols columns; returns pivot columns.
inline std::vector<std::size_t> gauss_jordan(Rows& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const FieldElement inv = rows[r][c].inverse();
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      const FieldElement factor = rows[i][c];
      for (std::size_t k = 0; k < rows[i].size(); ++k) rows[i][k] -= factor * rows[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank_of(Rows rows) {
  if (rows.empty()) return 0;
  return gauss_jordan(rows, rows.front().size()).size();
}

inline std::size_t rank_of(const Matrix& m) { return rank_of(rows_of(m)); }

/// Basis of the solutions of rows * x = 0.
inline Rows null_vectors(Rows rows, std::size_t ncols) {
  const FieldDescriptor f = rows.front().front().field();
  const auto pivots = gauss_jordan(rows, ncols);
  Rows out;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<FieldElement> x(ncols, FieldElement::zero(f));
    x[free] = FieldElement::one(f);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -rows[r][free];
    out.push_back(std::move(x));
  }
  return out;
}

inline std::optional<Matrix> invert(const Matrix& m) {
  const std::size_t n = m.dim();
  const FieldDescriptor f = m.field();
  Rows aug = rows_of(m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i].push_back(i == j ? FieldElement::one(f) : FieldElement::zero(f));
  }
  if (gauss_jordan(aug, n).size() != n) return std::nullopt;
  Rows inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[i].assign(aug[i].begin() + static_cast<long>(n), aug[i].end());
  return Matrix::from_rows(f, inv);
}

/// Leibniz expansion.
inline FieldElement det(const Matrix& m) {
  const std::size_t n = m.dim();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  FieldElement total = FieldElement::zero(m.field());
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    FieldElement term = FieldElement::one(m.field());
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += inversions % 2 == 0 ? term : -term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Coefficients (low to high) of det(x I - m), by interpolation at x = 0..n.
inline std::vector<FieldElement> char_poly_by_interpolation(const Matrix& m) {
  const std::size_t n = m.dim();
  const FieldDescriptor f = m.field();
  Rows system;
  for (std::size_t k = 0; k <= n; ++k) {
    const FieldElement x(f, static_cast<long long>(k));
    std::vector<FieldElement> row;
    FieldElement power = FieldElement::one(f);
    for (std::size_t e = 0; e <= n; ++e) {
      row.push_back(power);
      power *= x;
    }
    row.push_back(det(x * Matrix::identity(f, n) - m));
    system.push_back(std::move(row));
  }
  gauss_jordan(system, n + 1);
  std::vector<FieldElement> out;
  for (std::size_t e = 0; e <= n; ++e) out.push_back(system[e][n + 1]);
  return out;
}

inline Matrix shift(const Matrix& m, const FieldElement& c) {
  return m - c * Matrix::identity(m.field(), m.dim());
}

/// A vector spanning ker(m - theta I), which must be one-dimensional.
inline std::vector<FieldElement> eigenvector(const Matrix& m, const FieldElement& theta) {
  Rows ker = null_vectors(rows_of(shift(m, theta)), m.dim());
  return ker.size() == 1 ? ker.front() : std::vector<FieldElement>{};
}

/// Columns spanning the eigenspaces of m, in the given order.
inline std::optional<Matrix> eigenvector_matrix(const Matrix& m, const std::vector<FieldElement>& order) {
  const std::size_t n = m.dim();
  Rows cols;
  for (const auto& t : order) {
    auto v = eigenvector(m, t);
    if (v.empty()) return std::nullopt;
    cols.push_back(std::move(v));
  }
  Rows rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i].push_back(cols[j][i]);
  }
  return Matrix::from_rows(m.field(), rows);
}

/// vanishes(i, j) iff F_i x F_j = 0, read off B = P^{-1} x P in the eigenbasis
/// of `other`: the product is B_ij times a rank-one matrix.
inline std::vector<std::uint8_t> pattern_via_eigenbasis(const Matrix& x, const Matrix& other, const std::vector<FieldElement>& order) {
  const Matrix p = *eigenvector_matrix(other, order);
  const Matrix b = product(product(*invert(p), x), p);
  std::vector<std::uint8_t> out;
  for (std::size_t i = 0; i < b.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) out.push_back(b(i, j).is_zero() ? 1 : 0);
  }
  return out;
}

inline bool lower_shape(const std::vector<std::uint8_t>& t, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i > j + 1 && !t[i * n + j]) return false;
      if (i == j + 1 && t[i * n + j]) return false;
    }
  }
  return true;
}

inline bool upper_shape(const std::vector<std::uint8_t>& t, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j > i + 1 && !t[i * n + j]) return false;
      if (j == i + 1 && t[i * n + j]) return false;
    }
  }
  return true;
}

/// Split existence by the pattern route through eigenbases.
inline bool split_by_patterns(const Matrix& a, const Matrix& a_star, const std::vector<FieldElement>& theta,
                              const std::vector<FieldElement>& theta_star) {
  const std::size_t n = a.dim();
  return lower_shape(pattern_via_eigenbasis(a, a_star, theta_star), n) && upper_shape(pattern_via_eigenbasis(a_star, a, theta), n);
}

/// Split existence from the definition: U_i is forced to be
/// (E*_0 V + ... + E*_i V) ∩ (E_i V + ... + E_d V); check it is a line for
/// every i, the lines are independent, and A, A* act by raising/lowering
/// onto the neighbouring line (nonzero, so every split sequence entry is nonzero).
inline bool split_by_definition(const Matrix& a, const Matrix& a_star, const std::vector<FieldElement>& theta,
                                const std::vector<FieldElement>& theta_star) {
  const std::size_t n = a.dim();
  const FieldDescriptor f = a.field();
  Rows v, vs;
  for (const auto& t : theta) v.push_back(eigenvector(a, t));
  for (const auto& t : theta_star) vs.push_back(eigenvector(a_star, t));
  Rows u;
  for (std::size_t i = 0; i < n; ++i) {
    // columns: v*_0..v*_i then -v_i..-v_d
    Rows system(n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t k = 0; k <= i; ++k) system[r].push_back(vs[k][r]);
      for (std::size_t k = i; k < n; ++k) system[r].push_back(-v[k][r]);
    }
    Rows sol = null_vectors(system, system[0].size());
    if (sol.size() != 1) return false;
    std::vector<FieldElement> ui(n, FieldElement::zero(f));
    for (std::size_t k = 0; k <= i; ++k) {
      for (std::size_t r = 0; r < n; ++r) ui[r] += sol[0][k] * vs[k][r];
    }
    u.push_back(std::move(ui));
  }
  if (rank_of(u) != n) return false;
  auto in_line = [&](const std::vector<FieldElement>& w, const std::vector<FieldElement>* line) {
    Rows both{w};
    if (!line) return rank_of(both) == 0;
    both.push_back(*line);
    return rank_of(Rows{w}) == 1 && rank_of(both) == 1;
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (!in_line(support::apply(shift(a, theta[i]), u[i]), i + 1 < n ? &u[i + 1] : nullptr)) return false;
    if (!in_line(support::apply(shift(a_star, theta_star[i]), u[i]), i > 0 ? &u[i - 1] : nullptr)) return false;
  }
  return true;
}

inline Matrix Gen::invertible(const FieldDescriptor& f, std::size_t n) {
  for (;;) {
    Matrix m = matrix(f, n);
    if (rank_of(m) == n) return m;
  }
}

inline std::pair<Matrix, std::vector<FieldElement>> Gen::multiplicity_free(const FieldDescriptor& f, std::size_t n) {
  std::vector<FieldElement> theta = distinct(f, n);
  const Matrix s = invertible(f, n);
  return {product(product(s, Matrix::diagonal(theta)), *invert(s)), theta};
}

}  // namespace support

#include "leonard/linalg.hpp"

#include <algorithm>

#include "leonard/error.hpp"
#include "leonard/kernels.hpp"

namespace leonard {

namespace {

using Rows = std::vector<std::vector<FieldElement>>;

Rows rows_of(std::span<const Vector> vectors) {
  Rows rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) rows.emplace_back(v.entries().begin(), v.entries().end());
  return rows;
}

Rows rows_of(const Matrix& m) {
  Rows rows(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) rows[i].assign(m.entries().begin() + i * m.dim(), m.entries().begin() + (i + 1) * m.dim());
  return rows;
}

std::vector<Vector> nullspace_of_reduced(const Rows& rows, const std::vector<std::size_t>& pivots, std::size_t ncols,
                                         FieldDescriptor field) {
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldElement> x(ncols, FieldElement::zero(field));
    x[free] = FieldElement::one(field);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -rows[r][free];
    basis.emplace_back(field, std::move(x));
  }
  return basis;
}

// ---- rational roots -------------------------------------------------------

// Number of sign changes in the Sturm chain at x, zeros skipped.
std::size_t sign_variations(const std::vector<Polynomial>& chain, const FieldElement& x) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& s : chain) {
    int sign = sgn(s(x).rational());
    if (sign == 0) continue;
    if (last != 0 && sign != last) ++changes;
    last = sign;
  }
  return changes;
}

std::vector<Polynomial> sturm_chain(const Polynomial& s) {
  std::vector<Polynomial> chain{s, s.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    Polynomial r = chain[chain.size() - 2].divmod(chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(FieldElement(s.field(), -1LL) * r);
  }
  return chain;
}

FieldElement half_above(FieldDescriptor q, const mpz_class& k) {
  return FieldElement(q, mpq_class(2 * k + 1, 2));
}

// Integer roots of the squarefree polynomial s within [lo, hi].
void integer_roots(const std::vector<Polynomial>& chain, const mpz_class& lo, const mpz_class& hi,
                   std::vector<mpz_class>& out) {
  const FieldDescriptor q = chain.front().field();
  const std::size_t left = sign_variations(chain, half_above(q, lo - 1));
  const std::size_t right = sign_variations(chain, half_above(q, hi));
  if (left <= right) return;
  if (lo == hi) {
    if (chain.front()(FieldElement(q, lo)).is_zero()) out.push_back(lo);
    return;
  }
  mpz_class mid;
  mpz_fdiv_q_2exp(mid.get_mpz_t(), mpz_class(lo + hi).get_mpz_t(), 1);
  integer_roots(chain, lo, mid, out);
  integer_roots(chain, mid + 1, hi, out);
}

std::vector<FieldElement> distinct_rational_roots(const Polynomial& p) {
  const FieldDescriptor q = p.field();
  std::vector<FieldElement> roots;

  std::size_t low = 0;
  while (p.coefficient(low).is_zero()) ++low;
  if (low > 0) roots.push_back(FieldElement::zero(q));
  std::vector<FieldElement> shifted(p.coefficients().begin() + static_cast<long>(low), p.coefficients().end());
  const std::size_t n = shifted.size() - 1;
  if (n == 0) return roots;

  // Integer coefficients c_k, then the monic g(y) = c_n^{n-1} p(y / c_n).
  mpz_class denom_lcm = 1;
  for (const auto& c : shifted) mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), c.rational().get_den_mpz_t());
  std::vector<mpz_class> c(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    mpq_class scaled = shifted[k].rational() * denom_lcm;
    c[k] = scaled.get_num();
  }
  const mpz_class lead = c[n];
  std::vector<FieldElement> g(n + 1, FieldElement::zero(q));
  mpz_class power = 1;  // lead^(n-1-k), built from k = n-1 downward
  mpz_class bound = 0;
  for (std::size_t k = n; k-- > 0;) {
    mpz_class gk = c[k] * power;
    g[k] = FieldElement(q, gk);
    mpz_class mag = abs(gk);
    if (mag > bound) bound = mag;
    power *= lead;
  }
  g[n] = FieldElement::one(q);
  bound += 1;

  Polynomial monic_g(q, std::move(g));
  Polynomial squarefree = monic_g.divmod(gcd(monic_g, monic_g.derivative())).first;
  std::vector<mpz_class> ys;
  integer_roots(sturm_chain(squarefree), -bound, bound, ys);
  for (const auto& y : ys) roots.push_back(FieldElement(q, mpq_class(y, lead)));
  return roots;
}

std::size_t multiplicity(Polynomial p, const FieldElement& root) {
  const Polynomial factor = Polynomial::linear_factor(root);
  std::size_t m = 0;
  while (p.degree() >= 1) {
    auto [quot, rem] = p.divmod(factor);
    if (!rem.is_zero()) break;
    p = std::move(quot);
    ++m;
  }
  return m;
}

}  // namespace

Matrix mat_mul(const Matrix& lhs, const Matrix& rhs) { return kernels::mat_mul(lhs, rhs); }

std::vector<Vector> nullspace(std::span<const Vector> rows, std::size_t ncols) {
  if (rows.empty()) throw Error(ErrorKind::DimMismatch, "nullspace needs at least one row to fix the field");
  FieldDescriptor field = rows.front().field();
  Rows work = rows_of(rows);
  auto pivots = kernels::row_reduce(work, ncols);
  return nullspace_of_reduced(work, pivots, ncols, field);
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  Rows work = rows_of(m);
  auto pivots = kernels::row_reduce(work, m.dim());
  return nullspace_of_reduced(work, pivots, m.dim(), m.field());
}

std::size_t rank(const Matrix& m) {
  Rows work = rows_of(m);
  return kernels::row_reduce(work, m.dim()).size();
}

std::size_t rank(std::span<const Vector> vectors) {
  if (vectors.empty()) return 0;
  Rows work = rows_of(vectors);
  return kernels::row_reduce(work, vectors.front().dim()).size();
}

Matrix inverse(const Matrix& m) {
  const std::size_t n = m.dim();
  const FieldDescriptor f = m.field();
  Rows work(n);
  for (std::size_t i = 0; i < n; ++i) {
    work[i].reserve(2 * n);
    for (std::size_t j = 0; j < n; ++j) work[i].push_back(m(i, j));
    for (std::size_t j = 0; j < n; ++j) work[i].push_back(i == j ? FieldElement::one(f) : FieldElement::zero(f));
  }
  auto pivots = kernels::row_reduce(work, 2 * n);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw Error(ErrorKind::Singular, "matrix is singular");
  std::vector<FieldElement> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) flat.insert(flat.end(), work[i].begin() + static_cast<long>(n), work[i].end());
  return Matrix(f, n, std::move(flat));
}

Polynomial char_poly_berkowitz(const Matrix& m) {
  const std::size_t n = m.dim();
  const FieldDescriptor f = m.field();
  // Coefficients highest degree first while iterating.
  std::vector<FieldElement> vect{FieldElement::one(f), -m(0, 0)};
  for (std::size_t r = 1; r < n; ++r) {
    // Leading r x r block M, column C = m[0..r)[r], row R = m[r][0..r), corner a = m[r][r].
    std::vector<FieldElement> q(r + 2, FieldElement::zero(f));
    q[0] = FieldElement::one(f);
    q[1] = -m(r, r);
    std::vector<FieldElement> mc(r, FieldElement::zero(f));  // M^k C
    for (std::size_t i = 0; i < r; ++i) mc[i] = m(i, r);
    for (std::size_t k = 2; k < r + 2; ++k) {
      FieldElement dot = FieldElement::zero(f);
      for (std::size_t i = 0; i < r; ++i) dot += m(r, i) * mc[i];
      q[k] = -dot;
      std::vector<FieldElement> next(r, FieldElement::zero(f));
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) next[i] += m(i, j) * mc[j];
      }
      mc = std::move(next);
    }
    // Lower-triangular Toeplitz (r+2) x (r+1) with first column q, times vect.
    std::vector<FieldElement> out(r + 2, FieldElement::zero(f));
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, r); ++j) out[i] += q[i - j] * vect[j];
    }
    vect = std::move(out);
  }
  std::reverse(vect.begin(), vect.end());
  return Polynomial(f, std::move(vect));
}

Polynomial char_poly_faddeev_leverrier(const Matrix& m) {
  const std::size_t n = m.dim();
  const FieldDescriptor f = m.field();
  if (!f.is_rational() && f.modulus() <= n) {
    throw Error(ErrorKind::DivisionByZero, "Faddeev-LeVerrier divides by 1.." + std::to_string(n) + " in " + f.to_string());
  }
  std::vector<FieldElement> c(n + 1, FieldElement::zero(f));
  c[n] = FieldElement::one(f);
  Matrix mk = Matrix::zero(f, n);
  const Matrix id = Matrix::identity(f, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + c[n - k + 1] * id;
    c[n - k] = -(m * mk).trace() / FieldElement(f, static_cast<long long>(k));
  }
  return Polynomial(f, std::move(c));
}

Polynomial char_poly(const Matrix& m) {
  return m.field().is_rational() ? char_poly_faddeev_leverrier(m) : char_poly_berkowitz(m);
}

std::vector<Root> roots_in_field(const Polynomial& p, const RootSearchConfig& config) {
  if (p.is_zero()) throw Error(ErrorKind::InvariantViolation, "roots of the zero polynomial");
  const FieldDescriptor f = p.field();
  std::vector<FieldElement> distinct;
  if (f.is_rational()) {
    distinct = distinct_rational_roots(p);
  } else {
    if (f.modulus() > config.max_exhaustive_modulus) {
      throw Error(ErrorKind::ModulusTooLarge, "exhaustive root search refused for p = " + std::to_string(f.modulus()) +
                                                  " (bound " + std::to_string(config.max_exhaustive_modulus) + ")");
    }
    std::vector<std::uint32_t> residues;
    residues.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) residues.push_back(c.residue());
    for (auto r : kernels::gf_root_scan(residues, f.modulus())) distinct.emplace_back(f, static_cast<long long>(r));
  }
  std::sort(distinct.begin(), distinct.end(), canonical_less);
  std::vector<Root> out;
  out.reserve(distinct.size());
  for (auto& r : distinct) {
    std::size_t mult = multiplicity(p, r);
    out.push_back(Root{std::move(r), mult});
  }
  return out;
}

Matrix eval_poly_at_matrix(const Polynomial& p, const Matrix& m) {
  if (!(p.field() == m.field())) throw Error(ErrorKind::DescriptorMismatch, "polynomial and matrix fields differ");
  Matrix acc = Matrix::zero(m.field(), m.dim());
  const Matrix id = Matrix::identity(m.field(), m.dim());
  const auto& coeffs = p.coefficients();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * m + *it * id;
  return acc;
}

std::vector<Vector> span_basis(std::span<const Vector> vectors) {
  if (vectors.empty()) return {};
  const FieldDescriptor f = vectors.front().field();
  Rows work = rows_of(vectors);
  auto pivots = kernels::row_reduce(work, vectors.front().dim());
  std::vector<Vector> basis;
  basis.reserve(pivots.size());
  for (std::size_t r = 0; r < pivots.size(); ++r) basis.emplace_back(f, std::move(work[r]));
  return basis;
}

bool span_contains(std::span<const Vector> super, std::span<const Vector> sub) {
  std::vector<Vector> joint(super.begin(), super.end());
  joint.insert(joint.end(), sub.begin(), sub.end());
  return rank(super) == rank(joint);
}

bool same_span(std::span<const Vector> lhs, std::span<const Vector> rhs) {
  return rank(lhs) == rank(rhs) && span_contains(lhs, rhs);
}

std::vector<Vector> intersect(std::span<const Vector> lhs, std::span<const Vector> rhs) {
  std::vector<Vector> lb = span_basis(lhs);
  std::vector<Vector> rb = span_basis(rhs);
  if (lb.empty() || rb.empty()) return {};
  const FieldDescriptor f = lb.front().field();
  const std::size_t n = lb.front().dim();
  const std::size_t unknowns = lb.size() + rb.size();
  std::vector<Vector> equations;
  equations.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<FieldElement> row;
    row.reserve(unknowns);
    for (const auto& v : lb) row.push_back(v[i]);
    for (const auto& v : rb) row.push_back(-v[i]);
    equations.emplace_back(f, std::move(row));
  }
  std::vector<Vector> common;
  for (const auto& sol : nullspace(equations, unknowns)) {
    Vector acc = Vector::zero(f, n);
    for (std::size_t k = 0; k < lb.size(); ++k) {
      if (!sol[k].is_zero()) acc = acc + sol[k] * lb[k];
    }
    common.push_back(std::move(acc));
  }
  return span_basis(common);
}

std::vector<Vector> column_space(const Matrix& m) {
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < m.dim(); ++j) {
    Vector c = m.column(j);
    if (!c.is_zero()) cols.push_back(std::move(c));
  }
  return cols;
}

bool colinear(const Vector& u, const Vector& v) { return u.normalized() == v.normalized(); }

}  // namespace leonard

#include "leonard/splitdecomp.hpp"

#include <algorithm>

#include "leonard/error.hpp"
#include "leonard/kernels.hpp"
#include "leonard/linalg.hpp"

namespace leonard {

namespace {

std::vector<Vector> eigenvectors(const SpectralData& sd) {
  std::vector<Vector> out;
  out.reserve(sd.dim());
  for (std::size_t i = 0; i < sd.dim(); ++i) out.push_back(eigenspace(sd, i));
  return out;
}

bool spans_line(const Matrix& m, const Vector& u) {
  std::vector<Vector> image = column_space(m);
  std::vector<Vector> line{u};
  return !image.empty() && same_span(image, line);
}

}  // namespace

bool ZeroPattern::is_symmetric() const {
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

std::string_view to_string(PatternClass c) noexcept {
  switch (c) {
    case PatternClass::LowerPattern: return "LowerPattern";
    case PatternClass::UpperPattern: return "UpperPattern";
    case PatternClass::IrreducibleTridiagonal: return "IrreducibleTridiagonal";
    case PatternClass::Other: return "Other";
  }
  return "Other";
}

bool satisfies_lower(const ZeroPattern& zp) {
  for (std::size_t i = 0; i < zp.dim; ++i) {
    for (std::size_t j = 0; j < zp.dim; ++j) {
      if (i > j + 1 && !zp(i, j)) return false;
      if (i == j + 1 && zp(i, j)) return false;
    }
  }
  return true;
}

bool satisfies_upper(const ZeroPattern& zp) {
  for (std::size_t i = 0; i < zp.dim; ++i) {
    for (std::size_t j = 0; j < zp.dim; ++j) {
      if (j > i + 1 && !zp(i, j)) return false;
      if (j == i + 1 && zp(i, j)) return false;
    }
  }
  return true;
}

PatternClass classify_pattern(const ZeroPattern& zp) {
  const bool lower = satisfies_lower(zp);
  const bool upper = satisfies_upper(zp);
  if (lower && upper) return PatternClass::IrreducibleTridiagonal;
  if (lower) return PatternClass::LowerPattern;
  if (upper) return PatternClass::UpperPattern;
  return PatternClass::Other;
}

ZeroPattern zero_pattern(const Matrix& a, const SpectralData& other) {
  if (a.dim() != other.dim()) throw Error(ErrorKind::DimMismatch, "matrix and spectral data differ in dimension");
  if (!(a.field() == other.matrix.field())) throw Error(ErrorKind::DescriptorMismatch, "matrix and spectral data differ in field");
  return ZeroPattern{a.dim(), kernels::vanishing_products(other.idempotents, a, other.idempotents)};
}

OrderingPair OrderingPair::with_theta_reversed() const {
  OrderingPair out = *this;
  std::reverse(out.theta_order.begin(), out.theta_order.end());
  return out;
}

SpectralPair spectral_pair(const Matrix& a, const Matrix& a_star, const std::optional<OrderingPair>& orderings) {
  require_same_shape(a, a_star);
  if (!orderings) return SpectralPair{spectral_data(a), spectral_data(a_star)};
  return SpectralPair{spectral_data(a, std::span<const FieldElement>(orderings->theta_order)),
                      spectral_data(a_star, std::span<const FieldElement>(orderings->theta_star_order))};
}

bool exists_split(const SpectralPair& sp) {
  return satisfies_lower(zero_pattern(sp.a(), sp.dual)) && satisfies_upper(zero_pattern(sp.a_star(), sp.primal));
}

bool exists_split(const Matrix& a, const Matrix& a_star, const OrderingPair& orderings) {
  return exists_split(spectral_pair(a, a_star, orderings));
}

Matrix SplitCertificate::basis_matrix() const { return Matrix::from_columns(decomposition.spanners); }

SplitCertificate build_split(const SpectralPair& sp, const std::optional<FieldElement>& scale) {
  if (!exists_split(sp)) throw Error(ErrorKind::SplitDoesNotExist, "vanishing patterns do not admit a split decomposition");
  const Matrix& a = sp.a();
  const Matrix& a_star = sp.a_star();
  const auto& theta = sp.primal.eigenvalues;
  const auto& theta_star = sp.dual.eigenvalues;
  const std::size_t n = a.dim();
  auto violation = [](const std::string& what) { return Error(ErrorKind::InvariantViolation, "split certificate: " + what); };

  std::vector<Vector> u;
  u.reserve(n);
  Vector v0 = eigenspace(sp.dual, 0);
  if (scale) {
    if (scale->is_zero()) throw Error(ErrorKind::InvariantViolation, "zero scale for v*_0");
    v0 = *scale * v0;
  }
  u.push_back(v0);
  for (std::size_t i = 0; i + 1 < n; ++i) u.push_back(a.shifted(theta[i]) * u[i]);
  if (!(a.shifted(theta[n - 1]) * u[n - 1]).is_zero()) throw violation("(A - theta_d I) u_d != 0");
  if (rank(u) != n) throw violation("u_0..u_d are dependent");
  if (!(a_star.shifted(theta_star[0]) * u[0]).is_zero()) throw violation("(A* - theta*_0 I) u_0 != 0");

  std::vector<FieldElement> phi;
  phi.reserve(n - 1);
  for (std::size_t i = 1; i < n; ++i) {
    Vector w = a_star.shifted(theta_star[i]) * u[i];
    const std::size_t lead = u[i - 1].leading_index();
    FieldElement ratio = w[lead] / u[i - 1][lead];
    if (ratio.is_zero() || !(w == ratio * u[i - 1])) {
      throw violation("(A* - theta*_" + std::to_string(i) + " I) u_" + std::to_string(i) + " is not a nonzero multiple of u_" + std::to_string(i - 1));
    }
    phi.push_back(std::move(ratio));
  }
  return SplitCertificate{Decomposition{std::move(u)}, std::move(phi), sp.orderings()};
}

SplitCertificate build_split(const Matrix& a, const Matrix& a_star, const OrderingPair& orderings) {
  return build_split(spectral_pair(a, a_star, orderings));
}

bool split_uniqueness_witness(const SplitCertificate& cert, const SpectralPair& sp) {
  const Matrix& a = sp.a();
  const Matrix& a_star = sp.a_star();
  const auto& theta = sp.primal.eigenvalues;
  const auto& theta_star = sp.dual.eigenvalues;
  const std::size_t n = a.dim();
  const auto& u = cert.basis();
  if (u.size() != n) return false;

  Matrix forward = sp.dual.idempotents.front();  // prod_{h<i}(A - theta_h I) E*_0
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) forward = a.shifted(theta[i - 1]) * forward;
    Matrix backward = sp.primal.idempotents.back();  // prod_{h>i}(A* - theta*_h I) E_d
    for (std::size_t h = n - 1; h > i; --h) backward = a_star.shifted(theta_star[h]) * backward;
    if (!spans_line(forward, u[i]) || !spans_line(backward, u[i])) return false;
  }
  return true;
}

bool subspace_identities(const SplitCertificate& cert, const SpectralPair& sp) {
  const Matrix& a = sp.a();
  const Matrix& a_star = sp.a_star();
  const std::size_t n = a.dim();
  const auto& u = cert.basis();
  if (u.size() != n) return false;
  const std::vector<Vector> v = eigenvectors(sp.primal);
  const std::vector<Vector> v_star = eigenvectors(sp.dual);

  std::vector<Vector> krylov{v_star.front()};  // A^h v*_0
  std::vector<Vector> krylov_star{v.back()};   // A*^h v_d
  for (std::size_t h = 1; h < n; ++h) {
    krylov.push_back(a * krylov.back());
    krylov_star.push_back(a_star * krylov_star.back());
  }

  for (std::size_t i = 0; i < n; ++i) {
    std::span<const Vector> u_head(u.data(), i + 1);
    std::span<const Vector> u_tail(u.data() + i, n - i);
    std::span<const Vector> dual_head(v_star.data(), i + 1);
    std::span<const Vector> primal_tail(v.data() + i, n - i);
    if (!same_span(u_head, std::span<const Vector>(krylov.data(), i + 1))) return false;
    if (!same_span(u_head, dual_head)) return false;
    if (!same_span(u_tail, std::span<const Vector>(krylov_star.data(), n - i))) return false;
    if (!same_span(u_tail, primal_tail)) return false;
    std::vector<Vector> line{u[i]};
    if (!same_span(line, intersect(dual_head, primal_tail))) return false;
  }
  return true;
}

Matrix eigenbasis(const SpectralData& sd) {
  std::vector<Vector> cols = eigenvectors(sd);
  return Matrix::from_columns(cols);
}

Matrix in_eigenbasis(const Matrix& a, const SpectralData& sd) {
  Matrix p = eigenbasis(sd);
  return inverse(p) * a * p;
}

std::vector<Polynomial> graded_polynomials(const Matrix& a, const SpectralData& other) {
  if (!satisfies_lower(zero_pattern(a, other))) {
    throw Error(ErrorKind::PatternViolation, "E'_i A E'_j lacks the lower vanishing pattern");
  }
  const FieldDescriptor f = a.field();
  const std::size_t n = a.dim();
  const Matrix b = in_eigenbasis(a, other);
  const Polynomial lambda = Polynomial::variable(f);

  std::vector<Polynomial> fs{Polynomial::constant(FieldElement::one(f))};
  for (std::size_t j = 0; j + 1 < n; ++j) {
    Polynomial next = lambda * fs[j];
    for (std::size_t i = 0; i <= j; ++i) next = next - b(i, j) * fs[i];
    fs.push_back(b(j + 1, j).inverse() * next);
  }

  const std::vector<Vector> vs = eigenvectors(other);
  for (std::size_t i = 0; i < n; ++i) {
    if (fs[i].degree() != static_cast<int>(i)) {
      throw Error(ErrorKind::InvariantViolation, "graded polynomial f_" + std::to_string(i) + " has wrong degree");
    }
    Vector image = eval_poly_at_matrix(fs[i], a) * vs.front();
    if (image.is_zero() || !colinear(image, vs[i])) {
      throw Error(ErrorKind::InvariantViolation, "f_" + std::to_string(i) + "(A) v_0 does not span eigenspace " + std::to_string(i));
    }
  }
  return fs;
}

bool iso_to_module_check(const Matrix& a, const SpectralData& other) {
  std::vector<Vector> krylov{eigenspace(other, 0)};
  for (std::size_t h = 1; h < a.dim(); ++h) krylov.push_back(a * krylov.back());
  return rank(krylov) == a.dim();
}

}  // namespace leonard

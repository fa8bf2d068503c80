#include "leonard/spectral.hpp"

#include <algorithm>

#include "leonard/error.hpp"

namespace leonard {

namespace {

void verify(const SpectralData& sd) {
  const Matrix& a = sd.matrix;
  const std::size_t n = a.dim();
  const FieldDescriptor f = a.field();
  Matrix sum = Matrix::zero(f, n);
  Matrix weighted = Matrix::zero(f, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix& e = sd.idempotents[i];
    if (!(a * e == sd.eigenvalues[i] * e)) {
      throw Error(ErrorKind::InvariantViolation, "A E_" + std::to_string(i) + " != theta_" + std::to_string(i) + " E_" + std::to_string(i));
    }
    for (std::size_t j = 0; j < n; ++j) {
      Matrix prod = e * sd.idempotents[j];
      bool ok = i == j ? prod == e : prod.is_zero();
      if (!ok) throw Error(ErrorKind::InvariantViolation, "E_i E_j != delta_ij E_i at i=" + std::to_string(i) + ", j=" + std::to_string(j));
    }
    if (rank(e) != 1) throw Error(ErrorKind::InvariantViolation, "E_" + std::to_string(i) + " does not have rank 1");
    sum = sum + e;
    weighted = weighted + sd.eigenvalues[i] * e;
  }
  if (!(sum == Matrix::identity(f, n))) throw Error(ErrorKind::InvariantViolation, "idempotents do not sum to I");
  if (!(weighted == a)) throw Error(ErrorKind::InvariantViolation, "A != sum theta_i E_i");
}

}  // namespace

SpectralData SpectralData::reversed() const {
  SpectralData out = *this;
  std::reverse(out.eigenvalues.begin(), out.eigenvalues.end());
  std::reverse(out.idempotents.begin(), out.idempotents.end());
  return out;
}

std::vector<FieldElement> canonical_eigenvalues(const Matrix& m, const RootSearchConfig& config) {
  std::vector<Root> roots = roots_in_field(char_poly(m), config);
  std::size_t total = 0;
  for (const auto& r : roots) {
    if (r.multiplicity != 1) {
      throw Error(ErrorKind::NotMultiplicityFree, "eigenvalue " + r.value.to_string() + " has multiplicity " + std::to_string(r.multiplicity));
    }
    ++total;
  }
  if (total != m.dim()) {
    throw Error(ErrorKind::NotMultiplicityFree, "only " + std::to_string(total) + " of " + std::to_string(m.dim()) + " eigenvalues lie in " + m.field().to_string());
  }
  std::vector<FieldElement> out;
  out.reserve(roots.size());
  for (auto& r : roots) out.push_back(std::move(r.value));
  return out;
}

bool is_multiplicity_free(const Matrix& m, const RootSearchConfig& config) {
  try {
    canonical_eigenvalues(m, config);
    return true;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotMultiplicityFree) return false;
    throw;
  }
}

SpectralData spectral_data(const Matrix& m, std::optional<std::span<const FieldElement>> order,
                           const RootSearchConfig& config) {
  std::vector<FieldElement> eig = canonical_eigenvalues(m, config);
  if (order) {
    if (order->size() != eig.size()) {
      throw Error(ErrorKind::BadOrdering, "ordering has " + std::to_string(order->size()) + " entries, expected " + std::to_string(eig.size()));
    }
    std::vector<FieldElement> given(order->begin(), order->end());
    for (const auto& x : given) {
      if (!(x.field() == m.field())) throw Error(ErrorKind::DescriptorMismatch, "ordering entry over another field");
    }
    std::vector<FieldElement> sorted = given;
    std::sort(sorted.begin(), sorted.end(), canonical_less);
    if (!(sorted == eig)) throw Error(ErrorKind::BadOrdering, "ordering is not a permutation of the eigenvalues");
    eig = std::move(given);
  }

  const std::size_t n = eig.size();
  std::vector<Matrix> shifted;
  shifted.reserve(n);
  for (const auto& t : eig) shifted.push_back(m.shifted(t));

  std::vector<Matrix> idem;
  idem.reserve(n);
  const Matrix id = Matrix::identity(m.field(), n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix e = id;
    FieldElement denom = FieldElement::one(m.field());
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      e = e * shifted[j];
      denom *= eig[i] - eig[j];
    }
    idem.push_back(denom.inverse() * e);
  }
  SpectralData sd{m, std::move(eig), std::move(idem)};
  verify(sd);
  return sd;
}

Vector eigenspace(const SpectralData& sd, std::size_t i) {
  if (i >= sd.dim()) {
    throw Error(ErrorKind::IndexOutOfRange, "eigenspace index " + std::to_string(i) + " with d+1 = " + std::to_string(sd.dim()));
  }
  const Matrix& e = sd.idempotents[i];
  for (std::size_t j = 0; j < e.dim(); ++j) {
    Vector c = e.column(j);
    if (!c.is_zero()) return c.normalized();
  }
  throw Error(ErrorKind::InvariantViolation, "zero idempotent");
}

}  // namespace leonard

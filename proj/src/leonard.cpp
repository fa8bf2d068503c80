#include "leonard/leonard.hpp"

#include <algorithm>

#include "leonard/error.hpp"
#include "leonard/linalg.hpp"

namespace leonard {

namespace {

using Index = std::pair<std::size_t, std::size_t>;

// First (i, j) in row-major order breaking the lower (or upper) pattern.
std::optional<Index> pattern_violation(const ZeroPattern& zp, bool lower) {
  for (std::size_t i = 0; i < zp.dim; ++i) {
    for (std::size_t j = 0; j < zp.dim; ++j) {
      const std::size_t below = lower ? i : j;
      const std::size_t above = lower ? j : i;
      if (below > above + 1 && !zp(i, j)) return Index{i, j};
      if (below == above + 1 && zp(i, j)) return Index{i, j};
    }
  }
  return std::nullopt;
}

SpectralData permuted(const SpectralData& sd, const std::vector<std::size_t>& perm) {
  SpectralData out = sd;
  for (std::size_t k = 0; k < perm.size(); ++k) {
    out.eigenvalues[k] = sd.eigenvalues[perm[k]];
    out.idempotents[k] = sd.idempotents[perm[k]];
  }
  return out;
}

// The two traversals of the support graph {i, j} with F_i X F_j != 0 or
// F_j X F_i != 0, when that graph is a Hamiltonian path; otherwise none.
std::vector<std::vector<std::size_t>> path_traversals(const ZeroPattern& zp) {
  const std::size_t n = zp.dim;
  std::vector<std::vector<std::size_t>> adj(n);
  std::size_t edges = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!zp(i, j) || !zp(j, i)) {
        adj[i].push_back(j);
        adj[j].push_back(i);
        ++edges;
      }
    }
  }
  if (edges != n - 1) return {};
  std::size_t start = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (adj[i].size() > 2) return {};
    if (adj[i].size() == 1 && start == n) start = i;
  }
  if (start == n) return {};
  std::vector<std::size_t> path{start};
  std::vector<bool> seen(n, false);
  seen[start] = true;
  while (path.size() < n) {
    std::size_t next = n;
    for (auto k : adj[path.back()]) {
      if (!seen[k]) next = k;
    }
    if (next == n) return {};  // disconnected
    seen[next] = true;
    path.push_back(next);
  }
  std::vector<std::size_t> back(path.rbegin(), path.rend());
  return {path, back};
}

Matrix lower_bidiagonal(std::span<const FieldElement> diag) {
  const std::size_t n = diag.size();
  const FieldDescriptor f = diag.front().field();
  std::vector<FieldElement> flat(n * n, FieldElement::zero(f));
  for (std::size_t i = 0; i < n; ++i) {
    flat[i * n + i] = diag[i];
    if (i > 0) flat[i * n + i - 1] = FieldElement::one(f);
  }
  return Matrix(f, n, std::move(flat));
}

Matrix upper_bidiagonal(std::span<const FieldElement> diag, std::span<const FieldElement> super) {
  const std::size_t n = diag.size();
  const FieldDescriptor f = diag.front().field();
  std::vector<FieldElement> flat(n * n, FieldElement::zero(f));
  for (std::size_t i = 0; i < n; ++i) {
    flat[i * n + i] = diag[i];
    if (i + 1 < n) flat[i * n + i + 1] = super[i];
  }
  return Matrix(f, n, std::move(flat));
}

template <class Eq>
bool all_distinct(const std::vector<FieldElement>& xs, Eq eq) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (eq(xs[i], xs[j])) return false;
    }
  }
  return true;
}

Matrix scaled_to_leading_one(const Matrix& m) {
  for (const auto& x : m.entries()) {
    if (!x.is_zero()) return x.inverse() * m;
  }
  return m;
}

Matrix matrix_from_flat(const Vector& v, std::size_t n) {
  return Matrix(v.field(), n, std::vector<FieldElement>(v.entries().begin(), v.entries().end()));
}

}  // namespace

std::string_view to_string(ProductCondition c) noexcept {
  switch (c) {
    case ProductCondition::DualLower: return "dual_lower";
    case ProductCondition::DualUpper: return "dual_upper";
    case ProductCondition::PrimalLower: return "primal_lower";
    case ProductCondition::PrimalUpper: return "primal_upper";
  }
  return "unknown";
}

std::string_view to_string(ParameterCondition c) noexcept {
  switch (c) {
    case ParameterCondition::CondI: return "CondI";
    case ParameterCondition::CondII: return "CondII";
    case ParameterCondition::CondIII: return "CondIII";
    case ParameterCondition::PhiZero: return "PhiZero";
  }
  return "unknown";
}

LeonardVerdict leonard_verdict(const SpectralPair& sp) {
  LeonardVerdict v;
  v.dual_pattern = zero_pattern(sp.a(), sp.dual);
  v.primal_pattern = zero_pattern(sp.a_star(), sp.primal);

  struct Check {
    ProductCondition condition;
    const ZeroPattern* pattern;
    bool lower;
  };
  const std::array<Check, 4> checks{{{ProductCondition::DualLower, &v.dual_pattern, true},
                                     {ProductCondition::DualUpper, &v.dual_pattern, false},
                                     {ProductCondition::PrimalLower, &v.primal_pattern, true},
                                     {ProductCondition::PrimalUpper, &v.primal_pattern, false}}};
  v.is_leonard_system = true;
  for (const auto& c : checks) {
    auto bad = pattern_violation(*c.pattern, c.lower);
    v.flags[static_cast<std::size_t>(c.condition)] = !bad.has_value();
    if (!bad) continue;
    v.is_leonard_system = false;
    if (v.failure_witness) continue;
    const bool dual = c.pattern == &v.dual_pattern;
    const SpectralData& sd = dual ? sp.dual : sp.primal;
    const Matrix& middle = dual ? sp.a() : sp.a_star();
    Matrix product = sd.idempotents[bad->first] * middle * sd.idempotents[bad->second];
    v.failure_witness = FailureWitness{bad->first, bad->second, c.condition, std::move(product)};
  }
  return v;
}

LeonardVerdict leonard_verdict(const Matrix& a, const Matrix& a_star, const OrderingPair& orderings) {
  return leonard_verdict(spectral_pair(a, a_star, orderings));
}

std::vector<OrderingPair> find_leonard_orderings(const Matrix& a, const Matrix& a_star) {
  const SpectralPair sp = spectral_pair(a, a_star);
  if (a.dim() == 1) return {sp.orderings()};
  const auto primal_paths = path_traversals(zero_pattern(a_star, sp.primal));
  const auto dual_paths = path_traversals(zero_pattern(a, sp.dual));
  std::vector<OrderingPair> found;
  for (const auto& tp : primal_paths) {
    for (const auto& dp : dual_paths) {
      SpectralPair candidate{permuted(sp.primal, tp), permuted(sp.dual, dp)};
      if (leonard_verdict(candidate).is_leonard_system) found.push_back(candidate.orderings());
    }
  }
  return found;
}

bool three_gives_four(const ConditionFlags& flags) noexcept {
  return std::count(flags.begin(), flags.end(), true) != 3;
}

Char1Legs char1_legs(const Matrix& a, const Matrix& a_star, const OrderingPair& orderings) {
  const SpectralPair sp = spectral_pair(a, a_star, orderings);
  return Char1Legs{exists_split(sp), exists_split(SpectralPair{sp.primal.reversed(), sp.dual})};
}

bool char1_check(const Matrix& a, const Matrix& a_star, const OrderingPair& orderings) {
  return char1_legs(a, a_star, orderings).holds();
}

Matrix Antiautomorphism::apply(const Matrix& x) const { return inverse(conjugator) * x.transpose() * conjugator; }

Antiautomorphism antiautomorphism_in_eigenbasis(const Matrix& a, const SpectralData& dual) {
  const std::size_t n = a.dim();
  const Matrix p = eigenbasis(dual);
  const Matrix p_inv = inverse(p);
  const Matrix b = p_inv * a * p;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t gap = i > j ? i - j : j - i;
      if ((gap > 1 && !b(i, j).is_zero()) || (gap == 1 && b(i, j).is_zero())) {
        throw Error(ErrorKind::NotIrreducibleTridiagonal,
                    "B(" + std::to_string(i) + "," + std::to_string(j) + ") breaks the irreducible tridiagonal shape");
      }
    }
  }
  std::vector<FieldElement> diag{FieldElement::one(a.field())};
  for (std::size_t i = 1; i < n; ++i) diag.push_back(diag.back() * b(i - 1, i) / b(i, i - 1));
  const Matrix d = Matrix::diagonal(diag);
  if (!(inverse(d) * b.transpose() * d == b)) throw Error(ErrorKind::InvariantViolation, "D^{-1} B^t D != B");

  Antiautomorphism out{scaled_to_leading_one(p_inv.transpose() * d * p_inv), Antiautomorphism::Basis::Standard, d, p};
  if (!(out.apply(a) == a) || !(out.apply(dual.matrix) == dual.matrix)) {
    throw Error(ErrorKind::InvariantViolation, "conjugator does not fix A and A*");
  }
  return out;
}

std::vector<Matrix> conjugator_solutions(const Matrix& a, const Matrix& a_star) {
  require_same_shape(a, a_star);
  const std::size_t n = a.dim();
  const FieldDescriptor f = a.field();
  std::vector<Vector> equations;
  equations.reserve(2 * n * n);
  // (X^t H - H X)_{ij} = sum_k X_{ki} H_{kj} - sum_k H_{ik} X_{kj}; unknown H_{kl} sits at k*n + l.
  for (const Matrix* x : {&a, &a_star}) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<FieldElement> row(n * n, FieldElement::zero(f));
        for (std::size_t k = 0; k < n; ++k) {
          row[k * n + j] += (*x)(k, i);
          row[i * n + k] -= (*x)(k, j);
        }
        equations.emplace_back(f, std::move(row));
      }
    }
  }
  std::vector<Matrix> out;
  for (const auto& sol : nullspace(equations, n * n)) out.push_back(scaled_to_leading_one(matrix_from_flat(sol, n)));
  return out;
}

bool char2_check(const Matrix& a, const Matrix& a_star, const OrderingPair& orderings) {
  if (!exists_split(spectral_pair(a, a_star, orderings))) return false;
  const std::vector<Matrix> sols = conjugator_solutions(a, a_star);
  if (sols.empty()) return false;
  // When the split leg holds and some invertible H exists, the solution space is a line.
  Matrix sum = Matrix::zero(a.field(), a.dim());
  for (const auto& h : sols) {
    if (rank(h) == a.dim()) return true;
    sum = sum + h;
  }
  return rank(sum) == a.dim();
}

void validate(const ParameterArray& pa) {
  auto fail = [](const std::string& what) { return Error(ErrorKind::InvariantViolation, "parameter array: " + what); };
  if (pa.theta.size() != pa.d + 1 || pa.theta_star.size() != pa.d + 1 || pa.varphi.size() != pa.d) {
    throw fail("expected " + std::to_string(pa.d + 1) + " eigenvalues per side and " + std::to_string(pa.d) + " varphi entries");
  }
  for (const auto* seq : {&pa.theta, &pa.theta_star, &pa.varphi}) {
    for (const auto& x : *seq) {
      if (!(x.field() == pa.field)) throw fail("entry over " + x.field().to_string() + " in " + pa.field.to_string());
    }
  }
  auto eq = [](const FieldElement& x, const FieldElement& y) { return x == y; };
  if (!all_distinct(pa.theta, eq)) throw fail("theta values are not distinct");
  if (!all_distinct(pa.theta_star, eq)) throw fail("theta* values are not distinct");
  for (std::size_t i = 0; i < pa.varphi.size(); ++i) {
    if (pa.varphi[i].is_zero()) throw fail("varphi_" + std::to_string(i + 1) + " is zero");
  }
}

LeonardParameterReport check_parameter_array(const ParameterArray& pa) {
  validate(pa);
  const std::size_t d = pa.d;
  const FieldDescriptor f = pa.field;
  if (d == 0) return LeonardParameterReport{true, std::vector<FieldElement>{}, std::nullopt};

  const auto& th = pa.theta;
  const auto& ts = pa.theta_star;
  const auto& varphi = pa.varphi;  // varphi[i-1] holds varphi_i
  const FieldElement span = th[0] - th[d];

  // partial[i] = sum_{h=0}^{i-1} (theta_h - theta_{d-h}) / (theta_0 - theta_d)
  std::vector<FieldElement> partial(d + 1, FieldElement::zero(f));
  for (std::size_t i = 1; i <= d; ++i) partial[i] = partial[i - 1] + (th[i - 1] - th[d - i + 1]) / span;

  std::vector<FieldElement> phi;
  phi.reserve(d);
  phi.push_back(varphi[0] - (ts[1] - ts[0]) * (th[0] - th[d]));
  for (std::size_t i = 2; i <= d; ++i) phi.push_back(varphi[0] * partial[i] + (ts[i] - ts[0]) * (th[d - i + 1] - th[0]));

  auto fail = [](ParameterCondition c) { return LeonardParameterReport{false, std::nullopt, c}; };
  for (std::size_t i = 1; i <= d; ++i) {
    if (!(varphi[i - 1] == phi[0] * partial[i] + (ts[i] - ts[0]) * (th[i - 1] - th[d]))) return fail(ParameterCondition::CondI);
  }
  for (std::size_t i = 1; i <= d; ++i) {
    if (!(phi[i - 1] == varphi[0] * partial[i] + (ts[i] - ts[0]) * (th[d - i + 1] - th[0]))) return fail(ParameterCondition::CondII);
  }
  if (d >= 3) {
    const FieldElement common = (th[0] - th[3]) / (th[1] - th[2]);
    for (std::size_t i = 2; i + 1 <= d; ++i) {
      const FieldElement r = (th[i - 2] - th[i + 1]) / (th[i - 1] - th[i]);
      const FieldElement r_star = (ts[i - 2] - ts[i + 1]) / (ts[i - 1] - ts[i]);
      if (!(r == common) || !(r_star == common)) return fail(ParameterCondition::CondIII);
    }
  }
  for (const auto& x : phi) {
    if (x.is_zero()) return fail(ParameterCondition::PhiZero);
  }
  return LeonardParameterReport{true, std::move(phi), std::nullopt};
}

std::pair<Matrix, Matrix> construct_pair(const ParameterArray& pa) {
  validate(pa);
  return {lower_bidiagonal(pa.theta), upper_bidiagonal(pa.theta_star, pa.varphi)};
}

bool is_canonical_form(const Matrix& a, const Matrix& a_star) {
  if (!(a.field() == a_star.field()) || a.dim() != a_star.dim()) return false;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const bool sub = i == j + 1;
      if (sub ? !a(i, j).is_one() : !a(i, j).is_zero()) return false;
      if (j != i + 1 && !a_star(i, j).is_zero()) return false;
    }
  }
  return true;
}

ParameterArray parameter_array_from_canonical(const Matrix& a, const Matrix& a_star) {
  if (!is_canonical_form(a, a_star)) throw Error(ErrorKind::NotCanonicalForm, "pair is not lower/upper bidiagonal of the canonical shape");
  ParameterArray pa{a.field(), a.dim() - 1, {}, {}, {}};
  for (std::size_t i = 0; i < a.dim(); ++i) {
    pa.theta.push_back(a(i, i));
    pa.theta_star.push_back(a_star(i, i));
    if (i + 1 < a.dim()) pa.varphi.push_back(a_star(i, i + 1));
  }
  return pa;
}

GConjugation g_conjugation(const Matrix& a, const Matrix& a_star, const OrderingPair& orderings) {
  const ParameterArray pa = parameter_array_from_canonical(a, a_star);
  if (!(orderings == pa.orderings())) throw Error(ErrorKind::BadOrdering, "orderings must follow the diagonals of the canonical pair");
  const SpectralPair sp = spectral_pair(a, a_star, orderings);
  if (!leonard_verdict(sp).is_leonard_system) throw Error(ErrorKind::NotLeonard, "pair is not a Leonard system for the diagonal orderings");

  SplitCertificate cert = build_split(SpectralPair{sp.primal.reversed(), sp.dual});
  Matrix g = cert.basis_matrix();
  const Matrix g_inv = inverse(g);
  std::vector<FieldElement> reversed_theta(pa.theta.rbegin(), pa.theta.rend());
  if (!(g_inv * a * g == lower_bidiagonal(reversed_theta)) ||
      !(g_inv * a_star * g == upper_bidiagonal(pa.theta_star, cert.split_sequence))) {
    throw Error(ErrorKind::InvariantViolation, "G does not bring the pair to the reversed bidiagonal form");
  }
  return GConjugation{std::move(g), std::move(cert.split_sequence)};
}

CanonicalForm canonicalize(const Matrix& a, const Matrix& a_star, const OrderingPair& orderings) {
  SplitCertificate cert = build_split(a, a_star, orderings);
  Matrix u = cert.basis_matrix();
  const Matrix u_inv = inverse(u);
  Matrix ca = u_inv * a * u;
  Matrix cs = u_inv * a_star * u;
  ParameterArray pa{a.field(), a.dim() - 1, orderings.theta_order, orderings.theta_star_order, cert.split_sequence};
  auto [ea, es] = construct_pair(pa);
  if (!(ca == ea) || !(cs == es)) throw Error(ErrorKind::InvariantViolation, "split basis does not yield the canonical form");
  return CanonicalForm{std::move(ca), std::move(cs), std::move(u), std::move(pa)};
}

}  // namespace leonard

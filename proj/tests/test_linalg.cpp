#include <doctest.h>

#include "leonard/error.hpp"
#include "leonard/linalg.hpp"
#include "support.hpp"

using namespace leonard;
using support::el;
using support::mat;

namespace {

std::vector<std::string> coeff_strings(const Polynomial& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coefficients()) out.push_back(c.to_string());
  return out;
}

}  // namespace

TEST_CASE("products") {
  const auto p5 = support::gf(5);
  const auto m = mat(p5, {{2, 3}, {1, 4}});
  CHECK(m * Matrix::identity(p5, 2) == m);
  CHECK(Matrix::identity(p5, 2) * m == m);
  const auto q = support::q();
  const auto n = mat(q, {{0, 1}, {0, 0}});
  CHECK((n * n).is_zero());
}

TEST_CASE("kernel basis") {
  const auto q = support::q();
  auto zero = kernel_basis(Matrix::zero(q, 2));
  REQUIRE(zero.size() == 2);
  CHECK(zero[0] == Vector::unit(q, 2, 0));
  CHECK(zero[1] == Vector::unit(q, 2, 1));
  CHECK(kernel_basis(Matrix::identity(q, 3)).empty());
  auto ones = kernel_basis(mat(q, {{1, 1}, {1, 1}}));
  REQUIRE(ones.size() == 1);
  CHECK(colinear(ones[0], Vector(q, support::els(q, {1, -1}))));
}

TEST_CASE("inverse") {
  const auto q = support::q();
  CHECK(inverse(Matrix::identity(q, 3)) == Matrix::identity(q, 3));
  CHECK(inverse(mat(q, {{2, 0}, {0, 4}})) == Matrix::diagonal(std::vector{el(q, "1/2"), el(q, "1/4")}));
  CHECK(inverse(mat(q, {{0, 1}, {1, 0}})) == mat(q, {{0, 1}, {1, 0}}));
  try {
    inverse(mat(q, {{1, 2}, {2, 4}}));
    FAIL("singular accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Singular);
  }
}

TEST_CASE("inverse property over Q and GF(p)") {
  support::Gen gen(7);
  for (int k = 0; k < 100; ++k) {
    const auto f = k % 2 == 0 ? support::q() : support::gf(997);
    const std::size_t n = 1 + static_cast<std::size_t>(gen.range(0, 4));
    const Matrix m = gen.invertible(f, n);
    const Matrix inv = inverse(m);
    CHECK(support::product(m, inv) == Matrix::identity(f, n));
    CHECK(inv == *support::invert(m));
  }
}

TEST_CASE("characteristic polynomial examples") {
  const auto q = support::q();
  CHECK(coeff_strings(char_poly(mat(q, {{1, 0}, {0, 2}}))) == std::vector<std::string>{"2", "-3", "1"});
  CHECK(coeff_strings(char_poly(Matrix::zero(q, 3))) == std::vector<std::string>{"0", "0", "0", "1"});
  CHECK(coeff_strings(char_poly(mat(q, {{0, -1}, {1, 0}}))) == std::vector<std::string>{"1", "0", "1"});
  CHECK_THROWS_AS(char_poly_faddeev_leverrier(Matrix::zero(support::gf(3), 3)), Error);
}

TEST_CASE("characteristic polynomial agrees with the determinant") {
  support::Gen gen(21);
  for (int k = 0; k < 60; ++k) {
    const auto f = k % 3 == 0 ? support::q() : support::gf(k % 3 == 1 ? 101 : 997);
    const std::size_t n = 1 + static_cast<std::size_t>(gen.range(0, 5));
    const Matrix m = gen.matrix(f, n);
    const auto want = support::char_poly_by_interpolation(m);
    CHECK(char_poly_berkowitz(m).coefficients() == want);
    CHECK(char_poly_faddeev_leverrier(m).coefficients() == want);
    CHECK(char_poly(m).coefficients() == want);
  }
}

TEST_CASE("roots") {
  const auto q = support::q();
  const auto x2m3x2 = Polynomial(q, support::els(q, {2, -3, 1}));
  auto r = roots_in_field(x2m3x2);
  REQUIRE(r.size() == 2);
  CHECK(r[0].value == el(q, 1));
  CHECK(r[1].value == el(q, 2));
  CHECK(r[0].multiplicity == 1);
  CHECK(roots_in_field(Polynomial(q, support::els(q, {1, 0, 1}))).empty());
  const auto p5 = support::gf(5);
  auto g = roots_in_field(Polynomial(p5, support::els(p5, {1, 0, 1})));
  REQUIRE(g.size() == 2);
  CHECK(g[0].value == el(p5, 2));
  CHECK(g[1].value == el(p5, 3));
  CHECK_THROWS_AS(roots_in_field(Polynomial::zero(q)), Error);
  const auto big = support::gf(1000003);
  try {
    roots_in_field(Polynomial(big, support::els(big, {1, 1})));
    FAIL("large modulus accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ModulusTooLarge);
  }
  CHECK(roots_in_field(Polynomial(big, support::els(big, {1, 1})), RootSearchConfig{2'000'000}).size() == 1);
}

TEST_CASE("rational roots with multiplicities and fractions") {
  const auto q = support::q();
  // (2x - 3)^2 (x + 5) x^3 (7x + 1)
  Polynomial p = Polynomial::constant(el(q, 1));
  auto factor = [&](long long a, long long b) { return Polynomial(q, support::els(q, {b, a})); };
  for (auto [a, b] : std::vector<std::pair<long long, long long>>{{2, -3}, {2, -3}, {1, 5}, {1, 0}, {1, 0}, {1, 0}, {7, 1}}) p = p * factor(a, b);
  auto r = roots_in_field(p);
  REQUIRE(r.size() == 4);
  std::vector<std::pair<std::string, std::size_t>> got;
  for (const auto& x : r) got.emplace_back(x.value.to_string(), x.multiplicity);
  CHECK(got == std::vector<std::pair<std::string, std::size_t>>{{"-5", 1}, {"-1/7", 1}, {"0", 3}, {"3/2", 2}});
}

TEST_CASE("rational roots against brute force") {
  support::Gen gen(5);
  const auto q = support::q();
  for (int k = 0; k < 40; ++k) {
    std::vector<FieldElement> want;
    Polynomial p = Polynomial::constant(el(q, gen.range(1, 4)));
    const long long count = gen.range(1, 4);
    for (long long i = 0; i < count; ++i) {
      FieldElement root = FieldElement(q, mpq_class(mpz_class(static_cast<long>(gen.range(-30, 30))), mpz_class(static_cast<long>(gen.range(1, 6)))));
      want.push_back(root);
      p = p * Polynomial::linear_factor(root);
    }
    p = p * Polynomial(q, support::els(q, {gen.range(1, 5), 0, 1}));  // x^2 + c has no rational root
    std::sort(want.begin(), want.end(), canonical_less);
    want.erase(std::unique(want.begin(), want.end()), want.end());
    std::vector<FieldElement> got;
    for (const auto& r : roots_in_field(p)) {
      got.push_back(r.value);
      CHECK(p(r.value).is_zero());
    }
    CHECK(got == want);
  }
}

TEST_CASE("polynomial evaluation at matrices") {
  const auto q = support::q();
  const auto m = mat(q, {{1, 2}, {3, 4}});
  CHECK(eval_poly_at_matrix(Polynomial::variable(q), m) == m);
  CHECK(eval_poly_at_matrix(Polynomial::constant(el(q, 1)), m) == Matrix::identity(q, 2));
  CHECK(eval_poly_at_matrix(Polynomial(q, support::els(q, {2, -3, 1})), mat(q, {{1, 0}, {0, 2}})).is_zero());
  CHECK(eval_poly_at_matrix(char_poly(m), m).is_zero());
}

TEST_CASE("subspaces") {
  const auto q = support::q();
  const auto e0 = Vector::unit(q, 3, 0), e1 = Vector::unit(q, 3, 1), e2 = Vector::unit(q, 3, 2);
  std::vector<Vector> a{e0, e1}, b{e1, e2}, c{e0 + e1, e0 - e1};
  CHECK(same_span(a, c));
  CHECK_FALSE(same_span(a, b));
  auto meet = intersect(a, b);
  REQUIRE(meet.size() == 1);
  CHECK(colinear(meet[0], e1));
  std::vector<Vector> line{e1};
  CHECK(span_contains(a, line));
  CHECK(rank(std::span<const Vector>(c)) == 2);
  CHECK(span_basis(std::vector<Vector>{Vector::zero(q, 3)}).empty());
  CHECK(column_space(mat(q, {{1, 2}, {2, 4}})).size() >= 1);
}

TEST_CASE("nullspace against the reference") {
  support::Gen gen(3);
  for (int k = 0; k < 50; ++k) {
    const auto f = support::gf(101);
    const std::size_t n = 1 + static_cast<std::size_t>(gen.range(0, 5));
    Matrix m = gen.matrix(f, n);
    if (k % 2 == 0 && n > 1) {
      std::vector<FieldElement> flat(m.entries().begin(), m.entries().end());
      for (std::size_t j = 0; j < n; ++j) flat[(n - 1) * n + j] = flat[j] + flat[n + j];  // force a dependency
      m = Matrix(f, n, flat);
    }
    const auto ker = kernel_basis(m);
    CHECK(ker.size() == n - support::rank_of(m));
    CHECK(rank(m) == support::rank_of(m));
    for (const auto& v : ker) CHECK((m * v).is_zero());
  }
}

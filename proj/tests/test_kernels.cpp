#include <doctest.h>

#include "leonard/kernels.hpp"
#include "leonard/spectral.hpp"
#include "support.hpp"

using namespace leonard;

TEST_CASE("parallel kernels match their serial twins") {
  support::Gen gen(5);
  for (int k = 0; k < 30; ++k) {
    const auto f = k % 2 ? support::gf(997) : support::q();
    const std::size_t n = 1 + static_cast<std::size_t>(gen.range(0, 20));
    const Matrix a = gen.matrix(f, n), b = gen.matrix(f, n);
    CHECK(kernels::mat_mul(a, b) == kernels::mat_mul_serial(a, b));
    CHECK(kernels::mat_mul(a, b) == support::product(a, b));

    std::vector<std::vector<FieldElement>> rows(n), twin;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n + 3; ++j) rows[i].push_back(k % 3 == 0 && i % 2 ? FieldElement::zero(f) : gen.element(f));
    }
    twin = rows;
    CHECK(kernels::row_reduce(rows, n + 3) == kernels::row_reduce_serial(twin, n + 3));
    CHECK(rows == twin);
  }
}

TEST_CASE("vanishing products kernel") {
  support::Gen gen(6);
  const auto f = support::gf(101);
  for (int k = 0; k < 10; ++k) {
    const std::size_t n = 2 + static_cast<std::size_t>(gen.range(0, 5));
    auto [m, theta] = gen.multiplicity_free(f, n);
    const auto sd = spectral_data(m, std::span<const FieldElement>(theta));
    const Matrix x = k % 2 ? gen.matrix(f, n) : m;
    const auto par = kernels::vanishing_products(sd.idempotents, x, sd.idempotents);
    CHECK(par == kernels::vanishing_products_serial(sd.idempotents, x, sd.idempotents));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const bool zero = support::product(support::product(sd.idempotents[i], x), sd.idempotents[j]).is_zero();
        CHECK((par[i * n + j] != 0) == zero);
      }
    }
  }
}

TEST_CASE("root scan kernel") {
  // (x - 3)(x - 10)(x^2 + 1) over GF(13): roots 3, 5, 8, 10
  const std::uint32_t p = 13;
  std::vector<std::uint32_t> poly{1};
  auto mul = [&](std::vector<std::uint32_t> factor) {
    std::vector<std::uint32_t> out(poly.size() + factor.size() - 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      for (std::size_t j = 0; j < factor.size(); ++j) out[i + j] = (out[i + j] + poly[i] * factor[j]) % p;
    }
    poly = out;
  };
  mul({p - 3, 1});
  mul({p - 10, 1});
  mul({1, 0, 1});
  CHECK(kernels::gf_root_scan(poly, p) == std::vector<std::uint32_t>{3, 5, 8, 10});
  CHECK(kernels::gf_root_scan_serial(poly, p) == std::vector<std::uint32_t>{3, 5, 8, 10});
  const std::vector<std::uint32_t> big{1, 0, 1};
  CHECK(kernels::gf_root_scan(big, 999983) == kernels::gf_root_scan_serial(big, 999983));
}

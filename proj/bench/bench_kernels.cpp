#include <benchmark/benchmark.h>

#include <random>

#include "leonard/kernels.hpp"
#include "leonard/spectral.hpp"

using namespace leonard;

namespace {

const FieldDescriptor kField = FieldDescriptor::prime_field(997);

Matrix random_matrix(std::size_t n, std::uint64_t seed, const FieldDescriptor& f = kField) {
  std::mt19937_64 rng(seed);
  std::vector<FieldElement> flat;
  for (std::size_t k = 0; k < n * n; ++k) {
    flat.emplace_back(f, f.is_rational() ? static_cast<long long>(rng() % 19) - 9 : static_cast<long long>(rng() % f.modulus()));
  }
  return Matrix(f, n, std::move(flat));
}

std::vector<std::vector<FieldElement>> rows_of(const Matrix& m) {
  std::vector<std::vector<FieldElement>> out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) out[i].assign(m.entries().begin() + static_cast<long>(i * m.dim()), m.entries().begin() + static_cast<long>((i + 1) * m.dim()));
  return out;
}

void BM_MatMul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, 1), b = random_matrix(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::mat_mul(a, b));
}

void BM_MatMulSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, 1), b = random_matrix(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::mat_mul_serial(a, b));
}

void BM_MatMulRational(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto q = FieldDescriptor::rationals();
  const Matrix a = random_matrix(n, 1, q), b = random_matrix(n, 2, q);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::mat_mul(a, b));
}

void BM_MatMulRationalSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto q = FieldDescriptor::rationals();
  const Matrix a = random_matrix(n, 1, q), b = random_matrix(n, 2, q);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::mat_mul_serial(a, b));
}

void BM_RowReduce(benchmark::State& state) {
  const auto rows = rows_of(random_matrix(static_cast<std::size_t>(state.range(0)), 3));
  for (auto _ : state) {
    auto copy = rows;
    benchmark::DoNotOptimize(kernels::row_reduce(copy, copy.size()));
  }
}

void BM_RowReduceSerial(benchmark::State& state) {
  const auto rows = rows_of(random_matrix(static_cast<std::size_t>(state.range(0)), 3));
  for (auto _ : state) {
    auto copy = rows;
    benchmark::DoNotOptimize(kernels::row_reduce_serial(copy, copy.size()));
  }
}

void BM_RootScan(benchmark::State& state) {
  const std::vector<std::uint32_t> coeffs{5, 0, 3, 0, 0, 1, 7, 1};
  const auto p = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::gf_root_scan(coeffs, p));
}

void BM_RootScanSerial(benchmark::State& state) {
  const std::vector<std::uint32_t> coeffs{5, 0, 3, 0, 0, 1, 7, 1};
  const auto p = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::gf_root_scan_serial(coeffs, p));
}

SpectralData diagonal_spectrum(std::size_t n) {
  std::vector<FieldElement> diag;
  for (std::size_t i = 0; i < n; ++i) diag.emplace_back(kField, static_cast<long long>(i + 1));
  return spectral_data(Matrix::diagonal(diag));
}

void BM_VanishingProducts(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto sd = diagonal_spectrum(n);
  const Matrix x = random_matrix(n, 4);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::vanishing_products(sd.idempotents, x, sd.idempotents));
}

void BM_VanishingProductsSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto sd = diagonal_spectrum(n);
  const Matrix x = random_matrix(n, 4);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::vanishing_products_serial(sd.idempotents, x, sd.idempotents));
}

}  // namespace

BENCHMARK(BM_MatMul)->Arg(8)->Arg(32)->Arg(64);
BENCHMARK(BM_MatMulSerial)->Arg(8)->Arg(32)->Arg(64);
BENCHMARK(BM_MatMulRational)->Arg(8)->Arg(32);
BENCHMARK(BM_MatMulRationalSerial)->Arg(8)->Arg(32);
BENCHMARK(BM_RowReduce)->Arg(16)->Arg(64);
BENCHMARK(BM_RowReduceSerial)->Arg(16)->Arg(64);
BENCHMARK(BM_RootScan)->Arg(997)->Arg(999983);
BENCHMARK(BM_RootScanSerial)->Arg(997)->Arg(999983);
BENCHMARK(BM_VanishingProducts)->Arg(6)->Arg(12);
BENCHMARK(BM_VanishingProductsSerial)->Arg(6)->Arg(12);

BENCHMARK_MAIN();

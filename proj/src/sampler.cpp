#include "leonard/sampler.hpp"

#include <array>

#include "leonard/error.hpp"

namespace leonard {

namespace {

// Uniform-ish draw; plain modulo keeps the stream identical across standard libraries.
long long draw(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

FieldElement draw_element(std::mt19937_64& rng, const FieldDescriptor& f) {
  if (f.is_rational()) return FieldElement(f, draw(rng, -9, 9));
  return FieldElement(f, static_cast<long long>(rng() % f.modulus()));
}

FieldElement draw_nonzero(std::mt19937_64& rng, const FieldDescriptor& f) {
  for (;;) {
    FieldElement x = draw_element(rng, f);
    if (!x.is_zero()) return x;
  }
}

FieldElement draw_q(std::mt19937_64& rng, const FieldDescriptor& f) {
  if (!f.is_rational()) return draw_nonzero(rng, f);
  static constexpr std::array<std::array<long, 2>, 8> kRatios{{{2, 1}, {3, 1}, {-2, 1}, {1, 2}, {-1, 2}, {2, 3}, {-3, 1}, {3, 2}}};
  const auto& r = kRatios[rng() % kRatios.size()];
  return FieldElement(f, mpq_class(mpz_class(r[0]), mpz_class(r[1])));
}

FieldElement power(FieldElement base, long long e) {
  if (e < 0) {
    base = base.inverse();
    e = -e;
  }
  FieldElement out = FieldElement::one(base.field());
  for (long long k = 0; k < e; ++k) out *= base;
  return out;
}

enum class Family { Quadratic, QType };

std::vector<FieldElement> eigen_sequence(std::mt19937_64& rng, const FieldDescriptor& f, std::size_t d, Family family,
                                         const FieldElement& q) {
  const FieldElement a = draw_element(rng, f);
  const FieldElement b = draw_nonzero(rng, f);
  const FieldElement c = draw_element(rng, f);
  std::vector<FieldElement> out;
  out.reserve(d + 1);
  for (std::size_t i = 0; i <= d; ++i) {
    const FieldElement x(f, static_cast<long long>(i));
    if (family == Family::Quadratic) {
      out.push_back(a + b * x + c * x * x);
    } else {
      const auto e = static_cast<long long>(i);
      out.push_back(a + b * power(q, e) + c * power(q, -e));
    }
  }
  return out;
}

bool distinct(const std::vector<FieldElement>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (xs[i] == xs[j]) return false;
    }
  }
  return true;
}

}  // namespace

ParameterArray random_parameter_array(std::mt19937_64& rng, std::size_t d, const FieldDescriptor& f,
                                      const SamplerConfig& config) {
  for (std::size_t attempt = 0; attempt < config.retry_budget; ++attempt) {
    const Family family = rng() % 2 == 0 ? Family::Quadratic : Family::QType;
    const FieldElement q = draw_q(rng, f);
    std::vector<FieldElement> theta = eigen_sequence(rng, f, d, family, q);
    std::vector<FieldElement> theta_star = eigen_sequence(rng, f, d, family, q);
    if (!distinct(theta) || !distinct(theta_star)) continue;

    std::vector<FieldElement> varphi;
    if (d > 0) {
      const FieldElement phi1 = draw_nonzero(rng, f);
      const FieldElement span = theta[0] - theta[d];
      FieldElement partial = FieldElement::zero(f);
      for (std::size_t i = 1; i <= d; ++i) {
        partial += (theta[i - 1] - theta[d - i + 1]) / span;
        varphi.push_back(phi1 * partial + (theta_star[i] - theta_star[0]) * (theta[i - 1] - theta[d]));
      }
    }
    bool zero = false;
    for (const auto& x : varphi) zero = zero || x.is_zero();
    if (zero) continue;

    ParameterArray pa{f, d, std::move(theta), std::move(theta_star), std::move(varphi)};
    if (check_parameter_array(pa).valid) return pa;
  }
  throw Error(ErrorKind::RetryBudgetExceeded,
              "no valid parameter array with d=" + std::to_string(d) + " over " + f.to_string() + " after " +
                  std::to_string(config.retry_budget) + " attempts");
}

std::vector<ParameterArray> random_parameter_arrays(std::uint64_t seed, std::size_t d, const FieldDescriptor& field,
                                                    std::size_t count, const SamplerConfig& config) {
  std::mt19937_64 rng(seed);
  std::vector<ParameterArray> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) out.push_back(random_parameter_array(rng, d, field, config));
  return out;
}

}  // namespace leonard

#include "leonard/field.hpp"

#include <cctype>

#include "leonard/error.hpp"

namespace leonard {

namespace {

constexpr std::uint64_t kModulusLimit = std::uint64_t{1} << 31;

std::uint32_t reduce(const mpz_class& value, std::uint32_t p) {
  mpz_class r = value % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

FieldDescriptor FieldDescriptor::prime_field(std::uint64_t p) {
  if (p >= kModulusLimit || !is_prime(p)) {
    throw Error(ErrorKind::InvalidModulus, "modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
  return FieldDescriptor(Kind::PrimeField, static_cast<std::uint32_t>(p));
}

std::string FieldDescriptor::to_string() const {
  if (is_rational()) return "rational";
  return "gf:" + std::to_string(modulus_);
}

FieldElement::FieldElement(FieldDescriptor field, long long value) : field_(field), value_(std::uint32_t{0}) {
  static_assert(sizeof(long) == sizeof(long long));
  if (field_.is_rational()) {
    value_ = mpq_class(static_cast<long>(value));
  } else {
    long long p = field_.modulus();
    long long r = value % p;
    value_ = static_cast<std::uint32_t>(r < 0 ? r + p : r);
  }
}

FieldElement::FieldElement(FieldDescriptor field, const mpz_class& value) : field_(field), value_(std::uint32_t{0}) {
  if (field_.is_rational()) {
    value_ = mpq_class(value);
  } else {
    value_ = reduce(value, field_.modulus());
  }
}

FieldElement::FieldElement(FieldDescriptor field, const mpq_class& value) : field_(field), value_(value) {
  if (!field_.is_rational()) {
    throw Error(ErrorKind::DescriptorMismatch, "rational value given for " + field_.to_string());
  }
  std::get<mpq_class>(value_).canonicalize();
}

FieldElement FieldElement::parse(FieldDescriptor field, std::string_view text) {
  auto fail = [&] { return Error(ErrorKind::Parse, "malformed entry \"" + std::string(text) + "\""); };
  if (!field.is_rational()) {
    if (!all_digits(text)) throw fail();
    return FieldElement(field, mpz_class(std::string(text)));
  }
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
    if (!all_digits(den) || den.front() == '0') throw fail();
  }
  if (!all_digits(num)) throw fail();
  mpq_class q(mpz_class(std::string(num)), den.empty() ? mpz_class(1) : mpz_class(std::string(den)));
  if (negative) q = -q;
  return FieldElement(field, q);
}

bool FieldElement::is_zero() const noexcept {
  if (field_.is_rational()) return sgn(std::get<mpq_class>(value_)) == 0;
  return std::get<std::uint32_t>(value_) == 0;
}

bool FieldElement::is_one() const noexcept {
  if (field_.is_rational()) return std::get<mpq_class>(value_) == 1;
  return std::get<std::uint32_t>(value_) == 1;
}

const mpq_class& FieldElement::rational() const {
  if (!field_.is_rational()) throw Error(ErrorKind::DescriptorMismatch, "rational() on " + field_.to_string());
  return std::get<mpq_class>(value_);
}

std::uint32_t FieldElement::residue() const {
  if (field_.is_rational()) throw Error(ErrorKind::DescriptorMismatch, "residue() on rational element");
  return std::get<std::uint32_t>(value_);
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  FieldElement out = *this;
  if (field_.is_rational()) {
    mpq_class& q = std::get<mpq_class>(out.value_);
    q = 1 / q;
  } else {
    // Fermat: p is prime.
    std::uint32_t p = field_.modulus();
    out.value_ = pow_mod(std::get<std::uint32_t>(value_), p - 2, p);
  }
  return out;
}

std::string FieldElement::to_string() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_).get_str();
  return std::to_string(std::get<std::uint32_t>(value_));
}

FieldElement FieldElement::operator-() const {
  FieldElement out = *this;
  if (field_.is_rational()) {
    mpq_class& q = std::get<mpq_class>(out.value_);
    q = -q;
  } else {
    std::uint32_t r = std::get<std::uint32_t>(value_);
    out.value_ = r == 0 ? 0U : field_.modulus() - r;
  }
  return out;
}

void FieldElement::require_same_field(const FieldElement& rhs) const {
  if (!(field_ == rhs.field_)) {
    throw Error(ErrorKind::DescriptorMismatch, field_.to_string() + " vs " + rhs.field_.to_string());
  }
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  require_same_field(rhs);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  } else {
    std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(value_)} + std::get<std::uint32_t>(rhs.value_);
    value_ = static_cast<std::uint32_t>(s % field_.modulus());
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  require_same_field(rhs);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
  } else {
    std::uint64_t p = field_.modulus();
    std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(value_)} + p - std::get<std::uint32_t>(rhs.value_);
    value_ = static_cast<std::uint32_t>(s % p);
  }
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  require_same_field(rhs);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  } else {
    std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(value_)} * std::get<std::uint32_t>(rhs.value_);
    value_ = static_cast<std::uint32_t>(s % field_.modulus());
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
  require_same_field(rhs);
  if (rhs.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) /= std::get<mpq_class>(rhs.value_);
    return *this;
  }
  return *this *= rhs.inverse();
}

bool operator==(const FieldElement& lhs, const FieldElement& rhs) {
  lhs.require_same_field(rhs);
  return lhs.value_ == rhs.value_;
}

std::strong_ordering canonical_compare(const FieldElement& lhs, const FieldElement& rhs) {
  lhs.require_same_field(rhs);
  if (lhs.field_.is_rational()) {
    const mpq_class& a = std::get<mpq_class>(lhs.value_);
    const mpq_class& b = std::get<mpq_class>(rhs.value_);
    int c = cmp(a.get_num(), b.get_num());
    if (c == 0) c = cmp(a.get_den(), b.get_den());
    return c <=> 0;
  }
  return std::get<std::uint32_t>(lhs.value_) <=> std::get<std::uint32_t>(rhs.value_);
}

}  // namespace leonard

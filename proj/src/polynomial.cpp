#include "leonard/polynomial.hpp"

#include <sstream>

#include "leonard/error.hpp"

namespace leonard {

namespace {

void require_same_field(const Polynomial& a, const Polynomial& b) {
  if (!(a.field() == b.field())) {
    throw Error(ErrorKind::DescriptorMismatch, a.field().to_string() + " vs " + b.field().to_string());
  }
}

}  // namespace

Polynomial::Polynomial(FieldDescriptor field, std::vector<FieldElement> coefficients)
    : field_(field), coeffs_(std::move(coefficients)) {
  for (const auto& c : coeffs_) {
    if (!(c.field() == field_)) throw Error(ErrorKind::DescriptorMismatch, "coefficient field differs");
  }
  strip();
}

Polynomial Polynomial::variable(FieldDescriptor field) {
  return Polynomial(field, {FieldElement::zero(field), FieldElement::one(field)});
}

Polynomial Polynomial::linear_factor(const FieldElement& root) {
  return Polynomial(root.field(), {-root, FieldElement::one(root.field())});
}

void Polynomial::strip() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldElement Polynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : FieldElement::zero(field_);
}

FieldElement Polynomial::leading() const {
  return coeffs_.empty() ? FieldElement::zero(field_) : coeffs_.back();
}

FieldElement Polynomial::operator()(const FieldElement& x) const {
  FieldElement acc = FieldElement::zero(field_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<FieldElement> out;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    out.push_back(FieldElement(field_, static_cast<long long>(k)) * coeffs_[k]);
  }
  return Polynomial(field_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return leading().inverse() * *this;
}

Polynomial operator+(const Polynomial& lhs, const Polynomial& rhs) {
  require_same_field(lhs, rhs);
  std::size_t n = std::max(lhs.coeffs_.size(), rhs.coeffs_.size());
  std::vector<FieldElement> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(lhs.coefficient(k) + rhs.coefficient(k));
  return Polynomial(lhs.field_, std::move(out));
}

Polynomial operator-(const Polynomial& lhs, const Polynomial& rhs) {
  require_same_field(lhs, rhs);
  std::size_t n = std::max(lhs.coeffs_.size(), rhs.coeffs_.size());
  std::vector<FieldElement> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(lhs.coefficient(k) - rhs.coefficient(k));
  return Polynomial(lhs.field_, std::move(out));
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  require_same_field(lhs, rhs);
  if (lhs.is_zero() || rhs.is_zero()) return Polynomial::zero(lhs.field_);
  std::vector<FieldElement> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, FieldElement::zero(lhs.field_));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return Polynomial(lhs.field_, std::move(out));
}

Polynomial operator*(const FieldElement& s, const Polynomial& p) {
  std::vector<FieldElement> out;
  out.reserve(p.coeffs_.size());
  for (const auto& c : p.coeffs_) out.push_back(s * c);
  return Polynomial(p.field_, std::move(out));
}

bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
  return lhs.field_ == rhs.field_ && lhs.coeffs_ == rhs.coeffs_;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  require_same_field(*this, divisor);
  if (divisor.is_zero()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  std::vector<FieldElement> rem = coeffs_;
  const int dd = divisor.degree();
  if (degree() < dd) return {zero(field_), *this};
  std::vector<FieldElement> quot(static_cast<std::size_t>(degree() - dd + 1), FieldElement::zero(field_));
  const FieldElement inv_lead = divisor.leading().inverse();
  for (int k = degree(); k >= dd; --k) {
    const FieldElement& top = rem[static_cast<std::size_t>(k)];
    if (top.is_zero()) continue;
    FieldElement q = top * inv_lead;
    for (int i = 0; i <= dd; ++i) {
      rem[static_cast<std::size_t>(k - dd + i)] -= q * divisor.coeffs_[static_cast<std::size_t>(i)];
    }
    quot[static_cast<std::size_t>(k - dd)] = std::move(q);
  }
  return {Polynomial(field_, std::move(quot)), Polynomial(field_, std::move(rem))};
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const FieldElement& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (k == 0 || !c.is_one()) os << "(" << c << ")";
    if (k >= 1) os << "x";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

Polynomial gcd(Polynomial a, Polynomial b) {
  require_same_field(a, b);
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

}  // namespace leonard

#include "nhq/scalar.hpp"

#include <stdexcept>

namespace nhq {

HBarPolynomial::HBarPolynomial(const Rational& constant) {
  if (!nhq::is_zero(constant)) coeffs_.push_back(constant);
}

HBarPolynomial HBarPolynomial::hbar(std::size_t power, const Rational& coefficient) {
  HBarPolynomial p;
  if (nhq::is_zero(coefficient)) return p;
  p.coeffs_.assign(power + 1, Rational(0));
  p.coeffs_[power] = coefficient;
  return p;
}

HBarPolynomial HBarPolynomial::from_coefficients(std::vector<Rational> coefficients) {
  HBarPolynomial p;
  p.coeffs_ = std::move(coefficients);
  p.trim();
  return p;
}

Rational HBarPolynomial::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

std::size_t HBarPolynomial::term_count() const {
  std::size_t n = 0;
  for (const auto& c : coeffs_) n += nhq::is_zero(c) ? 0 : 1;
  return n;
}

HBarPolynomial HBarPolynomial::shifted(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  HBarPolynomial p;
  p.coeffs_.assign(k, Rational(0));
  p.coeffs_.insert(p.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return p;
}

HBarPolynomial HBarPolynomial::divided_by_hbar() const {
  if (is_zero()) return {};
  if (!nhq::is_zero(coeffs_.front())) {
    throw std::domain_error("polynomial is not divisible by hbar");
  }
  HBarPolynomial p;
  p.coeffs_.assign(coeffs_.begin() + 1, coeffs_.end());
  return p;
}

HBarPolynomial& HBarPolynomial::operator+=(const HBarPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

HBarPolynomial& HBarPolynomial::operator-=(const HBarPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  trim();
  return *this;
}

HBarPolynomial& HBarPolynomial::operator*=(const HBarPolynomial& other) {
  *this = *this * other;
  return *this;
}

HBarPolynomial& HBarPolynomial::operator*=(const Rational& scalar) {
  if (nhq::is_zero(scalar)) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

HBarPolynomial operator*(const HBarPolynomial& a, const HBarPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.coeffs_.size() == 1) {
    HBarPolynomial p = a;
    return p *= b.coeffs_[0];
  }
  if (a.coeffs_.size() == 1) {
    HBarPolynomial p = b;
    return p *= a.coeffs_[0];
  }
  HBarPolynomial p;
  p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (nhq::is_zero(a.coeffs_[i])) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  p.trim();
  return p;
}

HBarPolynomial operator-(const HBarPolynomial& a) {
  HBarPolynomial p = a;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

void HBarPolynomial::trim() {
  while (!coeffs_.empty() && nhq::is_zero(coeffs_.back())) coeffs_.pop_back();
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

}  // namespace nhq

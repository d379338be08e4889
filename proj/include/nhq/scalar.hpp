#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace nhq {

using Rational = mpq_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

/// Polynomial in hbar with exact rational coefficients.
///
/// coefficients()[k] is the coefficient of hbar^k. Trailing zeros are never
/// stored, so the zero polynomial has an empty coefficient list and equality
/// is plain vector equality.
class HBarPolynomial {
 public:
  HBarPolynomial() = default;
  HBarPolynomial(const Rational& constant);  // NOLINT: implicit on purpose
  HBarPolynomial(long constant) : HBarPolynomial(Rational(constant)) {}  // NOLINT
  HBarPolynomial(int constant) : HBarPolynomial(Rational(constant)) {}   // NOLINT

  static HBarPolynomial hbar(std::size_t power = 1, const Rational& coefficient = 1);
  static HBarPolynomial from_coefficients(std::vector<Rational> coefficients);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coefficient(std::size_t power) const;
  Rational constant_term() const { return coefficient(0); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// Number of nonzero coefficients.
  std::size_t term_count() const;

  /// Multiplies by hbar^k.
  HBarPolynomial shifted(std::size_t k) const;
  /// Exact division by hbar; requires a zero constant term.
  HBarPolynomial divided_by_hbar() const;
  /// Reduction modulo hbar, i.e. the constant term as a polynomial.
  HBarPolynomial mod_hbar() const { return HBarPolynomial(constant_term()); }

  HBarPolynomial& operator+=(const HBarPolynomial& other);
  HBarPolynomial& operator-=(const HBarPolynomial& other);
  HBarPolynomial& operator*=(const HBarPolynomial& other);
  HBarPolynomial& operator*=(const Rational& scalar);

  friend HBarPolynomial operator+(HBarPolynomial a, const HBarPolynomial& b) { return a += b; }
  friend HBarPolynomial operator-(HBarPolynomial a, const HBarPolynomial& b) { return a -= b; }
  friend HBarPolynomial operator*(const HBarPolynomial& a, const HBarPolynomial& b);
  friend HBarPolynomial operator-(const HBarPolynomial& a);
  friend bool operator==(const HBarPolynomial& a, const HBarPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

inline bool is_zero(const HBarPolynomial& p) { return p.is_zero(); }

/// Parses "p", "-p" or "p/q".
Rational parse_rational(const std::string& text);

}  // namespace nhq

#pragma once

#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "archimedes/rational.hpp"

namespace arch {

/// Dense univariate polynomial with exact rational coefficients.
///
/// coefficients()[d] is the coefficient of x^d. The highest stored
/// coefficient is never zero; the zero polynomial stores nothing.
class RatPolynomial {
 public:
  static constexpr int kZeroDegree = -1;

  RatPolynomial() = default;
  RatPolynomial(std::initializer_list<Rational> coeffs);
  explicit RatPolynomial(std::vector<Rational> coeffs);

  /// c * x^d
  static RatPolynomial monomial(Rational c, unsigned d);
  /// a + b*x
  static RatPolynomial linear(Rational a, Rational b);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const Rational> coefficients() const { return coeffs_; }
  /// Zero for d beyond the degree.
  Rational coefficient(int d) const;

  Rational evaluate(const Rational& x) const;
  RatPolynomial pow(unsigned e) const;  // p^0 = 1, including for p = 0

  RatPolynomial& operator+=(const RatPolynomial& o);
  RatPolynomial& operator-=(const RatPolynomial& o);
  RatPolynomial& operator*=(const Rational& c);

  friend RatPolynomial operator+(RatPolynomial a, const RatPolynomial& b) { return a += b; }
  friend RatPolynomial operator-(RatPolynomial a, const RatPolynomial& b) { return a -= b; }
  friend RatPolynomial operator*(RatPolynomial p, const Rational& c) { return p *= c; }
  friend RatPolynomial operator*(const Rational& c, RatPolynomial p) { return p *= c; }
  friend RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b);

  friend bool operator==(const RatPolynomial&, const RatPolynomial&) = default;

  /// e.g. "14 + 48*x + 48*x^2"; "0" for the zero polynomial.
  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const RatPolynomial& p);

}  // namespace arch

#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "archimedes/bigint.hpp"

namespace arch {

/// Exact fraction in lowest terms with a positive denominator. Zero is 0/1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(int n) : num_(n), den_(1) {}                // NOLINT(google-explicit-constructor)
  Rational(long n) : num_(n), den_(1) {}               // NOLINT(google-explicit-constructor)
  /// Throws DomainError when den is zero.
  Rational(BigInt num, BigInt den);

  /// Accepts "a" or "a/b".
  static Rational parse(std::string_view text);

  /// 2^e for any integer e.
  static Rational pow2(long e);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  int sign() const { return num_.sign(); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_.is_one(); }

  Rational abs() const { return Rational(num_.abs(), den_, Normalized{}); }
  /// Throws DomainError for zero.
  Rational reciprocal() const;
  /// Non-negative integer power; 0^0 = 1.
  Rational pow(unsigned long e) const;

  double to_double() const;
  /// "num/den", or "num" when den = 1.
  std::string to_string() const;

  Rational operator-() const { return Rational(-num_, den_, Normalized{}); }

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  /// Throws DomainError on zero divisor; see rat_arith for the non-throwing form.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

 private:
  struct Normalized {};
  Rational(BigInt num, BigInt den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize();

  BigInt num_;
  BigInt den_;
};

enum class ArithOp { add, sub, mul, div };

/// Non-throwing arithmetic: nullopt exactly when dividing by zero.
std::optional<Rational> rat_arith(const Rational& a, const Rational& b, ArithOp op);

std::ostream& operator<<(std::ostream& os, const Rational& v);

}  // namespace arch

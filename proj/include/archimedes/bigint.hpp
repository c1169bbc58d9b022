#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace arch {

/// Arbitrary-precision signed integer.
///
/// Thin value wrapper over GMP's mpz_class. GMP keeps the magnitude canonical
/// (no leading zero limbs, a single zero), so equality is structural.
class BigInt {
 public:
  BigInt() = default;
  BigInt(int v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
  BigInt(long v) : v_(v) {}                     // NOLINT(google-explicit-constructor)
  BigInt(long long v);                          // NOLINT(google-explicit-constructor)
  BigInt(unsigned long v) : v_(v) {}            // NOLINT(google-explicit-constructor)
  BigInt(unsigned long long v);                 // NOLINT(google-explicit-constructor)
  explicit BigInt(const mpz_class& v) : v_(v) {}
  explicit BigInt(mpz_class&& v) : v_(std::move(v)) {}

  /// Parses an optionally signed decimal integer. Throws DomainError on junk.
  static BigInt parse(std::string_view text);

  /// 2^e for e >= 0.
  static BigInt pow2(unsigned long e);

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sign() == 0; }
  bool is_one() const { return v_ == 1; }

  BigInt abs() const { return BigInt(mpz_class(::abs(v_))); }
  BigInt pow(unsigned long e) const;  // 0^0 = 1

  bool fits_long() const { return v_.fits_slong_p(); }
  long to_long() const;
  double to_double() const { return v_.get_d(); }
  std::size_t bit_length() const;

  bool divides(const BigInt& other) const;

  std::string to_string() const { return v_.get_str(10); }
  const mpz_class& raw() const { return v_; }

  BigInt operator-() const { return BigInt(mpz_class(-v_)); }

  BigInt& operator+=(const BigInt& o) { v_ += o.v_; return *this; }
  BigInt& operator-=(const BigInt& o) { v_ -= o.v_; return *this; }
  BigInt& operator*=(const BigInt& o) { v_ *= o.v_; return *this; }
  /// Truncating division; throws DomainError on zero divisor.
  BigInt& operator/=(const BigInt& o);
  BigInt& operator%=(const BigInt& o);

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
  friend BigInt operator/(BigInt a, const BigInt& b) { return a /= b; }
  friend BigInt operator%(BigInt a, const BigInt& b) { return a %= b; }

  friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }

 private:
  mpz_class v_;
};

BigInt gcd(const BigInt& a, const BigInt& b);

/// Exact quotient; throws ConsistencyError if b does not divide a.
BigInt divexact(const BigInt& a, const BigInt& b);

std::ostream& operator<<(std::ostream& os, const BigInt& v);

}  // namespace arch

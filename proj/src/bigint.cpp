#include "archimedes/bigint.hpp"

#include <limits>
#include <ostream>

#include "archimedes/errors.hpp"

namespace arch {

static_assert(sizeof(long) == sizeof(long long), "LP64 platform expected");

BigInt::BigInt(long long v) : v_(static_cast<long>(v)) {}
BigInt::BigInt(unsigned long long v) : v_(static_cast<unsigned long>(v)) {}

BigInt BigInt::parse(std::string_view text) {
  std::string s(text);
  bool ok = !s.empty();
  for (std::size_t i = 0; i < s.size() && ok; ++i) {
    const char c = s[i];
    if (c == '-' || c == '+') {
      ok = i == 0 && s.size() > 1;
    } else {
      ok = c >= '0' && c <= '9';
    }
  }
  if (!ok) throw DomainError("not an integer: '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(mpz_class(s, 10));
}

BigInt BigInt::pow2(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
  return BigInt(std::move(r));
}

BigInt BigInt::pow(unsigned long e) const {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), v_.get_mpz_t(), e);
  return BigInt(std::move(r));
}

long BigInt::to_long() const {
  if (!fits_long()) throw DomainError("integer " + to_string() + " does not fit in a machine word");
  return v_.get_si();
}

std::size_t BigInt::bit_length() const {
  if (is_zero()) return 0;
  return mpz_sizeinbase(v_.get_mpz_t(), 2);
}

bool BigInt::divides(const BigInt& other) const {
  if (is_zero()) return other.is_zero();
  return mpz_divisible_p(other.v_.get_mpz_t(), v_.get_mpz_t()) != 0;
}

BigInt& BigInt::operator/=(const BigInt& o) {
  if (o.is_zero()) throw DomainError("integer division by zero");
  v_ /= o.v_;
  return *this;
}

BigInt& BigInt::operator%=(const BigInt& o) {
  if (o.is_zero()) throw DomainError("integer division by zero");
  v_ %= o.v_;
  return *this;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return BigInt(std::move(r));
}

BigInt divexact(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw DomainError("integer division by zero");
  if (!b.divides(a)) {
    throw ConsistencyError(b.to_string() + " does not divide " + a.to_string());
  }
  mpz_class r;
  mpz_divexact(r.get_mpz_t(), a.raw().get_mpz_t(), b.raw().get_mpz_t());
  return BigInt(std::move(r));
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

}  // namespace arch

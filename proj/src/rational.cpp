#include "archimedes/rational.hpp"

#include <ostream>

#include "archimedes/errors.hpp"

namespace arch {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational with zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  const BigInt g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = divexact(num_, g);
    den_ = divexact(den_, g);
  }
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(BigInt::parse(text));
  return Rational(BigInt::parse(text.substr(0, slash)), BigInt::parse(text.substr(slash + 1)));
}

Rational Rational::pow2(long e) {
  if (e >= 0) return Rational(BigInt::pow2(static_cast<unsigned long>(e)));
  return Rational(BigInt(1), BigInt::pow2(static_cast<unsigned long>(-e)), Normalized{});
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw DomainError("reciprocal of zero");
  if (num_.sign() < 0) return Rational(-den_, -num_, Normalized{});
  return Rational(den_, num_, Normalized{});
}

Rational Rational::pow(unsigned long e) const {
  return Rational(num_.pow(e), den_.pow(e), Normalized{});
}

double Rational::to_double() const {
  mpq_class q(num_.raw(), den_.raw());
  return q.get_d();
}

std::string Rational::to_string() const {
  if (is_integer()) return num_.to_string();
  return num_.to_string() + "/" + den_.to_string();
}

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("rational division by zero");
  return *this *= o.reciprocal();
}

std::optional<Rational> rat_arith(const Rational& a, const Rational& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div:
      if (b.is_zero()) return std::nullopt;
      return a / b;
  }
  return std::nullopt;
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

}  // namespace arch

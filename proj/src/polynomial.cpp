#include "archimedes/polynomial.hpp"

#include <algorithm>
#include <ostream>

namespace arch {

RatPolynomial::RatPolynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

RatPolynomial::RatPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void RatPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

RatPolynomial RatPolynomial::monomial(Rational c, unsigned d) {
  std::vector<Rational> v(d + 1);
  v[d] = std::move(c);
  return RatPolynomial(std::move(v));
}

RatPolynomial RatPolynomial::linear(Rational a, Rational b) {
  return RatPolynomial({std::move(a), std::move(b)});
}

Rational RatPolynomial::coefficient(int d) const {
  if (d < 0 || d > degree()) return Rational{};
  return coeffs_[static_cast<std::size_t>(d)];
}

Rational RatPolynomial::evaluate(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

RatPolynomial RatPolynomial::pow(unsigned e) const {
  RatPolynomial result{Rational(1)};
  RatPolynomial base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

RatPolynomial& RatPolynomial::operator+=(const RatPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

RatPolynomial& RatPolynomial::operator-=(const RatPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

RatPolynomial& RatPolynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& v : coeffs_) v *= c;
  return *this;
}

RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RatPolynomial(std::move(out));
}

std::string RatPolynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    const Rational& c = coeffs_[d];
    if (c.is_zero()) continue;
    if (!out.empty()) out += c.sign() < 0 ? " - " : " + ";
    else if (c.sign() < 0) out += "-";
    const Rational mag = c.abs();
    if (d == 0) {
      out += mag.to_string();
      continue;
    }
    if (mag != Rational(1)) out += mag.to_string() + "*";
    out += var;
    if (d > 1) out += "^" + std::to_string(d);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const RatPolynomial& p) { return os << p.to_string(); }

}  // namespace arch

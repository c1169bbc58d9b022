#include "archimedes/exactnum.hpp"

#include <string>
#include <vector>

#include "archimedes/combinatorics.hpp"
#include "archimedes/errors.hpp"

namespace arch {

RatPolynomial power_sum_poly(unsigned m) {
  std::vector<RatPolynomial> rows;
  rows.reserve(m + 1);
  for (unsigned row = 0; row <= m; ++row) {
    RatPolynomial p = RatPolynomial::monomial(Rational(1), row + 1);
    for (unsigned i = 0; i < row; ++i) {
      p -= rows[i] * Rational(binomial(row + 1, i));
    }
    p *= Rational(BigInt(1), BigInt(static_cast<long>(row) + 1));
    rows.push_back(std::move(p));
  }
  return rows.back();
}

Rational geo_tail(long e) {
  if (e >= 0) {
    throw DivergenceError("geometric series with ratio 2^" + std::to_string(e) + " diverges");
  }
  return (Rational(1) - Rational::pow2(e)).reciprocal();
}

}  // namespace arch

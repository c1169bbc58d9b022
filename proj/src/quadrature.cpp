#include "archimedes/quadrature.hpp"

#include <string>

#include "archimedes/combinatorics.hpp"
#include "archimedes/errors.hpp"
#include "archimedes/exactnum.hpp"

namespace arch {
namespace {

constexpr int kMaxIteration = 62;

void require_exponent(int s) {
  if (s < 2) throw DomainError("exponent s must be at least 2, got " + std::to_string(s));
}

void require_grid_point(std::int64_t k, int n) {
  if (n < 0 || n > kMaxIteration) {
    throw DomainError("iteration n must lie in 0.." + std::to_string(kMaxIteration) + ", got " + std::to_string(n));
  }
  if (k < 1) throw DomainError("apex index k must be >= 1, got " + std::to_string(k));
  if (n >= 1 && k > (std::int64_t{1} << n) - 1) {
    throw DomainError("apex index k=" + std::to_string(k) + " lies outside grid 2^" + std::to_string(n));
  }
}

// Q(N) = sum_{x=0}^{N-1} second_difference(2x+1, s), as a polynomial in N.
RatPolynomial summed_triangle_poly(int s) {
  const RatPolynomial t = triangle_poly(s);
  RatPolynomial q;
  for (int c = 0; c <= t.degree(); ++c) {
    q += power_sum_poly(static_cast<unsigned>(c)) * t.coefficient(c);
  }
  return q;
}

}  // namespace

BigInt second_difference(std::int64_t k, int s) {
  require_exponent(s);
  if (k < 1) throw DomainError("second difference needs k >= 1");
  const auto e = static_cast<unsigned long>(s);
  const BigInt kk(static_cast<long>(k));
  return (kk + BigInt(1)).pow(e) - BigInt(2) * kk.pow(e) + (kk - BigInt(1)).pow(e);
}

Rational triangle_area(std::int64_t k, int s, int n) {
  require_exponent(s);
  require_grid_point(k, n);
  return Rational(second_difference(k, s), BigInt(2) * BigInt::pow2(static_cast<unsigned long>(n) * (s + 1)));
}

Rational shoelace_area(std::int64_t k, int s, int n) {
  require_exponent(s);
  require_grid_point(k, n);
  const Rational step = Rational::pow2(-n);
  const auto e = static_cast<unsigned long>(s);
  const Rational x1 = Rational(static_cast<long>(k - 1)) * step;
  const Rational x2 = Rational(static_cast<long>(k)) * step;
  const Rational x3 = Rational(static_cast<long>(k + 1)) * step;
  const Rational y1 = x1.pow(e);
  const Rational y2 = x2.pow(e);
  const Rational y3 = x3.pow(e);
  // det | x1 y1 1 ; x2 y2 1 ; x3 y3 1 |, expanded along the last column
  const Rational det = (x2 * y3 - x3 * y2) - (x1 * y3 - x3 * y1) + (x1 * y2 - x2 * y1);
  return det.abs() * Rational(BigInt(1), BigInt(2));
}

RatPolynomial triangle_poly(int s) {
  require_exponent(s);
  const auto e = static_cast<unsigned>(s);
  const RatPolynomial upper = RatPolynomial::linear(Rational(2), Rational(2)).pow(e);
  const RatPolynomial middle = RatPolynomial::linear(Rational(1), Rational(2)).pow(e);
  const RatPolynomial lower = RatPolynomial::monomial(Rational(2), 1).pow(e);
  return upper - middle * Rational(2) + lower;
}

Rational iteration_area(int s, int n) {
  require_exponent(s);
  if (n < 1 || n > kMaxIteration) throw DomainError("iteration n must lie in 1..62");
  const Rational apexes(BigInt::pow2(static_cast<unsigned long>(n - 1)));
  const Rational summed = summed_triangle_poly(s).evaluate(apexes);
  return summed / Rational(BigInt(2) * BigInt::pow2(static_cast<unsigned long>(n) * (s + 1)));
}

Rational iteration_area_direct(int s, int n) {
  require_exponent(s);
  if (n < 1 || n > kMaxIteration) throw DomainError("iteration n must lie in 1..62");
  const std::int64_t apexes = std::int64_t{1} << (n - 1);
  Rational total;
  for (std::int64_t x = 0; x < apexes; ++x) total += triangle_area(2 * x + 1, s, n);
  return total;
}

ExhaustionState exhaustion_partial(int s, int iterations) {
  require_exponent(s);
  if (iterations < 0 || iterations > kMaxIteration) throw DomainError("iteration count must lie in 0..62");
  ExhaustionState state{s, iterations, BigInt::pow2(static_cast<unsigned long>(iterations)), Rational{}};
  for (int n = 1; n <= iterations; ++n) state.accumulated += iteration_area(s, n);
  return state;
}

Rational exhaustion_tail(int s, int iterations) {
  require_exponent(s);
  if (iterations < 0) throw DomainError("iteration count must be non-negative");
  // iteration_area(s, n) = sum_d (1/2) q_d 2^{-d} (2^{d-s-1})^n with q = summed_triangle_poly
  const RatPolynomial q = summed_triangle_poly(s);
  Rational tail;
  for (int d = 1; d <= q.degree(); ++d) {
    const long ratio_exp = static_cast<long>(d) - s - 1;
    const Rational first_term = Rational::pow2(ratio_exp * (iterations + 1));
    tail += q.coefficient(d) * Rational::pow2(-d - 1) * first_term * geo_tail(ratio_exp);
  }
  return tail;
}

Rational exhaustion_limit(int s) { return exhaustion_tail(s, 0); }

Rational integral_from_exhaustion(int s) { return Rational(BigInt(1), BigInt(2)) - exhaustion_limit(s); }

}  // namespace arch

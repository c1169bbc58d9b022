#pragma once

#include <cstdint>

#include "archimedes/bigint.hpp"
#include "archimedes/polynomial.hpp"
#include "archimedes/rational.hpp"

namespace arch {

/// (k+1)^s - 2 k^s + (k-1)^s for k >= 1, s >= 2.
BigInt second_difference(std::int64_t k, int s);

/// Area of the triangle with vertices at abscissae (k-1)/2^n, k/2^n,
/// (k+1)/2^n on y = x^s, i.e. (1/2) second_difference(k, s) / 2^{n(s+1)}.
///
/// For n >= 1 the triangle must lie in [0, 1]: 1 <= k <= 2^n - 1. n = 0 is
/// the unscaled integer lattice and accepts any k >= 1.
Rational triangle_area(std::int64_t k, int s, int n);

/// The same area from the three-point shoelace determinant on exact
/// rational coordinates. Same preconditions as triangle_area.
Rational shoelace_area(std::int64_t k, int s, int n);

/// Polynomial in x whose value at x is second_difference(2x + 1, s):
///   (2x + 2)^s - 2 (2x + 1)^s + (2x)^s,  degree s - 2.
RatPolynomial triangle_poly(int s);

/// Area added by iteration n (grid 2^n, apexes at the odd indices 2x + 1,
/// x = 0 .. 2^{n-1} - 1), by Faulhaber sums over triangle_poly.
Rational iteration_area(int s, int n);

/// iteration_area by adding the 2^{n-1} triangles one at a time.
Rational iteration_area_direct(int s, int n);

/// Running state of the exhaustion after `iterations` steps.
struct ExhaustionState {
  int s = 2;
  int iterations = 0;
  BigInt grid;          ///< 2^iterations subdivisions of [0, 1]
  Rational accumulated; ///< sum of iteration_area(s, 1..iterations)
};

ExhaustionState exhaustion_partial(int s, int iterations);

/// sum_{n > iterations} iteration_area(s, n), exact, as a finite sum of
/// geometric tails.
Rational exhaustion_tail(int s, int iterations);

/// Area between the chord y = x and y = x^s on [0, 1]: the limit of the
/// exhaustion, obtained from the full tail.
Rational exhaustion_limit(int s);

/// Integral of x^s over [0, 1] recovered as 1/2 minus the exhaustion limit.
Rational integral_from_exhaustion(int s);

}  // namespace arch

#pragma once

#include "archimedes/bigint.hpp"
#include "archimedes/polynomial.hpp"
#include "archimedes/rational.hpp"

namespace arch {

/// Faulhaber polynomial P_m with P_m(N) = sum_{x=0}^{N-1} x^m for every
/// integer N >= 0, taking 0^0 = 1 (so P_0(N) = N). Degree m + 1.
///
/// Built from the telescoping identity
///   N^{m+1} = sum_{i=0}^{m} C(m+1, i) P_i(N),
/// solved for P_m one row at a time.
RatPolynomial power_sum_poly(unsigned m);

/// sum_{n>=1} (2^e)^{n-1} = 1 / (1 - 2^e) for e <= -1.
/// Throws DivergenceError for e >= 0.
Rational geo_tail(long e);

}  // namespace arch

#pragma once

#include <vector>

#include "archimedes/bigint.hpp"
#include "archimedes/polynomial.hpp"

namespace arch {

/// C(n, k); zero when k < 0 or k > n.
BigInt binomial(long n, long k);

BigInt factorial(unsigned long n);

/// Stirling number of the second kind: partitions of a k-set into j
/// nonempty blocks. S(0,0) = 1, S(k,0) = 0 for k > 0.
///
/// Evaluated by inclusion-exclusion, (1/j!) sum_i (-1)^{j-i} C(j,i) i^k,
/// so the triangular recurrence stays available as an independent check.
BigInt stirling2(long k, long j);

/// Number of minimal j-member covers of a labeled s-set with exactly k
/// elements covered by a single member (Hearne-Wagner):
///   M(s,j,k) = C(s,k) (2^j - j - 1)^{s-k} S(k,j),   0^0 = 1.
/// Zero when j < 1, k < j or k > s.
BigInt min_cover_count(long s, long j, long k);

struct CoverCount {
  long s = 0;
  long j = 0;
  long k = 0;
  BigInt count;

  friend bool operator==(const CoverCount&, const CoverCount&) = default;
};

/// Every nonzero M(s,j,k) for fixed s and j, ordered by k.
std::vector<CoverCount> cover_counts(long s, long j);

/// M_s(x) = sum_k M(s,k) x^k with M(s,k) = sum_{j=0}^{k} M(s,j,k).
RatPolynomial gen_poly_direct(long s);

/// M_s(x) from the closed form
///   sum_{j=0}^{s} (1/j!) sum_{l=0}^{j} (-1)^{j-l} C(j,l) (2^j - j - 1 + l x)^s.
RatPolynomial gen_poly_hw(long s);

/// x^s M_s(1/(2x)) = sum_k M(s,k)/2^k x^{s-k}.
RatPolynomial flipped_poly(long s);

/// Arguments of the q-analogues below.
struct QParams {
  long n = 0;
  long m = 0;
  long q = 2;
};

/// [n]_q = (q^n - 1)/(q - 1). Requires n >= 0, q >= 2.
BigInt q_int(long n, long q);
/// [n]_q! = [n]_q [n-1]_q ... [1]_q, [0]_q! = 1.
BigInt q_factorial(long n, long q);
/// Gaussian binomial [n choose m]_q; zero when m < 0 or m > n.
///
/// Accumulated as an exact rational product of [n-m+i]_q / [i]_q. A
/// non-integral result raises ConsistencyError.
BigInt q_binomial(long n, long m, long q);
inline BigInt q_binomial(const QParams& p) { return q_binomial(p.n, p.m, p.q); }

}  // namespace arch

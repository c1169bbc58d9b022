#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "archimedes/bigint.hpp"
#include "archimedes/rational.hpp"

namespace arch {

/// One cell R(s, j) of the triangle of rationals.
///
/// R(s, j) = sum_{n>=1} 2^{-(n-1)(s+1)} sum_{x=0}^{2^{n-1}-1} sum_{k=2}^{s} M(s,j,k)/2^k x^{s-k}
struct TriangleEntry {
  int s = 2;
  int j = 1;
  Rational value;

  const BigInt& numerator() const { return value.num(); }
  const BigInt& denominator() const { return value.den(); }

  friend bool operator==(const TriangleEntry&, const TriangleEntry&) = default;
};

/// Closed form: each inner power sum is a Faulhaber polynomial in 2^{n-1},
/// so the outer series splits into geometric tails with ratios 2^{d-s-1},
/// d <= s - 1. Requires s >= 2, 1 <= j <= s.
TriangleEntry entry(int s, int j);

/// The defining series truncated after n = 1..iterations, summed exactly.
Rational entry_partial(int s, int j, int iterations);

/// entry(s, j) - entry_partial(s, j, iterations), from the geometric tails.
Rational entry_tail(int s, int j, int iterations);

/// Upper bound 4^{-iterations} K(s, j) on entry_tail, where K sums the
/// absolute mode weights times their geometric tail factors. Every ratio
/// is at most 1/4, which is where the 4^{-N} comes from.
Rational entry_tail_bound(int s, int j, int iterations);

std::vector<TriangleEntry> row(int s);
Rational row_sum(int s);

/// One (j, l) summand of the printed row-sum lower bound.
struct LowerBoundTerm {
  int j = 0;
  int l = 0;
  Rational weight;        ///< (-1)^{j-l} C(j,l) / j!
  Rational t_sum;         ///< (1/(s+1)) sum_t (a + l/2)^{t-1} (l/2)^{s-t+1}, a = 2^j - j - 1
  bool quotient_checked;  ///< a > 0, so the antiderivative quotient was compared
};

enum class BoundComparison { below, equal, above };

struct LowerBoundResult {
  int s = 2;
  Rational bound;
  Rational row_sum;
  BoundComparison comparison = BoundComparison::equal;  ///< bound relative to row_sum
  std::vector<LowerBoundTerm> terms;
};

/// Evaluates the printed lower-bound formula exactly (0^0 = 1) and compares
/// it with row_sum(s). For every term with a = 2^j - j - 1 > 0 the t-sum is
/// checked against ((a + l/2)^{s+1} - (l/2)^{s+1}) / ((s+1) a); a mismatch
/// raises ConsistencyError. The comparison is reported, not enforced.
LowerBoundResult lower_bound(int s);

/// Classification of one reduced denominator against the 2-binomials
/// [s choose m]_2, m = 0..s.
struct ConjectureEntry {
  int s = 2;
  int j = 1;
  BigInt denominator;
  std::vector<int> exact_hits;    ///< m with [s choose m]_2 == denominator
  std::vector<int> divisor_hits;  ///< m with denominator | [s choose m]_2
  bool unmatched() const { return divisor_hits.empty(); }
};

struct ConjectureReport {
  int q = 2;
  std::vector<ConjectureEntry> entries;
};

/// Rows 2..s_max. q is fixed to 2 unless overridden.
ConjectureReport conjecture_report(int s_max, int q = 2);

enum class Sequence { numerators, denominators };

/// OEIS b-file: "index value\n" per entry, rows s = 2..s_max read left to
/// right, indices consecutive from offset. Empty for s_max < 2.
std::string oeis_export(Sequence which, int s_max, std::int64_t offset = 1);

/// Parses b-file text. Blank lines and lines starting with '#' are skipped;
/// anything else malformed raises DomainError.
std::vector<std::pair<std::int64_t, BigInt>> parse_bfile(std::string_view text);

/// The printed table, rows s = 2..8, as "num/den" strings. bold marks the
/// denominators typeset in boldface there (the 2-binomial values).
struct PublishedEntry {
  int s;
  int j;
  std::string_view value;
  bool bold;
};
std::vector<PublishedEntry> published_entries();

}  // namespace arch

#include "archimedes/combinatorics.hpp"

#include <string>

#include "archimedes/errors.hpp"
#include "archimedes/rational.hpp"

namespace arch {
namespace {

void require_nonnegative(long v, const char* what) {
  if (v < 0) throw DomainError(std::string(what) + " must be non-negative, got " + std::to_string(v));
}

void require_q(long q) {
  if (q < 2) throw DomainError("q must be at least 2, got " + std::to_string(q));
}

// 2^j - j - 1: the number of subsets of a j-member cover that can hold a
// doubly covered element.
BigInt shared_slot_count(long j) { return BigInt::pow2(static_cast<unsigned long>(j)) - BigInt(j) - BigInt(1); }

}  // namespace

BigInt binomial(long n, long k) {
  require_nonnegative(n, "n");
  if (k < 0 || k > n) return BigInt(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return BigInt(std::move(r));
}

BigInt factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return BigInt(std::move(r));
}

BigInt stirling2(long k, long j) {
  require_nonnegative(k, "k");
  if (j < 0 || j > k) return BigInt(0);
  BigInt acc;
  for (long i = 0; i <= j; ++i) {
    BigInt term = binomial(j, i) * BigInt(i).pow(static_cast<unsigned long>(k));
    if ((j - i) % 2 == 0) acc += term;
    else acc -= term;
  }
  return divexact(acc, factorial(static_cast<unsigned long>(j)));
}

BigInt min_cover_count(long s, long j, long k) {
  require_nonnegative(s, "s");
  if (j < 1 || k < j || k > s) return BigInt(0);
  return binomial(s, k) * shared_slot_count(j).pow(static_cast<unsigned long>(s - k)) * stirling2(k, j);
}

std::vector<CoverCount> cover_counts(long s, long j) {
  std::vector<CoverCount> out;
  for (long k = 0; k <= s; ++k) {
    BigInt c = min_cover_count(s, j, k);
    if (!c.is_zero()) out.push_back({s, j, k, std::move(c)});
  }
  return out;
}

RatPolynomial gen_poly_direct(long s) {
  if (s < 1) throw DomainError("generating polynomial needs s >= 1");
  std::vector<Rational> coeffs(static_cast<std::size_t>(s) + 1);
  for (long k = 0; k <= s; ++k) {
    BigInt total;
    for (long j = 0; j <= k; ++j) total += min_cover_count(s, j, k);
    coeffs[static_cast<std::size_t>(k)] = Rational(std::move(total));
  }
  return RatPolynomial(std::move(coeffs));
}

RatPolynomial gen_poly_hw(long s) {
  if (s < 1) throw DomainError("generating polynomial needs s >= 1");
  const auto e = static_cast<unsigned>(s);
  RatPolynomial total;
  for (long j = 0; j <= s; ++j) {
    const Rational base(shared_slot_count(j));
    RatPolynomial inner;
    for (long l = 0; l <= j; ++l) {
      RatPolynomial term = RatPolynomial::linear(base, Rational(l)).pow(e);
      Rational weight(binomial(j, l));
      if ((j - l) % 2 != 0) weight = -weight;
      inner += term * weight;
    }
    total += inner * Rational(BigInt(1), factorial(static_cast<unsigned long>(j)));
  }
  return total;
}

RatPolynomial flipped_poly(long s) {
  const RatPolynomial direct = gen_poly_direct(s);
  std::vector<Rational> coeffs(static_cast<std::size_t>(s) + 1);
  for (long k = 0; k <= s; ++k) {
    coeffs[static_cast<std::size_t>(s - k)] =
        direct.coefficient(static_cast<int>(k)) * Rational::pow2(-k);
  }
  return RatPolynomial(std::move(coeffs));
}

BigInt q_int(long n, long q) {
  require_nonnegative(n, "n");
  require_q(q);
  return divexact(BigInt(q).pow(static_cast<unsigned long>(n)) - BigInt(1), BigInt(q - 1));
}

BigInt q_factorial(long n, long q) {
  require_nonnegative(n, "n");
  require_q(q);
  BigInt acc(1);
  for (long i = 1; i <= n; ++i) acc *= q_int(i, q);
  return acc;
}

BigInt q_binomial(long n, long m, long q) {
  require_nonnegative(n, "n");
  require_q(q);
  if (m < 0 || m > n) return BigInt(0);
  Rational acc(1);
  for (long i = 1; i <= m; ++i) acc *= Rational(q_int(n - m + i, q), q_int(i, q));
  if (!acc.is_integer()) {
    throw ConsistencyError("q-binomial(" + std::to_string(n) + "," + std::to_string(m) + "," +
                           std::to_string(q) + ") reduced to non-integer " + acc.to_string());
  }
  return acc.num();
}

}  // namespace arch

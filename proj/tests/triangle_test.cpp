#include <doctest.h>

#include <algorithm>
#include <map>

#include "archimedes/combinatorics.hpp"
#include "archimedes/errors.hpp"
#include "archimedes/triangle.hpp"
#include "test_support.hpp"

using namespace arch;
using arch::testing::kPropertyCases;
using arch::testing::uniform;

namespace {

Rational q(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

// The defining double series truncated at `iterations`, summed term by term
// over every x (no Faulhaber polynomials).
Rational brute_partial(int s, int j, int iterations) {
  Rational total;
  for (int n = 1; n <= iterations; ++n) {
    const long xs = 1L << (n - 1);
    Rational inner;
    for (long x = 0; x < xs; ++x) {
      for (int k = 2; k <= s; ++k) {
        inner += Rational(min_cover_count(s, j, k)) * Rational::pow2(-k) * q(x).pow(static_cast<unsigned long>(s - k));
      }
    }
    total += inner * Rational::pow2(-static_cast<long>(n - 1) * (s + 1));
  }
  return total;
}

// Integral over [0,1] of sum_j (1/j!) sum_l (-1)^{j-l} C(j,l) ((2^j-j-1) x + l/2)^s,
// by expanding the integrand and integrating term by term.
Rational integrated_bound(int s) {
  RatPolynomial integrand;
  for (int j = 0; j <= s; ++j) {
    const Rational a(BigInt::pow2(static_cast<unsigned long>(j)) - BigInt(j + 1));
    for (int l = 0; l <= j; ++l) {
      Rational w = Rational(binomial(j, l)) / Rational(factorial(static_cast<unsigned long>(j)));
      if ((j - l) % 2) w = -w;
      integrand += RatPolynomial::linear(q(l, 2), a).pow(static_cast<unsigned>(s)) * w;
    }
  }
  Rational area;
  for (int d = 0; d <= integrand.degree(); ++d) area += integrand.coefficient(d) / q(d + 1);
  return area;
}

}  // namespace

TEST_SUITE("entries") {
  TEST_CASE("examples") {
    CHECK(entry(4, 2).value == q(3, 5));
    CHECK(entry(5, 3).value == q(865, 651));
    CHECK(entry(8, 1).value == q(1, 255));
    CHECK(entry(2, 1).value == q(1, 3));
    CHECK(entry(2, 1).value == q(1, 4) * q(4, 3));
    const auto e = entry(7, 3);
    CHECK(e.numerator() == BigInt(163133));
    CHECK(e.denominator() == BigInt(11811));
  }

  TEST_CASE("published table, all 35 cells") {
    const auto published = published_entries();
    CHECK(published.size() == 35);
    for (const auto& p : published) {
      CHECK_MESSAGE(entry(p.s, p.j).value == Rational::parse(p.value), "R(", p.s, ",", p.j, ")");
    }
  }

  TEST_CASE("second column is (s-1)/(s+1)") {
    for (int s = 2; s <= 20; ++s) CHECK(entry(s, 2).value == q(s - 1, s + 1));
  }

  TEST_CASE("edge columns are 1/(2^s - 1)") {
    for (int s = 2; s <= 20; ++s) {
      const Rational expected(BigInt(1), BigInt::pow2(static_cast<unsigned long>(s)) - BigInt(1));
      CHECK(entry(s, 1).value == expected);
      CHECK(entry(s, s).value == expected);
    }
  }

  TEST_CASE("entries are positive and reduced") {
    for (int s = 2; s <= 12; ++s) {
      for (const auto& e : row(s)) {
        CHECK(e.value.sign() > 0);
        CHECK(gcd(e.numerator(), e.denominator()).is_one());
      }
    }
  }

  TEST_CASE("domain") {
    CHECK_THROWS_AS(entry(1, 1), DomainError);
    CHECK_THROWS_AS(entry(4, 0), DomainError);
    CHECK_THROWS_AS(entry(4, 5), DomainError);
    CHECK_THROWS_AS(entry_partial(4, 2, 0), DomainError);
  }

  TEST_CASE("weights used by the closed form are the flipped polynomial's coefficients") {
    for (int s = 2; s <= 10; ++s) {
      const RatPolynomial flipped = flipped_poly(s);
      for (int k = 2; k <= s; ++k) {
        Rational summed;
        for (int j = 1; j <= s; ++j) summed += Rational(min_cover_count(s, j, k)) * Rational::pow2(-k);
        CHECK(summed == flipped.coefficient(s - k));
      }
    }
  }
}

TEST_SUITE("partial sums") {
  TEST_CASE("single iteration of R(2,1)") { CHECK(entry_partial(2, 1, 1) == q(1, 4)); }

  TEST_CASE("Faulhaber truncation equals term-by-term truncation") {
    for (int s = 2; s <= 6; ++s) {
      for (int j = 1; j <= s; ++j) {
        for (int n = 1; n <= 6; ++n) CHECK(entry_partial(s, j, n) == brute_partial(s, j, n));
      }
    }
  }

  TEST_CASE("partial + tail = entry, and the tail respects its bound") {
    for (int s = 2; s <= 8; ++s) {
      for (int j = 1; j <= s; ++j) {
        const Rational full = entry(s, j).value;
        for (int n : {1, 2, 5, 12, 25}) {
          const Rational partial = entry_partial(s, j, n);
          const Rational tail = entry_tail(s, j, n);
          CHECK(partial + tail == full);
          CHECK(partial <= full);
          CHECK(tail.sign() > 0);
          CHECK(tail <= entry_tail_bound(s, j, n));
        }
      }
    }
  }

  TEST_CASE("partial sums approach the entry") {
    const Rational target = entry(4, 2).value;
    Rational last_gap = target;
    for (int n = 1; n <= 20; ++n) {
      const Rational gap = target - entry_partial(4, 2, n);
      CHECK(gap < last_gap);
      last_gap = gap;
    }
  }
}

TEST_SUITE("rows") {
  TEST_CASE("row 2") {
    const auto r = row(2);
    REQUIRE(r.size() == 2);
    CHECK(r[0].value == q(1, 3));
    CHECK(r[1].value == q(1, 3));
    CHECK(row_sum(2) == q(2, 3));
  }

  TEST_CASE("row 3") {
    const auto r = row(3);
    REQUIRE(r.size() == 3);
    CHECK(r[0].value == q(1, 7));
    CHECK(r[1].value == q(1, 2));
    CHECK(r[2].value == q(1, 7));
    CHECK(row_sum(3) == q(1, 7) + q(1, 2) + q(1, 7));
    CHECK(row_sum(3) == q(11, 14));
  }

  TEST_CASE("row 8") {
    const auto r = row(8);
    REQUIRE(r.size() == 8);
    CHECK(r.front().value == q(1, 255));
    CHECK(r.back().value == q(1, 255));
  }
}

TEST_SUITE("lower bound") {
  TEST_CASE("j = 0 and j = 1 terms") {
    for (int s = 2; s <= 8; ++s) {
      const auto lb = lower_bound(s);
      Rational j0, j1;
      for (const auto& t : lb.terms) {
        if (t.j == 0) j0 += t.weight * t.t_sum;
        if (t.j == 1) j1 += t.weight * t.t_sum;
      }
      CHECK(j0.is_zero());
      CHECK(j1 == Rational::pow2(-s));
    }
  }

  TEST_CASE("LB(2) from exact integration") {
    CHECK(integrated_bound(2) == q(1, 2));
    CHECK(lower_bound(2).bound == q(1, 2));
  }

  TEST_CASE("printed formula equals the integral it came from") {
    for (int s = 2; s <= 8; ++s) CHECK(lower_bound(s).bound == integrated_bound(s));
  }

  TEST_CASE("antiderivative quotient checked for every j >= 2 term") {
    for (int s = 2; s <= 8; ++s) {
      const auto lb = lower_bound(s);
      for (const auto& t : lb.terms) CHECK(t.quotient_checked == (t.j >= 2));
      CHECK(lb.terms.size() == static_cast<std::size_t>((s + 1) * (s + 2) / 2));
    }
  }

  TEST_CASE("comparison is reported") {
    const auto lb2 = lower_bound(2);
    CHECK(lb2.row_sum == q(2, 3));
    CHECK(lb2.comparison == BoundComparison::below);
    // From s = 3 on the printed bound exceeds the row sum.
    CHECK(lower_bound(3).comparison == BoundComparison::above);
  }
}

TEST_SUITE("conjecture") {
  TEST_CASE("examples") {
    const auto report = conjecture_report(8);
    auto find = [&](int s, int j) {
      return *std::find_if(report.entries.begin(), report.entries.end(),
                           [&](const ConjectureEntry& e) { return e.s == s && e.j == j; });
    };
    const auto e64 = find(6, 4);
    CHECK(e64.denominator == BigInt(651));
    CHECK(e64.exact_hits == std::vector<int>{2, 4});

    CHECK(find(7, 3).exact_hits == std::vector<int>{3, 4});
    CHECK(find(7, 5).exact_hits == std::vector<int>{3, 4});
    CHECK(find(7, 3).denominator == BigInt(11811));

    for (int s = 2; s <= 8; ++s) {
      const auto e = find(s, 1);
      CHECK(e.denominator == BigInt::pow2(static_cast<unsigned long>(s)) - BigInt(1));
      CHECK(std::find(e.exact_hits.begin(), e.exact_hits.end(), 1) != e.exact_hits.end());
      CHECK(std::find(e.exact_hits.begin(), e.exact_hits.end(), s - 1) != e.exact_hits.end());
    }

    const auto e42 = find(4, 2);
    CHECK(e42.denominator == BigInt(5));
    CHECK(e42.exact_hits.empty());
    CHECK(std::find(e42.divisor_hits.begin(), e42.divisor_hits.end(), 2) != e42.divisor_hits.end());
  }

  TEST_CASE("exact hits are divisor hits") {
    for (const auto& e : conjecture_report(10).entries) {
      for (int m : e.exact_hits) {
        CHECK(std::find(e.divisor_hits.begin(), e.divisor_hits.end(), m) != e.divisor_hits.end());
      }
    }
  }

  TEST_CASE("bold denominators are exact hits") {
    const auto report = conjecture_report(8);
    for (const auto& p : published_entries()) {
      if (!p.bold) continue;
      for (const auto& e : report.entries) {
        if (e.s == p.s && e.j == p.j) CHECK_FALSE(e.exact_hits.empty());
      }
    }
  }
}

TEST_SUITE("b-file export") {
  TEST_CASE("examples") {
    CHECK(oeis_export(Sequence::numerators, 4, 1) == "1 1\n2 1\n3 1\n4 1\n5 1\n6 1\n7 3\n8 10\n9 1\n");
    CHECK(oeis_export(Sequence::denominators, 3, 1) == "1 3\n2 3\n3 7\n4 2\n5 7\n");
    CHECK(oeis_export(Sequence::numerators, 1, 1).empty());
    CHECK(oeis_export(Sequence::denominators, 2, 0) == "0 3\n1 3\n");
  }

  TEST_CASE("round trip") {
    std::map<int, std::vector<TriangleEntry>> rows;
    for (int s = 2; s <= 9; ++s) rows[s] = row(s);
    for (int i = 0; i < kPropertyCases; ++i) {
      const int s_max = static_cast<int>(uniform(0, 9));
      const auto which = uniform(0, 1) == 0 ? Sequence::numerators : Sequence::denominators;
      const std::int64_t offset = uniform(0, 1'000'000);
      const std::string text = oeis_export(which, s_max, offset);
      const auto parsed = parse_bfile(text);
      std::size_t pos = 0;
      for (int s = 2; s <= s_max; ++s) {
        for (const auto& e : rows[s]) {
          REQUIRE(pos < parsed.size());
          CHECK(parsed[pos].first == offset + static_cast<std::int64_t>(pos));
          CHECK(parsed[pos].second == (which == Sequence::numerators ? e.numerator() : e.denominator()));
          ++pos;
        }
      }
      CHECK(pos == parsed.size());
    }
  }

  TEST_CASE("parser tolerates comments and rejects junk") {
    const auto parsed = parse_bfile("# A280753\n\n1 3\r\n2 3\n");
    REQUIRE(parsed.size() == 2);
    CHECK(parsed[1] == std::pair<std::int64_t, BigInt>{2, BigInt(3)});
    CHECK_THROWS_AS(parse_bfile("1\n"), DomainError);
    CHECK_THROWS_AS(parse_bfile("x 3\n"), DomainError);
    CHECK_THROWS_AS(parse_bfile("1 3/4\n"), DomainError);
  }
}

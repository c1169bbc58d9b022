#include "archimedes/triangle.hpp"

#include <charconv>
#include <sstream>

#include "archimedes/combinatorics.hpp"
#include "archimedes/errors.hpp"
#include "archimedes/exactnum.hpp"
#include "archimedes/polynomial.hpp"

namespace arch {
namespace {

void require_cell(int s, int j) {
  if (s < 2) throw DomainError("triangle row s must be at least 2, got " + std::to_string(s));
  if (j < 1 || j > s) {
    throw DomainError("triangle column j must lie in 1.." + std::to_string(s) + ", got " + std::to_string(j));
  }
}

// Weight of x^{s-k} in the inner sum: M(s,j,k) / 2^k.
Rational cover_weight(int s, int j, int k) { return Rational(min_cover_count(s, j, k)) * Rational::pow2(-k); }

// F(N) = sum_{x=0}^{N-1} sum_k M(s,j,k)/2^k x^{s-k}, as a polynomial in N.
RatPolynomial inner_sum_poly(int s, int j) {
  RatPolynomial f;
  for (int k = 2; k <= s; ++k) {
    const Rational w = cover_weight(s, j, k);
    if (w.is_zero()) continue;
    f += power_sum_poly(static_cast<unsigned>(s - k)) * w;
  }
  return f;
}

// sum_{n>=1} 2^{-(n-1)(s+1)} S_m(2^{n-1}), S_m the Faulhaber polynomial.
Rational power_sum_series(int s, int m) {
  const RatPolynomial p = power_sum_poly(static_cast<unsigned>(m));
  Rational g;
  for (int d = 1; d <= p.degree(); ++d) g += p.coefficient(d) * geo_tail(static_cast<long>(d) - s - 1);
  return g;
}

}  // namespace

TriangleEntry entry(int s, int j) {
  require_cell(s, j);
  Rational value;
  for (int k = 2; k <= s; ++k) {
    const Rational w = cover_weight(s, j, k);
    if (!w.is_zero()) value += w * power_sum_series(s, s - k);
  }
  return TriangleEntry{s, j, std::move(value)};
}

Rational entry_partial(int s, int j, int iterations) {
  require_cell(s, j);
  if (iterations < 1) throw DomainError("partial sum needs at least one iteration");
  const RatPolynomial f = inner_sum_poly(s, j);
  Rational total;
  for (int n = 1; n <= iterations; ++n) {
    const auto shift = static_cast<unsigned long>(n - 1);
    const Rational x_count(BigInt::pow2(shift));
    total += f.evaluate(x_count) * Rational::pow2(-static_cast<long>(shift) * (s + 1));
  }
  return total;
}

Rational entry_tail(int s, int j, int iterations) {
  require_cell(s, j);
  if (iterations < 0) throw DomainError("iteration count must be non-negative");
  const RatPolynomial f = inner_sum_poly(s, j);
  Rational tail;
  for (int d = 1; d <= f.degree(); ++d) {
    const long e = static_cast<long>(d) - s - 1;
    tail += f.coefficient(d) * Rational::pow2(e * iterations) * geo_tail(e);
  }
  return tail;
}

Rational entry_tail_bound(int s, int j, int iterations) {
  require_cell(s, j);
  if (iterations < 0) throw DomainError("iteration count must be non-negative");
  const RatPolynomial f = inner_sum_poly(s, j);
  Rational k;
  for (int d = 1; d <= f.degree(); ++d) k += f.coefficient(d).abs() * geo_tail(static_cast<long>(d) - s - 1);
  return k * Rational::pow2(-2L * iterations);
}

std::vector<TriangleEntry> row(int s) {
  if (s < 2) throw DomainError("triangle row s must be at least 2, got " + std::to_string(s));
  std::vector<TriangleEntry> out;
  out.reserve(static_cast<std::size_t>(s));
  for (int j = 1; j <= s; ++j) out.push_back(entry(s, j));
  return out;
}

Rational row_sum(int s) {
  Rational total;
  for (const auto& e : row(s)) total += e.value;
  return total;
}

LowerBoundResult lower_bound(int s) {
  if (s < 2) throw DomainError("lower bound needs s >= 2");
  const auto e = static_cast<unsigned long>(s);
  const Rational inv_s1(BigInt(1), BigInt(s + 1));
  LowerBoundResult result;
  result.s = s;
  for (int j = 0; j <= s; ++j) {
    const Rational a(BigInt::pow2(static_cast<unsigned long>(j)) - BigInt(j + 1));
    const Rational inv_fact(BigInt(1), factorial(static_cast<unsigned long>(j)));
    for (int l = 0; l <= j; ++l) {
      const Rational half(BigInt(l), BigInt(2));
      const Rational upper = a + half;
      Rational t_sum;
      for (unsigned long t = 1; t <= e + 1; ++t) t_sum += upper.pow(t - 1) * half.pow(e - t + 1);
      t_sum *= inv_s1;

      const bool check = !a.is_zero();
      if (check) {
        const Rational quotient = (upper.pow(e + 1) - half.pow(e + 1)) / (Rational(s + 1) * a);
        if (quotient != t_sum) {
          throw ConsistencyError("lower-bound t-sum mismatch at s=" + std::to_string(s) + " j=" +
                                 std::to_string(j) + " l=" + std::to_string(l));
        }
      }
      Rational weight = Rational(binomial(j, l)) * inv_fact;
      if ((j - l) % 2 != 0) weight = -weight;
      result.bound += weight * t_sum;
      result.terms.push_back(LowerBoundTerm{j, l, std::move(weight), std::move(t_sum), check});
    }
  }
  result.row_sum = row_sum(s);
  const auto order = result.bound <=> result.row_sum;
  result.comparison = order < 0 ? BoundComparison::below
                      : order > 0 ? BoundComparison::above
                                  : BoundComparison::equal;
  return result;
}

ConjectureReport conjecture_report(int s_max, int q) {
  if (s_max < 2) throw DomainError("conjecture report needs s_max >= 2");
  ConjectureReport report;
  report.q = q;
  for (int s = 2; s <= s_max; ++s) {
    std::vector<BigInt> gaussian;
    for (int m = 0; m <= s; ++m) gaussian.push_back(q_binomial(s, m, q));
    for (auto& cell : row(s)) {
      ConjectureEntry ce{s, cell.j, cell.denominator(), {}, {}};
      for (int m = 0; m <= s; ++m) {
        const BigInt& g = gaussian[static_cast<std::size_t>(m)];
        if (g == ce.denominator) ce.exact_hits.push_back(m);
        if (ce.denominator.divides(g)) ce.divisor_hits.push_back(m);
      }
      report.entries.push_back(std::move(ce));
    }
  }
  return report;
}

std::string oeis_export(Sequence which, int s_max, std::int64_t offset) {
  if (offset < 0) throw DomainError("b-file offset must be non-negative");
  std::ostringstream out;
  std::int64_t index = offset;
  for (int s = 2; s <= s_max; ++s) {
    for (const auto& cell : row(s)) {
      const BigInt& v = which == Sequence::numerators ? cell.numerator() : cell.denominator();
      out << index++ << ' ' << v << '\n';
    }
  }
  return out.str();
}

std::vector<std::pair<std::int64_t, BigInt>> parse_bfile(std::string_view text) {
  std::vector<std::pair<std::int64_t, BigInt>> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    const auto sp = line.find(' ');
    if (sp == std::string_view::npos) throw DomainError("b-file line " + std::to_string(line_no) + " has no value");
    std::int64_t index = 0;
    const auto idx = line.substr(0, sp);
    const auto [ptr, ec] = std::from_chars(idx.data(), idx.data() + idx.size(), index);
    if (ec != std::errc{} || ptr != idx.data() + idx.size()) {
      throw DomainError("b-file line " + std::to_string(line_no) + " has a bad index");
    }
    out.emplace_back(index, BigInt::parse(line.substr(sp + 1)));
  }
  return out;
}

std::vector<PublishedEntry> published_entries() {
  return {
      {2, 1, "1/3", true},
      {2, 2, "1/3", false},
      {3, 1, "1/7", true},
      {3, 2, "1/2", false},
      {3, 3, "1/7", false},
      {4, 1, "1/15", true},
      {4, 2, "3/5", false},
      {4, 3, "10/21", false},
      {4, 4, "1/15", false},
      {5, 1, "1/31", true},
      {5, 2, "2/3", false},
      {5, 3, "865/651", false},
      {5, 4, "71/186", false},
      {5, 5, "1/31", false},
      {6, 1, "1/63", true},
      {6, 2, "5/7", false},
      {6, 3, "2630/651", false},
      {6, 4, "1427/651", true},
      {6, 5, "181/651", false},
      {6, 6, "1/63", false},
      {7, 1, "1/127", true},
      {7, 2, "3/4", false},
      {7, 3, "163133/11811", true},
      {7, 4, "306553/15748", false},
      {7, 5, "36667/11811", true},
      {7, 6, "145/762", false},
      {7, 7, "1/127", false},
      {8, 1, "1/255", true},
      {8, 2, "7/9", false},
      {8, 3, "3368938/66929", false},
      {8, 4, "129115655/602361", false},
      {8, 5, "46958822/602361", false},
      {8, 6, "43662/10795", true},
      {8, 7, "4036/32385", false},
      {8, 8, "1/255", false},
  };
}

}  // namespace arch

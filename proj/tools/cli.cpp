#include "cli.hpp"

#include <functional>
#include <map>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "archimedes/combinatorics.hpp"
#include "archimedes/covers.hpp"
#include "archimedes/errors.hpp"
#include "archimedes/quadrature.hpp"
#include "archimedes/triangle.hpp"

namespace arch::cli {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json rational_json(const Rational& r) { return Json{{"num", r.num().to_string()}, {"den", r.den().to_string()}}; }

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

Json int_list_json(const std::vector<int>& v) {
  Json arr = Json::array();
  for (int x : v) arr.push_back(x);
  return arr;
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw UsageError("format '" + format + "' is not available for this command");
}

// ---- plain commands --------------------------------------------------------

void print_triangle(int max_s, const std::string& format, std::ostream& out) {
  require_format(format, {"table", "csv", "json"});
  if (max_s < 2) throw UsageError("--max-s must be at least 2");
  if (format == "csv") {
    out << "s,j,value\n";
    for (int s = 2; s <= max_s; ++s) {
      for (const auto& e : row(s)) out << s << ',' << e.j << ',' << e.value << '\n';
    }
  } else if (format == "json") {
    Json rows = Json::array();
    for (int s = 2; s <= max_s; ++s) {
      Json cells = Json::array();
      for (const auto& e : row(s)) cells.push_back(Json{{"j", e.j}, {"value", rational_json(e.value)}});
      rows.push_back(Json{{"s", s}, {"entries", cells}});
    }
    out << Json{{"rows", rows}}.dump(2) << '\n';
  } else {
    for (int s = 2; s <= max_s; ++s) {
      out << "s=" << s << ':';
      for (const auto& e : row(s)) out << "  " << e.value;
      out << '\n';
    }
  }
}

void print_entry(int s, int j, int partial, const std::string& format, std::ostream& out) {
  require_format(format, {"table", "csv", "json"});
  const Rational value = partial > 0 ? entry_partial(s, j, partial) : entry(s, j).value;
  if (format == "csv") {
    out << "s,j,value\n" << s << ',' << j << ',' << value << '\n';
  } else if (format == "json") {
    Json j_out{{"s", s}, {"j", j}};
    if (partial > 0) j_out["partial_iterations"] = partial;
    j_out["value"] = rational_json(value);
    out << j_out.dump(2) << '\n';
  } else {
    out << value << '\n';
  }
}

void print_covers(int s, int j, bool brute_force, const EnumerationOptions& options, const std::string& format,
                  std::ostream& out) {
  require_format(format, {"table", "csv", "json"});
  std::map<int, BigInt> counts;
  if (brute_force) {
    counts = count_by_unique(s, j, options);
  } else {
    if (s < 1 || j < 1) throw DomainError("covers needs s >= 1 and j >= 1");
    for (auto& c : cover_counts(s, j)) counts.emplace(static_cast<int>(c.k), std::move(c.count));
  }
  if (format == "csv") {
    out << "k,count\n";
    for (const auto& [k, c] : counts) out << k << ',' << c << '\n';
  } else if (format == "json") {
    Json map = Json::object();
    for (const auto& [k, c] : counts) map[std::to_string(k)] = c.to_string();
    out << Json{{"s", s}, {"j", j}, {"method", brute_force ? "enumeration" : "formula"}, {"counts", map}}.dump(2)
        << '\n';
  } else {
    for (const auto& [k, c] : counts) out << k << ' ' << c << '\n';
  }
}

void print_qbinom(long n, long m, long q, const std::string& format, std::ostream& out) {
  require_format(format, {"table", "csv", "json"});
  const BigInt v = q_binomial(n, m, q);
  if (format == "csv") {
    out << "n,m,q,value\n" << n << ',' << m << ',' << q << ',' << v << '\n';
  } else if (format == "json") {
    out << Json{{"n", n}, {"m", m}, {"q", q}, {"value", v.to_string()}}.dump(2) << '\n';
  } else {
    out << v << '\n';
  }
}

void print_conjecture(int max_s, int q, const std::string& format, std::ostream& out) {
  require_format(format, {"table", "csv", "json"});
  if (max_s < 2) throw UsageError("--max-s must be at least 2");
  const ConjectureReport report = conjecture_report(max_s, q);
  if (format == "csv") {
    out << "s,j,denominator,exact_hits,divisor_hits\n";
    for (const auto& e : report.entries) {
      out << e.s << ',' << e.j << ',' << e.denominator << ",\"" << join_ints(e.exact_hits) << "\",\""
          << join_ints(e.divisor_hits) << "\"\n";
    }
  } else if (format == "json") {
    Json entries = Json::array();
    for (const auto& e : report.entries) {
      entries.push_back(Json{{"s", e.s},
                             {"j", e.j},
                             {"denominator", e.denominator.to_string()},
                             {"exact_hits", int_list_json(e.exact_hits)},
                             {"divisor_hits", int_list_json(e.divisor_hits)}});
    }
    out << Json{{"q", report.q}, {"entries", entries}}.dump(2) << '\n';
  } else {
    for (const auto& e : report.entries) {
      out << "s=" << e.s << " j=" << e.j << " D=" << e.denominator;
      if (!e.exact_hits.empty()) out << " exact m=" << join_ints(e.exact_hits);
      if (!e.divisor_hits.empty()) out << " divides m=" << join_ints(e.divisor_hits);
      if (e.unmatched()) out << " none";
      out << '\n';
    }
  }
}

const char* comparison_name(BoundComparison c) {
  switch (c) {
    case BoundComparison::below: return "below";
    case BoundComparison::equal: return "equal";
    case BoundComparison::above: return "above";
  }
  return "?";
}

void print_lower_bound(int s, const std::string& format, std::ostream& out) {
  require_format(format, {"table", "csv", "json"});
  const LowerBoundResult lb = lower_bound(s);
  if (format == "csv") {
    out << "s,bound,row_sum,comparison\n"
        << s << ',' << lb.bound << ',' << lb.row_sum << ',' << comparison_name(lb.comparison) << '\n';
  } else if (format == "json") {
    out << Json{{"s", s},
                {"bound", rational_json(lb.bound)},
                {"row_sum", rational_json(lb.row_sum)},
                {"comparison", comparison_name(lb.comparison)}}
               .dump(2)
        << '\n';
  } else {
    out << "bound    " << lb.bound << '\n'
        << "row_sum  " << lb.row_sum << '\n'
        << "bound is " << comparison_name(lb.comparison) << " row_sum\n";
  }
}

void print_export(const std::string& which, int max_s, std::int64_t offset, std::ostream& out) {
  const Sequence seq = which == "numerators" ? Sequence::numerators : Sequence::denominators;
  out << oeis_export(seq, max_s, offset);
}

// ---- verification ----------------------------------------------------------

class Checker {
 public:
  explicit Checker(std::ostream& out) : out_(out) {}

  void check(bool ok, const std::string& label, const std::string& detail = {}) {
    ++total_;
    if (!ok) ++failed_;
    out_ << (ok ? "PASS " : "FAIL ") << label;
    if (!ok && !detail.empty()) out_ << "  (" << detail << ')';
    out_ << '\n';
  }

  int finish() {
    out_ << (total_ - failed_) << '/' << total_ << " checks passed\n";
    return failed_ == 0 ? kOk : kVerifyFailed;
  }

 private:
  std::ostream& out_;
  int total_ = 0;
  int failed_ = 0;
};

int verify_archimedes(int s, int iterations, std::ostream& out) {
  if (s < 2) throw UsageError("--s must be at least 2");
  if (iterations < 1 || iterations > 62) throw UsageError("--iterations must lie in 1..62");
  Checker chk(out);
  const Rational chord = Rational(BigInt(1), BigInt(2)) - Rational(BigInt(1), BigInt(s + 1));
  Rational cumulative;
  for (int n = 1; n <= iterations; ++n) {
    const Rational area = iteration_area(s, n);
    cumulative += area;
    const Rational tail = exhaustion_tail(s, n);
    out << "n=" << n << " area=" << area << " cumulative=" << cumulative << " tail=" << tail << '\n';
    if (n <= 16) {
      const Rational direct = iteration_area_direct(s, n);
      chk.check(direct == area, "n=" + std::to_string(n) + " direct sum equals closed form",
                direct.to_string() + " vs " + area.to_string());
    }
    chk.check(cumulative + tail == chord, "n=" + std::to_string(n) + " cumulative + tail = " + chord.to_string(),
              (cumulative + tail).to_string());
    chk.check(cumulative < chord, "n=" + std::to_string(n) + " cumulative below the limit");
  }
  const Rational limit = exhaustion_limit(s);
  chk.check(limit == chord, "limit = " + chord.to_string(), limit.to_string());
  const Rational integral = integral_from_exhaustion(s);
  chk.check(integral == Rational(BigInt(1), BigInt(s + 1)),
            "integral of x^" + std::to_string(s) + " = 1/2 - limit = " + integral.to_string());
  return chk.finish();
}

int verify_covers(int max_s, int max_j, const EnumerationOptions& options, std::ostream& out) {
  if (max_s < 2 || max_s > kMaxCoverSetSize) throw UsageError("--max-s must lie in 2..20");
  for (int s = 2; s <= max_s; ++s) {
    for (int j = 1; j <= std::min(s, max_j); ++j) {
      if (!options.allow_large && search_space_size(s, j) > options.ceiling) {
        throw ResourceLimitError("C(2^" + std::to_string(s) + "-1, " + std::to_string(j) +
                                 ") exceeds the enumeration ceiling; pass --allow-large to proceed");
      }
    }
  }
  Checker chk(out);
  for (int s = 2; s <= max_s; ++s) {
    for (int j = 1; j <= std::min(s, max_j); ++j) {
      const auto counts = count_by_unique(s, j, options);
      for (int k = 0; k <= s; ++k) {
        const BigInt formula = min_cover_count(s, j, k);
        const auto it = counts.find(k);
        const BigInt enumerated = it == counts.end() ? BigInt(0) : it->second;
        if (formula.is_zero() && enumerated.is_zero()) continue;
        chk.check(formula == enumerated,
                  "M(" + std::to_string(s) + "," + std::to_string(j) + "," + std::to_string(k) +
                      ") = " + formula.to_string(),
                  "enumerated " + enumerated.to_string());
      }
    }
  }
  return chk.finish();
}

int verify_genfunc(int max_s, std::ostream& out) {
  if (max_s < 1) throw UsageError("--max-s must be at least 1");
  Checker chk(out);
  for (int s = 1; s <= max_s; ++s) {
    const RatPolynomial direct = gen_poly_direct(s);
    const RatPolynomial hw = gen_poly_hw(s);
    chk.check(direct == hw, "s=" + std::to_string(s) + " M_s(x) = " + direct.to_string(), "closed form " + hw.to_string());
  }
  return chk.finish();
}

int verify_table(int max_s, std::ostream& out) {
  if (max_s < 2 || max_s > 8) throw UsageError("--max-s must lie in 2..8 (the printed table ends at row 8)");
  Checker chk(out);
  for (const auto& p : published_entries()) {
    if (p.s > max_s) continue;
    const Rational expected = Rational::parse(p.value);
    const Rational got = entry(p.s, p.j).value;
    chk.check(got == expected, "R(" + std::to_string(p.s) + "," + std::to_string(p.j) + ") = " + std::string(p.value),
              "computed " + got.to_string());
  }
  return chk.finish();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Archimedean exhaustion, minimal covers and the triangle of rationals R(s,j)", "archimedes"};
  app.require_subcommand(1);

  const std::vector<std::string> formats{"table", "csv", "json", "bfile"};
  std::string format = "table";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
  };

  int action_result = kOk;
  std::function<int()> action;

  // triangle
  int tri_max_s = 8;
  auto* tri = app.add_subcommand("triangle", "Print rows 2..max-s of the triangle");
  tri->add_option("--max-s", tri_max_s, "Last row")->required();
  add_format(tri);
  tri->callback([&] { action = [&] { print_triangle(tri_max_s, format, out); return int{kOk}; }; });

  // entry
  int ent_s = 0, ent_j = 0, ent_partial = 0;
  auto* ent = app.add_subcommand("entry", "Exact value of R(s,j)");
  ent->add_option("--s", ent_s, "Row")->required();
  ent->add_option("--j", ent_j, "Column")->required();
  ent->add_option("--partial", ent_partial, "Truncate the series after N iterations")->check(CLI::PositiveNumber);
  add_format(ent);
  ent->callback([&] { action = [&] { print_entry(ent_s, ent_j, ent_partial, format, out); return int{kOk}; }; });

  // covers
  int cov_s = 0, cov_j = 0;
  bool cov_brute = false;
  EnumerationOptions enum_opts;
  auto add_enum_flags = [&](CLI::App* sub) {
    sub->add_option("--threads", enum_opts.threads, "Enumeration workers")->check(CLI::Range(1U, 256U));
    sub->add_flag("--allow-large", enum_opts.allow_large, "Lift the 10^9 search-space ceiling");
  };
  auto* cov = app.add_subcommand("covers", "Minimal j-covers of an s-set by uniquely covered count k");
  cov->add_option("--s", cov_s, "Set size")->required();
  cov->add_option("--j", cov_j, "Cover members")->required();
  cov->add_flag("--brute-force", cov_brute, "Enumerate instead of using the closed formula");
  add_enum_flags(cov);
  add_format(cov);
  cov->callback([&] {
    action = [&] { print_covers(cov_s, cov_j, cov_brute, enum_opts, format, out); return int{kOk}; };
  });

  // qbinom
  long qb_n = 0, qb_m = 0, qb_q = 2;
  auto* qb = app.add_subcommand("qbinom", "Gaussian binomial coefficient [n choose m]_q");
  qb->add_option("--n", qb_n)->required();
  qb->add_option("--m", qb_m)->required();
  qb->add_option("--q", qb_q, "Base (>= 2)");
  add_format(qb);
  qb->callback([&] { action = [&] { print_qbinom(qb_n, qb_m, qb_q, format, out); return int{kOk}; }; });

  // conjecture
  int conj_max_s = 8, conj_q = 2;
  auto* conj = app.add_subcommand("conjecture", "Compare reduced denominators with q-binomials");
  conj->add_option("--max-s", conj_max_s, "Last row")->required();
  conj->add_option("--q", conj_q, "Base of the q-binomials (the observed pattern is for q = 2)");
  add_format(conj);
  conj->callback([&] { action = [&] { print_conjecture(conj_max_s, conj_q, format, out); return int{kOk}; }; });

  // lower-bound
  int lb_s = 0;
  auto* lb = app.add_subcommand("lower-bound", "Row-sum lower bound formula and its comparison to the row sum");
  lb->add_option("--s", lb_s, "Row")->required();
  add_format(lb);
  lb->callback([&] { action = [&] { print_lower_bound(lb_s, format, out); return int{kOk}; }; });

  // export
  std::string exp_which;
  int exp_max_s = 0;
  std::int64_t exp_offset = 1;
  auto* exp = app.add_subcommand("export", "OEIS b-file of numerators or denominators, read by rows");
  exp->add_option("--which", exp_which)->required()->check(CLI::IsMember({"numerators", "denominators"}));
  exp->add_option("--max-s", exp_max_s, "Last row")->required();
  exp->add_option("--offset", exp_offset, "First index")->check(CLI::NonNegativeNumber);
  exp->callback([&] { action = [&] { print_export(exp_which, exp_max_s, exp_offset, out); return int{kOk}; }; });

  // verify
  auto* ver = app.add_subcommand("verify", "Cross-check exact results against independent routes");
  ver->require_subcommand(1);
  int va_s = 3, va_iter = 12;
  auto* va = ver->add_subcommand("archimedes", "Exhaustion areas, partial sums, tails and the limit");
  va->add_option("--s", va_s, "Exponent");
  va->add_option("--iterations", va_iter, "Iterations to print");
  va->callback([&] { action = [&] { return verify_archimedes(va_s, va_iter, out); }; });

  int vc_max_s = 5, vc_max_j = kMaxCoverSetSize;
  auto* vc = ver->add_subcommand("covers", "Closed formula vs brute-force enumeration");
  vc->add_option("--max-s", vc_max_s, "Largest set size");
  vc->add_option("--max-j", vc_max_j, "Largest number of members");
  add_enum_flags(vc);
  vc->callback([&] { action = [&] { return verify_covers(vc_max_s, vc_max_j, enum_opts, out); }; });

  int vg_max_s = 10;
  auto* vg = ver->add_subcommand("genfunc", "Generating polynomial: direct sum vs closed form");
  vg->add_option("--max-s", vg_max_s, "Largest set size");
  vg->callback([&] { action = [&] { return verify_genfunc(vg_max_s, out); }; });

  int vt_max_s = 8;
  auto* vt = ver->add_subcommand("table", "Computed triangle vs the published values");
  vt->add_option("--max-s", vt_max_s, "Last row (at most 8)");
  vt->callback([&] { action = [&] { return verify_table(vt_max_s, out); }; });

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (action) action_result = action();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceLimitError& e) {
    err << "refused: " << e.what() << '\n';
    return kResourceRefused;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return action_result;
}

}  // namespace arch::cli

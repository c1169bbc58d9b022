#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "archimedes/rational.hpp"
#include "cli.hpp"

using arch::Rational;
namespace cli = arch::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "archimedes");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("entry prints the exact value") {
  const auto r = run({"entry", "--s", "5", "--j", "3"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "865/651\n");
  CHECK(run({"entry", "--s", "2", "--j", "1", "--partial", "1"}).out == "1/4\n");
}

TEST_CASE("qbinom") {
  CHECK(run({"qbinom", "--n", "7", "--m", "3", "--q", "2"}).out == "11811\n");
  CHECK(run({"qbinom", "--n", "7", "--m", "3"}).out == "11811\n");
  CHECK(run({"qbinom", "--n", "7", "--m", "3", "--q", "1"}).code == cli::kUsage);
}

TEST_CASE("export is a byte-exact b-file") {
  const auto r = run({"export", "--which", "denominators", "--max-s", "3", "--offset", "1"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "1 3\n2 3\n3 7\n4 2\n5 7\n");
  CHECK(run({"export", "--which", "numerators", "--max-s", "1"}).out.empty());
  CHECK(run({"export", "--which", "primes", "--max-s", "3"}).code == cli::kUsage);
}

TEST_CASE("triangle formats") {
  CHECK(run({"triangle", "--max-s", "2", "--format", "csv"}).out == "s,j,value\n2,1,1/3\n2,2,1/3\n");
  CHECK(run({"triangle", "--max-s", "1"}).code == cli::kUsage);
  CHECK(run({"triangle", "--max-s", "3", "--format", "bfile"}).code == cli::kUsage);
  CHECK(run({"triangle", "--max-s", "3", "--format", "xml"}).code == cli::kUsage);
  const auto table = run({"triangle", "--max-s", "8"});
  CHECK(table.code == cli::kOk);
  CHECK(split_lines(table.out).size() == 7);
  CHECK(table.out.find("129115655/602361") != std::string::npos);
}

TEST_CASE("every format renders the same values") {
  const auto csv = split_lines(run({"triangle", "--max-s", "8", "--format", "csv"}).out);
  const auto json = nlohmann::json::parse(run({"triangle", "--max-s", "8", "--format", "json"}).out);
  const auto table = split_lines(run({"triangle", "--max-s", "8"}).out);

  std::vector<Rational> from_csv, from_json, from_table;
  for (std::size_t i = 1; i < csv.size(); ++i) {
    from_csv.push_back(Rational::parse(csv[i].substr(csv[i].rfind(',') + 1)));
  }
  for (const auto& row : json["rows"]) {
    for (const auto& cell : row["entries"]) {
      CHECK(cell["value"]["num"].is_string());
      from_json.push_back(Rational(arch::BigInt::parse(cell["value"]["num"].get<std::string>()),
                                   arch::BigInt::parse(cell["value"]["den"].get<std::string>())));
    }
  }
  for (const auto& line : table) {
    std::istringstream in(line.substr(line.find(':') + 1));
    for (std::string tok; in >> tok;) from_table.push_back(Rational::parse(tok));
  }
  CHECK(from_csv.size() == 35);
  CHECK(from_csv == from_json);
  CHECK(from_csv == from_table);
}

TEST_CASE("covers formula and enumeration agree in every format") {
  for (const char* fmt : {"table", "csv", "json"}) {
    auto formula = run({"covers", "--s", "4", "--j", "3", "--format", fmt});
    auto brute = run({"covers", "--s", "4", "--j", "3", "--brute-force", "--format", fmt});
    CHECK(formula.code == cli::kOk);
    CHECK(brute.code == cli::kOk);
    if (std::string(fmt) == "json") {
      const auto a = nlohmann::json::parse(formula.out);
      const auto b = nlohmann::json::parse(brute.out);
      CHECK(a["counts"] == b["counts"]);
      CHECK(a["counts"]["3"] == "16");
    } else {
      CHECK(formula.out == brute.out);
    }
  }
  CHECK(run({"covers", "--s", "3", "--j", "2"}).out == "2 3\n3 3\n");
}

TEST_CASE("output does not depend on worker count") {
  const auto one = run({"covers", "--s", "6", "--j", "3", "--brute-force", "--threads", "1"});
  const auto four = run({"covers", "--s", "6", "--j", "3", "--brute-force", "--threads", "4"});
  CHECK(one.code == cli::kOk);
  CHECK(one.out == four.out);
  CHECK(run({"conjecture", "--max-s", "8"}).out == run({"conjecture", "--max-s", "8"}).out);
}

TEST_CASE("resource refusal has its own exit status") {
  const auto r = run({"covers", "--s", "20", "--j", "3", "--brute-force"});
  CHECK(r.code == cli::kResourceRefused);
  CHECK(r.err.find("ceiling") != std::string::npos);
  CHECK(run({"verify", "covers", "--max-s", "7"}).code == cli::kResourceRefused);
}

TEST_CASE("verify subcommands pass") {
  const auto arch_run = run({"verify", "archimedes", "--s", "3", "--iterations", "12"});
  CHECK(arch_run.code == cli::kOk);
  CHECK(arch_run.out.find("PASS limit = 1/4") != std::string::npos);
  CHECK(arch_run.out.find("PASS integral of x^3 = 1/2 - limit = 1/4") != std::string::npos);
  CHECK(arch_run.out.find("FAIL") == std::string::npos);

  const auto covers = run({"verify", "covers", "--max-s", "5"});
  CHECK(covers.code == cli::kOk);

  const auto genfunc = run({"verify", "genfunc", "--max-s", "10"});
  CHECK(genfunc.code == cli::kOk);

  const auto table = run({"verify", "table", "--max-s", "8"});
  CHECK(table.code == cli::kOk);
  CHECK(table.out.find("35/35 checks passed") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"entry", "--s", "5"}).code == cli::kUsage);
  CHECK(run({"entry", "--s", "5", "--j", "9"}).code == cli::kUsage);
  CHECK(run({"verify"}).code == cli::kUsage);
  CHECK(run({"verify", "table", "--max-s", "9"}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("conjecture and lower-bound output") {
  const auto conj = run({"conjecture", "--max-s", "4", "--format", "json"});
  const auto j = nlohmann::json::parse(conj.out);
  CHECK(j["q"] == 2);
  CHECK(j["entries"].size() == 9);
  CHECK(j["entries"][0]["denominator"] == "3");

  const auto lb = run({"lower-bound", "--s", "2", "--format", "csv"});
  CHECK(lb.out == "s,bound,row_sum,comparison\n2,1/2,2/3,below\n");
}

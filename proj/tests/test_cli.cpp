#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = permrel::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

using permrel::cli::ExitCode;

TEST_CASE("nf") {
  auto r = run({"nf", "-n", "3", "2 3 1"});
  CHECK(r.code == ExitCode::kSuccess);
  CHECK(r.out == "1 2 3 ∣ i=0 ε=1 j=0 b=ε ∣ in P: yes\n");
  r = run({"nf", "-n", "3", "2 1"});
  CHECK(r.out == "2 1 ∣ i=0 ε=0 j=0 b=2 1 ∣ in P: no\n");
  r = run({"nf", "-n", "3", "--json", "a2.a3.a1"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["normal_form"] == std::vector<int>{1, 2, 3});
  CHECK(j["in_P"] == true);
}

TEST_CASE("eq and mul") {
  CHECK(run({"eq", "-n", "3", "2 3 1", "3 1 2"}).out == "equal\n");
  CHECK(run({"eq", "-n", "3", "2 1", "1 2"}).out == "not equal\n");
  CHECK(run({"mul", "-n", "3", "3", "1 1 2 3"}).out.rfind("1 2 3 3 1 ∣", 0) == 0);
}

TEST_CASE("phi") {
  CHECK(run({"phi", "-n", "3", "1 2 3"}).out == "1 ; c^1\n");
  CHECK(run({"phi", "-n", "3", "3"}).out == "x2^-1 x1^-1 ; c^1\n");
  CHECK(run({"phi", "-n", "3", ""}).out == "1 ; c^0\n");
}

TEST_CASE("growth, series, confluence, reduce") {
  const auto g = run({"growth", "-n", "3", "--h", "cyclic", "--max-len", "6"});
  CHECK(g.code == ExitCode::kSuccess);
  CHECK(g.out == "1,3,9,25,69,189,517\n");
  CHECK(run({"growth", "-n", "3", "--h", "sym", "--max-len", "3"}).out == "1,3,9,22\n");
  CHECK(run({"series", "-n", "3", "--max-len", "5"}).code == ExitCode::kSuccess);

  const auto c = run({"confluence", "-n", "3", "--max-m", "4"});
  CHECK(c.code == ExitCode::kSuccess);
  CHECK(c.out.rfind("all overlaps joinable", 0) == 0);
  CHECK(c.out.find("case 5") != std::string::npos);
  CHECK(run({"confluence", "-n", "3", "--max-m", "2", "--with-degenerate-rule"}).code == ExitCode::kAssertion);

  const auto r = run({"reduce", "-n", "4", "--h", "sym"});
  CHECK(r.out.rfind("H1 order 6; induced relations: 5 (deduplicated)\n", 0) == 0);
}

TEST_CASE("explore, rho, symid") {
  const auto e = run({"explore", "-n", "3", "--len", "3", "--csv"});
  CHECK(e.out.find("312,123") != std::string::npos);
  CHECK(run({"explore", "-n", "3", "--len", "3"}).out == "length 3: 25 classes, 24 singletons\n");
  CHECK(run({"explore", "-n", "3", "--h", "sym", "--len", "2", "--check-cancel"}).code == ExitCode::kSuccess);
  CHECK(run({"rho", "-n", "3", "--h", "sym", "1 2", "2 1", "--max-power", "1"}).out == "related (power 1)\n");
  CHECK(run({"rho", "-n", "3", "--h", "sym", "1", "2"}).out.rfind("unknown", 0) == 0);
  CHECK(run({"symid", "-n", "3", "--h", "sym"}).out == "(1,2): holds\n(1,3): holds\n(2,3): holds\n");
}

TEST_CASE("exit codes") {
  CHECK(run({"nf", "-n", "3", "4"}).code == ExitCode::kUsage);
  CHECK(run({"nf", "-n", "3", "--h", "sym", "1"}).code == ExitCode::kUsage);
  CHECK(run({"frobnicate"}).code == ExitCode::kUsage);
  CHECK(run({}).code == ExitCode::kUsage);
  CHECK(run({"growth", "-n", "3", "--max-len", "20", "--budget", "1000"}).code == ExitCode::kBudget);
  CHECK(run({"rho", "-n", "3", "--h", "trivial", "1 2", "2 1"}).code == ExitCode::kAssertion);
  const auto bad = run({"nf", "-n", "3", "4"});
  CHECK(bad.out.empty());
  CHECK_FALSE(bad.err.empty());
}

TEST_CASE("output is deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"series", "-n", "4", "--max-len", "5", "--json"},
           {"confluence", "-n", "4", "--max-m", "3", "--json"},
           {"explore", "-n", "3", "--h", "sym", "--len", "4", "--csv"}}) {
    CHECK(run(args).out == run(args).out);
  }
}

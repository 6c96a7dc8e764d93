// End-to-end tests that spawn the actual binary (path in SYLVER_CLI).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "sylver/render.hpp"

using namespace sylver;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const char* bin = std::getenv("SYLVER_CLI");
  REQUIRE_MESSAGE(bin != nullptr, "SYLVER_CLI must point at the binary");
  const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof(buf), pipe)) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t pos = text.find('\n', start);
    if (pos == std::string::npos) {
      out.push_back(text.substr(start));
      break;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

}  // namespace

TEST_CASE("list identities") {
  const RunResult r = run_cli("--list-identities");
  CHECK(r.exit_code == 0);
  const auto names = lines_of(r.out);
  CHECK(names.size() == 8);
  CHECK(std::find(names.begin(), names.end(), "sylvester") != names.end());
  CHECK(std::find(names.begin(), names.end(), "dilcher") != names.end());
}

TEST_CASE("verify emits a parseable passing record") {
  const RunResult r = run_cli("verify --identity sylvester --nodes 1,2 --d 3");
  CHECK(r.exit_code == 0);
  const IdentityReport rep = report_from_json_line(lines_of(r.out).at(0));
  CHECK(rep.identity == "sylvester");
  CHECK(rep.field == "rational");
  CHECK(rep.lhs == std::vector<std::string>{"7"});
  CHECK(rep.rhs == std::vector<std::string>{"7"});
  CHECK(rep.pass == true);
}

TEST_CASE("verify euler zero case") {
  const RunResult r = run_cli("verify --identity euler --nodes 1,2,3 --d 1");
  CHECK(r.exit_code == 0);
  const IdentityReport rep = report_from_json_line(lines_of(r.out).at(0));
  CHECK(rep.lhs == std::vector<std::string>{"0"});
  CHECK(rep.pass == true);
}

TEST_CASE("verify f2 defaults the parameter to one") {
  const RunResult r = run_cli("verify --identity f2 --nodes 1,2,3");
  CHECK(r.exit_code == 0);
  const IdentityReport rep = report_from_json_line(lines_of(r.out).at(0));
  CHECK(rep.lhs == std::vector<std::string>{"1"});
}

TEST_CASE("verify over a prime field records the modulus") {
  const RunResult r = run_cli("verify --identity sylvester --n 4 --d 7 --field prime");
  CHECK(r.exit_code == 0);
  const IdentityReport rep = report_from_json_line(lines_of(r.out).at(0));
  CHECK(rep.field == "prime");
  CHECK(rep.prime == kDefaultPrime);
  CHECK(rep.pass == true);
}

TEST_CASE("verify over float64 reports an error magnitude instead of a verdict") {
  const RunResult r = run_cli("verify --identity sylvester --nodes 1,2,3 --d 4 --field float64");
  CHECK(r.exit_code == 0);
  const IdentityReport rep = report_from_json_line(lines_of(r.out).at(0));
  CHECK(!rep.pass.has_value());
  REQUIRE(rep.relative_error.has_value());
  CHECK(*rep.relative_error < 1e-12);
}

TEST_CASE("pretty mode is one human line") {
  const RunResult r = run_cli("verify --identity sylvester --nodes 1,2 --d 3 --pretty");
  CHECK(r.exit_code == 0);
  const auto ls = lines_of(r.out);
  REQUIRE(ls.size() == 1);
  CHECK(ls[0].rfind("identity=sylvester", 0) == 0);
  CHECK(ls[0].find("pass=true") != std::string::npos);
}

TEST_CASE("usage and config errors exit with status two") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("verify --identity unknown --n 3 --d 1").exit_code == 2);
  CHECK(run_cli("verify --identity sylvester --nodes 1,1 --d 3").exit_code == 2);
  CHECK(run_cli("verify --identity sylvester --nodes 5 --d 3").exit_code == 2);
  CHECK(run_cli("verify --identity sylvester --d 3").exit_code == 2);
  CHECK(run_cli("verify --identity sylvester --n 3").exit_code == 2);
  CHECK(run_cli("verify --identity sylvester --n 3 --d -1").exit_code == 2);
  CHECK(run_cli("verify --identity extended_euler --n 3 --d 1").exit_code == 2);
  CHECK(run_cli("verify --identity sylvester --n 3 --d 1 --field nosuch").exit_code == 2);
  CHECK(run_cli("verify --identity sylvester --n 3 --d 1 --field prime --prime 100").exit_code ==
        2);
  CHECK(run_cli("verify --identity dilcher --n 3 --d 1 --field prime").exit_code == 2);
  CHECK(run_cli("verify --identity egf --n 3 --field float64").exit_code == 2);
  CHECK(run_cli("verify --identity sylvester --nodes 1,0.5 --d 3").exit_code == 2);
  CHECK(run_cli("campaign --identity sylvester --n-range 1..4").exit_code == 2);
  CHECK(run_cli("campaign --identity dilcher").exit_code == 2);
  CHECK(run_cli("--no-such-flag").exit_code == 2);
  CHECK(run_cli("verify --identity euler --nodes 1,2,3 --d 3").exit_code == 2);
}

TEST_CASE("help exits zero") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("verify --help").exit_code == 0);
}

TEST_CASE("nodes reduce mod p and duplicates after reduction are rejected") {
  // 1 and 8 collide mod 7.
  const RunResult r =
      run_cli("verify --identity euler --nodes 1,8 --d 0 --field prime --prime 7");
  CHECK(r.exit_code == 2);
  const RunResult ok =
      run_cli("verify --identity euler --nodes 1,2 --d 0 --field prime --prime 7");
  CHECK(ok.exit_code == 0);
}

TEST_CASE("campaign output is byte identical across runs and thread counts") {
  const std::string base = "campaign --identity sylvester --trials 40 --seed 31107";
  const RunResult a = run_cli(base);
  const RunResult b = run_cli(base);
  const RunResult c = run_cli(base + " --threads 4");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  const auto ls = lines_of(a.out);
  REQUIRE(ls.size() == 1);  // no failures, summary only
  CHECK(ls[0].find("\"passed\":40") != std::string::npos);
}

TEST_CASE("campaign over rationals works for every identity") {
  for (const std::string name :
       {"euler", "extended_euler", "f2", "newton", "egf", "dilcher"}) {
    const RunResult r = run_cli("campaign --identity " + name +
                                " --trials 5 --field rational --d-range 1..8 --seed 2");
    CAPTURE(name);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"passed\":5") != std::string::npos);
  }
}

TEST_CASE("dilcher table emits one record per cell plus a summary") {
  const RunResult r = run_cli("dilcher-table --n-max 3 --d-max 2");
  CHECK(r.exit_code == 0);
  const auto ls = lines_of(r.out);
  REQUIRE(ls.size() == 7);
  for (std::size_t i = 0; i < 6; ++i) {
    const IdentityReport rep = report_from_json_line(ls[i]);
    CHECK(rep.identity == "dilcher");
    CHECK(rep.pass == true);
  }
  CHECK(ls[6].find("\"type\":\"dilcher_summary\"") != std::string::npos);
  CHECK(ls[6].find("\"cells\":6") != std::string::npos);
  CHECK(ls[6].find("\"mismatches\":0") != std::string::npos);
}

TEST_CASE("stability bench emits parseable records and summaries") {
  const RunResult r =
      run_cli("bench-stability --n-list 3 --d-list 4 --spread-list 1,1e-6 --trials 3 --seed 5");
  CHECK(r.exit_code == 0);
  const auto ls = lines_of(r.out);
  REQUIRE(ls.size() == 8);  // 2 cells x (3 records + summary)
  int records = 0, summaries = 0;
  for (const auto& line : ls) {
    if (line.find("\"type\":\"stability_record\"") != std::string::npos) {
      const StabilityRecord rec = stability_from_json_line(line);
      CHECK(rec.n == 3);
      CHECK(rec.d == 4);
      ++records;
    } else if (line.find("\"type\":\"stability_summary\"") != std::string::npos) {
      ++summaries;
    }
  }
  CHECK(records == 6);
  CHECK(summaries == 2);
  // Determinism for the bench too.
  CHECK(run_cli("bench-stability --n-list 3 --d-list 4 --spread-list 1,1e-6 --trials 3 --seed 5")
            .out == r.out);
}

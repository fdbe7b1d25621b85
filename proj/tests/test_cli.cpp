#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "bernkit/cli.hpp"
#include "bernkit/identities.hpp"
#include "bernkit/report.hpp"
#include "bernkit/scan.hpp"

#include "json.hpp"

#include <cstdlib>
#include <sstream>

using namespace bernkit;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string &text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    v.push_back(line);
  return v;
}

IdentityReport reverify(const IdentityReport &r) {
  ScanTask t{r.identity, r.n, r.p, r.N};
  return evaluate(t);
}

} // namespace

TEST_CASE("seq tables") {
  Run r = run({"seq", "bernoulli", "--n-max", "4", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) ==
        std::vector<std::string>{"n,value", "0,1", "1,-1/2", "2,1/6", "3,0", "4,-1/30"});
  r = run({"seq", "euler", "--n-max", "4", "--format", "csv"});
  CHECK(lines(r.out) == std::vector<std::string>{"n,value", "0,1", "2,-1", "4,5"});
  r = run({"seq", "bbar", "--n-max", "2", "--format", "csv"});
  CHECK(lines(r.out) == std::vector<std::string>{"n,value", "0,1", "1,0", "2,-1/12"});
  r = run({"seq", "h2", "--n-max", "2", "--format", "csv"});
  CHECK(lines(r.out) == std::vector<std::string>{"n,value", "1,1/2", "2,35/24"});
  CHECK(run({"seq", "catalan", "--n-max", "2"}).code == 2);
  CHECK(run({"seq", "bernoulli", "--n-max", "-1"}).code == 2);
}

TEST_CASE("series dumps") {
  Run r = run({"series", "psi_tilde", "--order", "6", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) ==
        std::vector<std::string>{"order,coeff", "2,-1/12", "4,1/120", "6,-1/252"});
  r = run({"series", "g", "--order", "5", "--format", "json"});
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.size() == 3);
  CHECK(j[2]["coeff"] == "5/32");
  CHECK(run({"series", "tan", "--order", "4"}).code == 2);
}

TEST_CASE("verify exit codes") {
  Run r = run({"verify", "--identity", "miki", "--n-max", "50", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(lines(r.out).size() == 50);
  CHECK(run({"verify", "--identity", "family-fpz", "--p", "1/2", "--n-max", "20"}).code == 0);
  CHECK(run({"verify", "--identity", "miki", "--n-max", "1"}).code == 2);
  CHECK(run({"verify", "--identity", "miki", "--n-min", "1", "--n-max", "3"}).code == 1);
  CHECK(run({"verify", "--identity", "family-miki", "--n-max", "4"}).code == 2);
  CHECK(run({"verify", "--identity", "multi-lhs", "--n-max", "4"}).code == 2);
  CHECK(run({"verify", "--identity", "miki", "--n-max", "5", "--float-p", "0.5"}).code == 2);
  CHECK(run({"verify", "--identity", "family-miki", "--p", "1/2", "--float-p", "0.5",
             "--n-max", "5"})
            .code == 2);
  CHECK(run({"verify", "--identity", "family-miki", "--p", "1//2", "--n-max", "5"}).code == 2);
  CHECK(run({"verify", "--n-max", "5"}).code == 2);
  CHECK(run({"verify", "--identity", "miki", "--n-max", "5", "--format", "xml"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("perturbation flips the exit code") {
  for (const char *index : {"2", "4", "10"}) {
    const Run r = run({"verify", "--identity", "euler", "--identity", "miki", "--identity", "fpz",
                       "--n-max", "12", "--perturb-b", index, "--format", "csv"});
    CHECK(r.code == 1);
    CHECK(r.out.find(",false") != std::string::npos);
  }
}

TEST_CASE("family rows at a pole are failures") {
  const Run r = run({"verify", "--identity", "family-miki", "--p", "-1", "--n-max", "3",
                     "--format", "json"});
  CHECK(r.code == 1);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j[0].contains("error"));
  CHECK(j[0]["ok"] == false);
}

TEST_CASE("json output round-trips") {
  const Run r = run({"verify", "--identity", "family-mixed", "--identity", "gessel",
                     "--identity", "multi-lhs", "--N", "3", "--p", "5/2", "--p", "-1/4",
                     "--n-max", "9", "--format", "json"});
  CHECK(r.code == 0);
  const nlohmann::json rows = nlohmann::json::parse(r.out);
  CHECK(rows.size() == 2 * 8 + 7 + 7);
  for (const nlohmann::json &row : rows) {
    const IdentityReport parsed = identity_report_from_json(row);
    CHECK(to_json(parsed) == row);
    const IdentityReport again = reverify(parsed);
    CHECK(again.residual == parsed.residual);
    CHECK(again.lhs == parsed.lhs);
  }
}

TEST_CASE("output order does not depend on the worker count") {
  const std::vector<std::string> base = {"verify",     "--identity", "fpz-cubic", "--identity",
                                         "family-fpz", "--identity", "euler",     "--p",
                                         "3/2",        "--p",        "0",         "--n-max",
                                         "16",         "--format",   "csv"};
  std::vector<std::string> serial = base, parallel = base;
  serial.insert(serial.end(), {"--jobs", "1"});
  parallel.insert(parallel.end(), {"--jobs", "6"});
  const Run a = run(serial), b = run(parallel);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const std::vector<std::string> rows = lines(a.out);
  CHECK(rows[1].rfind("euler,2,", 0) == 0);
  CHECK(rows.back().rfind("fpz-cubic,16,", 0) == 0);
}

TEST_CASE("jobs default comes from the environment") {
  setenv("BERNKIT_JOBS", "3", 1);
  CHECK(run({"verify", "--identity", "miki", "--n-max", "6"}).code == 0);
  setenv("BERNKIT_JOBS", "many", 1);
  CHECK(run({"verify", "--identity", "miki", "--n-max", "6"}).code == 2);
  unsetenv("BERNKIT_JOBS");
}

TEST_CASE("float families") {
  const Run r = run({"verify", "--identity", "family-fpz", "--float-p", "0.5", "--float-p",
                     "1.25", "--n-max", "10", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).size() == 18);
  CHECK(run({"verify", "--identity", "family-fpz", "--float-p", "-1", "--n-max", "4"}).code == 1);
}

TEST_CASE("quadcheck") {
  Run r = run({"quadcheck", "psi_tilde", "--x", "2", "--x", "5", "--x", "10", "--format", "json"});
  CHECK(r.code == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j.size() == 3);
  for (const auto &row : j) {
    CHECK(row["ok"] == true);
    CHECK(row.contains("abs_dev"));
    CHECK(row["name"] == "psi_tilde");
  }
  CHECK(run({"quadcheck", "zeta"}).code == 0);
  CHECK(run({"quadcheck", "g_squared", "--x", "5"}).code == 0);
  CHECK(run({"quadcheck", "psi_tilde_p", "--p", "1"}).code == 0);
  CHECK(run({"quadcheck", "psi_tilde", "--x", "0.5"}).code == 1);
  CHECK(run({"quadcheck", "tan"}).code == 2);
}

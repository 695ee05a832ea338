// Drives the installed CLI binary through popen; SYMGAP_CLI_BIN and
// SYMGAP_TEST_DATA come from the build system.

#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "symgap/report.hpp"

using namespace symgap;

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const char* bin = std::getenv("SYMGAP_CLI_BIN");
  REQUIRE(bin != nullptr);
  std::string cmd = std::string(bin) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 1024> buf;
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string data_file(const std::string& name) {
  const char* dir = std::getenv("SYMGAP_TEST_DATA");
  REQUIRE(dir != nullptr);
  return std::string(dir) + "/" + name;
}

}  // namespace

TEST_CASE("cli: fan-6 hypergraph passes with exit 0") {
  RunResult r = run_cli("check-hypergraph " + data_file("fan6.hg"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("lambda2-equality") != std::string::npos);
  CHECK(r.output.find("overall: PASS") != std::string::npos);
}

TEST_CASE("cli: triangle graph passes, lambda2 = 1/2 both sides") {
  RunResult r = run_cli("check-hypergraph " + data_file("triangle.hg"));
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("0.500000000000") != std::string::npos);
}

TEST_CASE("cli: malformed weight exits 2") {
  RunResult r = run_cli("check-hypergraph " + data_file("bad_weight.hg"));
  CHECK(r.exit_code == 2);
}

TEST_CASE("cli: missing file exits 2") {
  RunResult r = run_cli("check-hypergraph /nonexistent/file.hg");
  CHECK(r.exit_code == 2);
}

TEST_CASE("cli: audit flag runs every admissible pivot on the fan") {
  RunResult r = run_cli("check-hypergraph --audit " + data_file("fan6.hg"));
  CHECK(r.exit_code == 0);
  for (int pivot = 2; pivot <= 6; ++pivot)
    CHECK(r.output.find("audit-pivot-" + std::to_string(pivot)) !=
          std::string::npos);
}

TEST_CASE("cli: classic octopus passes") {
  RunResult r = run_cli(
      "verify-inequality --shape classic-octopus --n 5 "
      "--sets \"2;3;4;5\" --weights \"1,1/2,2,3\"");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("psd-sweep") != std::string::npos);
}

TEST_CASE("cli: section-8 general input fails with the (2,2) witness") {
  RunResult r = run_cli(
      "verify-inequality --shape general --n 4 --sets \"2;2,3,4\" "
      "--weights \"1,1\"");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("(2,2)") != std::string::npos);
  CHECK(r.output.find("-2.0") != std::string::npos);
}

TEST_CASE("cli: overlapping sets under the disjoint shape exit 2") {
  RunResult r = run_cli(
      "verify-inequality --shape disjoint --n 5 --sets \"2,3;3,4\" "
      "--weights \"1,1\"");
  CHECK(r.exit_code == 2);
}

TEST_CASE("cli: counterexamples report passes") {
  RunResult r = run_cli("counterexamples");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("counterexample-1") != std::string::npos);
  CHECK(r.output.find("counterexample-2") != std::string::npos);
}

TEST_CASE("cli: ijlm without --long is a resource refusal") {
  RunResult r = run_cli("symbolic-gamma --pattern ijlm");
  CHECK(r.exit_code == 3);
}

TEST_CASE("cli: iijl certificate with small-k sweep") {
  RunResult r = run_cli(
      "symbolic-gamma --pattern iijl --small-k --out /tmp/symgap_test.cert");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("shift-negate-certificate") != std::string::npos);
  CHECK(r.output.find("small-k-2") != std::string::npos);
  std::ifstream cert("/tmp/symgap_test.cert");
  REQUIRE(cert.good());
  std::string first;
  std::getline(cert, first);
  CHECK(first == "symgap-gamma-certificate v1");
  std::remove("/tmp/symgap_test.cert");
}

TEST_CASE("cli: json report round-trips to the identical verdict set") {
  std::string json_path = "/tmp/symgap_report.json";
  RunResult r = run_cli("check-hypergraph --json " + json_path + " " +
                        data_file("triangle.hg"));
  CHECK(r.exit_code == 0);
  std::ifstream in(json_path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  auto verdicts = VerificationReport::parse_verdicts(ss.str());
  REQUIRE(verdicts.size() >= 2);
  for (const auto& [name, v] : verdicts) CHECK(v == Verdict::Pass);
  CHECK(verdicts[0].first == "lambda2-equality");
  std::remove(json_path.c_str());
}

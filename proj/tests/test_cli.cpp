// End-to-end checks of the installed binary: exit-code contract and output
// formats, driven through a shell.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#ifndef SANDWICH_CLI_PATH
#error "SANDWICH_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
  std::string command = std::string(SANDWICH_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  std::array<char, 4096> buffer;
  size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) output.append(buffer.data(), got);
  int status = pclose(pipe);
  return RunResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1, std::move(output)};
}

}  // namespace

TEST_CASE("exit code 0 on passing commands") {
  CHECK(run("classify IS 3").exit_code == 0);
  CHECK(run("count 4").exit_code == 0);
  CHECK(run("witness T 3 \"[1,1,2]\" \"[3,2,2]\"").exit_code == 0);
  CHECK(run("verify prop2 --grid 3").exit_code == 0);
}

TEST_CASE("exit code 1 on verification failure with a counterexample message") {
  auto r = run("witness T 3 \"[1,1,2]\" \"[1,2,3]\"");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("type mismatch (1,1,0) vs (3,0,0)") != std::string::npos);

  auto r2 = run("witness IS 2 \"[2,-]\" \"[1,2]\"");
  CHECK(r2.exit_code == 1);
  CHECK(r2.output.find("rank mismatch") != std::string::npos);
}

TEST_CASE("exit code 2 on usage errors") {
  CHECK(run("witness T 3 \"[1,1\" \"[1,2,3]\"").exit_code == 2);       // bad literal
  CHECK(run("classify Q 3").exit_code == 2);                           // unknown family
  CHECK(run("verify no-such-theorem").exit_code == 2);                 // unknown id
  CHECK(run("classify T 9").exit_code == 2);                           // cap exceeded
  CHECK(run("frobnicate").exit_code == 2);                             // unknown subcommand
  CHECK(run("count 40").exit_code == 2);                               // beyond exact range
}

TEST_CASE("json output parses and matches the text verdict") {
  auto r = run("--format json classify IS 3");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["ok"] == true);
  CHECK(j["extra"]["class_count"] == 4);

  auto csv = run("--format csv count 3");
  CHECK(csv.exit_code == 0);
  CHECK(csv.output.find("partition,type,count") != std::string::npos);
}

TEST_CASE("global flags may follow the subcommand") {
  CHECK(run("verify thm3 --grid 4 --jobs 2").exit_code == 0);
  CHECK(run("idempotents B \"b^2 a^1\" --chain 3").output.find("b^3 a^4") != std::string::npos);
}

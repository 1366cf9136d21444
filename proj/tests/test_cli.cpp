#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

// Runs the CLI binary with stderr folded into stdout.
RunResult run(const std::string& args) {
  const std::string cmd = std::string(MSPLIT_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  std::string output;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) output += buf.data();
  const int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), output};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  REQUIRE(out.good());
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

const char* kF1 = R"({
  "p": 3,
  "ground": ["a", "b", "c", "d"],
  "columns": [[1, 0], [0, 1], [1, 1], [1, 2]],
  "T": ["c", "d"]
})";

const char* kF3 = R"({
  "p": 2,
  "ground": ["a", "b", "c", "d", "e", "f"],
  "columns": [[1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [0, 0, 1, 1]],
  "T": ["a", "d"]
})";

const char* kF4 = R"({
  "p": 3,
  "ground": ["a", "b", "c"],
  "columns": [[1, 0], [0, 1], [1, 1]],
  "T": ["a"]
})";

}  // namespace

TEST_CASE("circuits with classification") {
  write_file("cli_f1.json", kF1);
  const auto r = run("circuits cli_f1.json");
  CHECK(r.exit_code == 0);
  CHECK(r.output ==
        "{a,b,c}  NPT\n"
        "{a,b,d}  NPT\n"
        "{a,c,d}  NPT\n"
        "{b,c,d}  PT\n");
}

TEST_CASE("split emission round trips through the toolchain") {
  write_file("cli_f1.json", kF1);
  CHECK(run("split cli_f1.json --out cli_f1_split.json").exit_code == 0);
  const auto circuits = run("circuits cli_f1_split.json");
  CHECK(circuits.exit_code == 0);
  CHECK(circuits.output == "{b,c,d}  PT\n");
  // The split matroid has a coloop, hence is disconnected.
  const auto conn = run("connectivity cli_f1_split.json --n 2");
  CHECK(conn.exit_code == 1);
  CHECK(conn.output == "2-connected: no\n");
}

TEST_CASE("element split emission") {
  write_file("cli_f4.json", kF4);
  CHECK(run("esplit cli_f4.json --out cli_f4_esplit.json").exit_code == 0);
  const auto circuits = run("circuits cli_f4_esplit.json");
  CHECK(circuits.exit_code == 0);
  CHECK(circuits.output.find("{a,b,c,z}") != std::string::npos);
}

TEST_CASE("rank subcommand") {
  write_file("cli_f1.json", kF1);
  CHECK(run("rank cli_f1.json --set a,b").output == "2\n");
  CHECK(run("rank cli_f1.json --set a,b,c --split").output == "3\n");
  CHECK(run("rank cli_f1.json --set b,c,d --split").output == "2\n");
  CHECK(run("rank cli_f1.json --set b,d --esplit").output == "3\n");
  CHECK(run("rank cli_f1.json --set \"\"").output == "0\n");
}

TEST_CASE("bases subcommand") {
  write_file("cli_f1.json", kF1);
  const auto plain = run("bases cli_f1.json");
  CHECK(plain.exit_code == 0);
  CHECK(plain.output == "{a,b}\n{a,c}\n{a,d}\n{b,c}\n{b,d}\n{c,d}\n");
  const auto predicted = run("bases cli_f1.json --predicted");
  CHECK(predicted.exit_code == 0);
  CHECK(predicted.output == "{a,b,c}\n{a,b,d}\n{a,c,d}\n");
}

TEST_CASE("classify subcommand") {
  write_file("cli_f1.json", kF1);
  const auto r = run("classify cli_f1.json");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("{b,c,d}  PT  t_sum=0") != std::string::npos);
  CHECK(r.output.find("non-trivial splitting") != std::string::npos);
}

TEST_CASE("eulerian subcommand") {
  write_file("cli_f3.json", kF3);
  const auto r = run("eulerian cli_f3.json");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "{a,b,c}\n{d,e,f}\n");

  write_file("cli_f4.json", kF4);
  const auto re = run("eulerian cli_f4.json --esplit");
  CHECK(re.exit_code == 0);
  CHECK(re.output == "{a,b,c,z}\n");
}

TEST_CASE("ptdecomp subcommand") {
  write_file("cli_f3.json", kF3);
  const auto r = run("ptdecomp cli_f3.json");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "pair {a,b,c} + {d,e,f}  [union-in-C2]\n");

  write_file("cli_f4.json", kF4);
  CHECK(run("ptdecomp cli_f4.json").exit_code == 1);
}

TEST_CASE("verify subcommand") {
  write_file("cli_f1.json", kF1);
  const auto r = run("verify cli_f1.json");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("L1.1") != std::string::npos);
  CHECK(r.output.find("FAIL") == std::string::npos);
}

TEST_CASE("malformed input exits with code 2") {
  CHECK(run("circuits does_not_exist.json").exit_code == 2);
  write_file("cli_bad.json", "{ nope");
  CHECK(run("circuits cli_bad.json").exit_code == 2);
  write_file("cli_composite.json", R"({"p": 4, "ground": ["a"], "columns": [[1]]})");
  CHECK(run("circuits cli_composite.json").exit_code == 2);
  CHECK(run("nosuchcommand").exit_code == 2);
  // T required but absent.
  write_file("cli_no_t.json", R"({"p": 3, "ground": ["a", "b", "c"],
    "columns": [[1, 0], [0, 1], [1, 1]]})");
  CHECK(run("classify cli_no_t.json").exit_code == 2);
}

TEST_CASE("element cap override via environment") {
  // Ten elements exceed a cap of 5.
  write_file("cli_wide.json", R"({"p": 2,
    "ground": ["a","b","c","d","e","f","g","h","i","j"],
    "columns": [[1,0],[0,1],[1,1],[1,0],[0,1],[1,1],[1,0],[0,1],[1,1],[1,0]]})");
  const std::string cmd = "MSPLIT_MAX_ELEMENTS=5 " + std::string(MSPLIT_CLI_PATH) +
                          " circuits cli_wide.json 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::string output;
  while (fgets(buf.data(), buf.size(), pipe)) output += buf.data();
  CHECK(WEXITSTATUS(pclose(pipe)) == 2);
  CHECK(output.find("cap") != std::string::npos);
  // Without the override the same file is fine.
  CHECK(run("circuits cli_wide.json").exit_code == 0);
}

TEST_CASE("suite runs deterministically") {
  const auto r1 = run("suite --seed 7 --count 2 --format json --out cli_suite1.json");
  const auto r2 = run("suite --seed 7 --count 2 --format json --out cli_suite2.json");
  CHECK(r1.exit_code == 0);
  CHECK(r2.exit_code == 0);
  const std::string a = read_file("cli_suite1.json");
  const std::string b = read_file("cli_suite2.json");
  CHECK(!a.empty());
  CHECK(a == b);

  const auto table = run("suite --seed 7 --count 2");
  CHECK(table.exit_code == 0);
  CHECK(table.output.find("records:") != std::string::npos);
}

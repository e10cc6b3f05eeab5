#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "clusteralg/seed.hpp"

#ifndef CLUSTERALG_CLI_PATH
#define CLUSTERALG_CLI_PATH ""
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(CLUSTERALG_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t got = fread(buf, 1, sizeof(buf), pipe)) out.append(buf, got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  auto dir = std::filesystem::temp_directory_path() / "clusteralg_cli_tests";
  std::filesystem::create_directories(dir);
  auto path = dir / name;
  std::ofstream(path) << text;
  return path;
}

const std::string kKroneckerSeed = R"({"n": 2, "m": 0, "matrix": [[0, 2], [-2, 0]]})";
const std::string kMarkovSeed =
    R"({"n": 3, "m": 0, "matrix": [[0, 2, -2], [-2, 0, 2], [2, -2, 0]]})";

}  // namespace

TEST_CASE("cli: cheb") {
  auto r = run_cli("cheb 3 9");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "987\n");
  CHECK(run_cli("cheb 3 7").out == "144\n");
  CHECK(run_cli("cheb 3 -1").out == "-3\n");
}

TEST_CASE("cli: compat lists reflect the figure verdicts") {
  auto small = run_cli("compat 6 4 3 --list");
  CHECK(small.exit_code == 0);
  CHECK(small.out.find("S1={u1,u2} S2={v3,v4}") == std::string::npos);
  auto large = run_cli("compat 7 4 3 --list");
  CHECK(large.exit_code == 0);
  CHECK(large.out.find("S1={u1,u2} S2={v3,v4}") != std::string::npos);
}

TEST_CASE("cli: classify") {
  auto r = run_cli("classify 0 1 1 5");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("AlmostCyclic(5)") == 0);
  CHECK(run_cli("classify 1 2 1 3").exit_code == 1);  // not classified
}

TEST_CASE("cli: mutate") {
  auto seed = write_temp("kronecker.json", kKroneckerSeed);
  auto word1 = write_temp("word1.json", R"({"word": [1]})");
  auto r = run_cli("mutate --seed " + seed.string() + " --word " + word1.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("x1 = x1^-1 + x1^-1*x2^2") != std::string::npos);

  auto word11 = write_temp("word11.json", R"({"word": [1, 1]})");
  auto rr = run_cli("mutate --seed " + seed.string() + " --word " + word11.string());
  CHECK(rr.out.find("x1 = x1\n") != std::string::npos);
  CHECK(rr.out.find("x2 = x2\n") != std::string::npos);
}

TEST_CASE("cli: mutate output matches the library byte for byte") {
  using namespace clusteralg;
  auto seed = write_temp("markov.json", kMarkovSeed);
  auto word = write_temp("word123.json", R"({"word": [1, 2, 3]})");
  auto r = run_cli("mutate --seed " + seed.string() + " --word " + word.string());
  CHECK(r.exit_code == 0);

  ExtendedExchangeMatrix b(3, 0, {{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}});
  Seed end = oracle_walk(b, MutationWord({1, 2, 3}));
  std::string expected = "matrix:\n";
  for (const auto& row : end.matrix().entries()) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      expected += (i ? " " : "") + std::to_string(row[i]);
    }
    expected += "\n";
  }
  expected += "cluster:\n";
  for (int i = 1; i <= 3; ++i) {
    expected += "x" + std::to_string(i) + " = " + end.cluster_var(i).to_string() + "\n";
  }
  CHECK(r.out == expected);
}

TEST_CASE("cli: verify") {
  auto seed = write_temp("kronecker.json", kKroneckerSeed);
  auto r0 = run_cli("verify --seed " + seed.string() + " --max-word-len 0 --trials 3");
  CHECK(r0.exit_code == 0);
  auto r8 = run_cli("verify --seed " + seed.string() +
                    " --max-word-len 8 --trials 1 --rng-seed 7");
  CHECK(r8.exit_code == 0);

  auto bad = write_temp("bad.json", "{\"n\": 2");
  CHECK(run_cli("verify --seed " + bad.string()).exit_code == 2);
}

TEST_CASE("cli: expand with cross-checks") {
  auto seed = write_temp("kronecker.json", kKroneckerSeed);
  auto word = write_temp("word121.json", R"({"word": [1, 2, 1]})");
  auto r = run_cli("expand --seed " + seed.string() + " --word " + word.string() +
                   " --p 1 --q 0 --method compat --cross-check");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"pass\":true") != std::string::npos);

  auto json_run = run_cli("--json expand --seed " + seed.string() + " --word " + word.string() +
                          " --p 1 --q 0 --method tau");
  CHECK(json_run.exit_code == 0);
  CHECK(json_run.out.find("\"polynomial\"") != std::string::npos);

  CHECK(run_cli("expand --seed " + seed.string() + " --word " + word.string() +
                " --method nosuch").exit_code == 2);
  CHECK(run_cli("expand --seed " + seed.string() + " --word missing.json").exit_code == 2);
}

TEST_CASE("cli: unknown subcommand is an input error") {
  CHECK(run_cli("frobnicate").exit_code == 2);
}

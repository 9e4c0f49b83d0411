#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef MQNMR_CLI_PATH
#error "MQNMR_CLI_PATH must point at the built CLI binary"
#endif

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string csv;
};

fs::path temp_path(const std::string& name) {
  return fs::temp_directory_path() / name;
}

// Runs the CLI through the shell; `env_prefix` may carry VAR=value pairs.
RunResult run_cli(const std::string& args, const std::string& out_name,
                  const std::string& env_prefix = "") {
  const fs::path out = temp_path(out_name);
  fs::remove(out);
  std::string cmd = env_prefix;
  if (!cmd.empty()) cmd += ' ';
  cmd += std::string(MQNMR_CLI_PATH) + " " + args + " --out " + out.string() +
         " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  if (fs::exists(out)) {
    std::ifstream in(out, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    result.csv = ss.str();
    fs::remove(out);
  }
  return result;
}

int count_lines(const std::string& text) {
  int lines = 0;
  for (char c : text)
    if (c == '\n') ++lines;
  return lines;
}

}  // namespace

TEST_CASE("cli sweep-tau writes the documented csv") {
  const std::string args =
      "--mode sweep-tau --beta 3 --coupling-hz 1307 --tau-max-s 0.002 "
      "--steps 41";
  const RunResult run = run_cli(args, "cli_tau.csv");
  REQUIRE(run.exit_code == 0);
  CHECK(count_lines(run.csv) == 42);
  CHECK(run.csv.rfind(
            "tau,G0,G2,Gm2,G2_plus_Gm2,concurrence_numeric,"
            "concurrence_analytic,witness\n",
            0) == 0);

  // byte-determinism through the binary
  const RunResult again = run_cli(args, "cli_tau_again.csv");
  REQUIRE(again.exit_code == 0);
  CHECK(run.csv == again.csv);
}

TEST_CASE("cli accepts the physical parameterization") {
  const RunResult run = run_cli(
      "--mode sweep-tau --omega0-hz 500e6 --temperature-k 0.008 "
      "--coupling-rad-s 8212.389 --steps 11",
      "cli_phys.csv");
  CHECK(run.exit_code == 0);
  CHECK(count_lines(run.csv) == 12);
}

TEST_CASE("cli sweep-beta and single modes") {
  const RunResult beta = run_cli(
      "--mode sweep-beta --beta-min 0.5 --beta-max 6 --coupling-hz 1307 "
      "--steps 12",
      "cli_beta.csv");
  CHECK(beta.exit_code == 0);
  CHECK(beta.csv.rfind("beta,", 0) == 0);
  CHECK(count_lines(beta.csv) == 13);

  const RunResult single = run_cli(
      "--mode single --beta 3 --coupling-hz 1307 --tau-max-s 0.0001",
      "cli_single.csv");
  CHECK(single.exit_code == 0);
  CHECK(count_lines(single.csv) == 2);
}

TEST_CASE("cli configuration failures exit with code 2") {
  CHECK(run_cli("--mode sweep-tau --beta 3 --coupling-hz 1307 --bogus 1",
                "cli_err.csv")
            .exit_code == 2);  // unknown flag
  CHECK(run_cli("--mode warp --beta 3 --coupling-hz 1307", "cli_err.csv")
            .exit_code == 2);
  CHECK(run_cli("--mode sweep-tau --coupling-hz 1307", "cli_err.csv")
            .exit_code == 2);  // no beta and no physical pair
  CHECK(run_cli(
            "--mode sweep-tau --beta 3 --omega0-hz 5e8 --temperature-k 0.01 "
            "--coupling-hz 1307",
            "cli_err.csv")
            .exit_code == 2);  // both parameterizations
  CHECK(run_cli("--mode sweep-tau --beta 3", "cli_err.csv").exit_code ==
        2);  // coupling missing
  CHECK(run_cli(
            "--mode sweep-tau --beta 3 --coupling-hz 1307 --coupling-rad-s 1",
            "cli_err.csv")
            .exit_code == 2);  // mutually exclusive couplings
  CHECK(run_cli("--mode sweep-tau --beta 3 --coupling-hz 1307 --steps 1",
                "cli_err.csv")
            .exit_code == 2);
  CHECK(run_cli("--mode sweep-beta --beta-min 2 --beta-max 1 --coupling-hz "
                "1307",
                "cli_err.csv")
            .exit_code == 2);
}

TEST_CASE("cli honors the tolerance override") {
  const std::string args =
      "--mode sweep-tau --beta 3 --coupling-hz 1307 --steps 5";
  // An impossible tolerance turns harmless round-off into a residue error.
  CHECK(run_cli(args, "cli_tol.csv", "MQNMR_TOLERANCE=1e-300").exit_code == 3);
  // A looser-than-default tolerance still passes.
  CHECK(run_cli(args, "cli_tol.csv", "MQNMR_TOLERANCE=1e-9").exit_code == 0);
  // Garbage is a configuration error.
  CHECK(run_cli(args, "cli_tol.csv", "MQNMR_TOLERANCE=banana").exit_code == 2);
}

TEST_CASE("cli help exits cleanly") {
  const int status = std::system(
      (std::string(MQNMR_CLI_PATH) + " --help >/dev/null 2>&1").c_str());
  CHECK(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == 0);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <json.hpp>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

// Runs the workbench binary through the shell, merging stderr into stdout.
RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  const char* cli = std::getenv("RW_CLI");
  REQUIRE(cli != nullptr);
  std::string cmd = env_prefix + "\"" + cli + "\" " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 512> buf{};
  while (fgets(buf.data(), buf.size(), pipe)) r.output += buf.data();
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string catalog_flag() {
  const char* cat = std::getenv("RW_CATALOG");
  REQUIRE(cat != nullptr);
  return std::string("--catalog \"") + cat + "\" ";
}

}  // namespace

TEST_CASE("check-arrow exit codes encode the verdict") {
  RunResult holds = run_cli("check-arrow --category chains --c 2 --b 2 --a 2 --k 2 --t 1");
  CHECK(holds.exit_code == 0);
  CHECK(holds.output.find("HOLDS") != std::string::npos);

  RunResult fails = run_cli("check-arrow --category chains --c 3 --b 3 --a 2 --k 2 --t 1");
  CHECK(fails.exit_code == 1);
  CHECK(fails.output.find("FAILS") != std::string::npos);

  RunResult unknown =
      run_cli("--budget 1 check-arrow --category chains --c 4 --b 3 --a 2 --k 2 --t 1");
  CHECK(unknown.exit_code == 2);
  CHECK(unknown.output.find("UNKNOWN") != std::string::npos);
}

TEST_CASE("catalog-backed subcommands resolve names") {
  RunResult free_run = run_cli(catalog_flag() + "free --variety semilattice --n 3 --ordered");
  CHECK(free_run.exit_code == 0);
  CHECK(free_run.output.find("g(x1,g(x2,x3))") != std::string::npos);

  RunResult epis =
      run_cli(catalog_flag() + "enumerate --kind rigid-epis --from sl3_ord --to sl2_ord");
  CHECK(epis.exit_code == 0);
  CHECK(epis.output.find("[0,0,1]") != std::string::npos);
  CHECK(epis.output.find("[0,1,1]") != std::string::npos);

  RunResult missing = run_cli(catalog_flag() + "free --variety nope --n 2");
  CHECK(missing.exit_code == 3);
  CHECK(missing.output.find("error") != std::string::npos);
}

TEST_CASE("catalog directory resolves from the environment variable") {
  const char* cat = std::getenv("RW_CATALOG");
  REQUIRE(cat != nullptr);
  std::string env = std::string("RAMSEY_WORKBENCH_CATALOG=\"") + cat + "\" ";
  RunResult r = run_cli("enumerate --kind rigid-epis --from sl3_ord --to sl2_ord", env);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("[0,0,1]") != std::string::npos);
}

TEST_CASE("gr-search reports the minimal chain") {
  RunResult r = run_cli("gr-search --a 2 --b 2 --k 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("n = 2") != std::string::npos);
  RunResult none = run_cli("gr-search --a 2 --b 3 --k 2 --max-n 4");
  CHECK(none.exit_code == 2);
}

TEST_CASE("transport and segment induction run end to end") {
  RunResult tr = run_cli(catalog_flag() +
                         "transport --variety semilattice --n 3 --a sl2_ord --b sl3_ord "
                         "--k 2 --t 2");
  CHECK(tr.exit_code == 0);
  CHECK(tr.output.find("HOLDS") != std::string::npos);

  RunResult seg = run_cli(catalog_flag() +
                          "segment-induction --variety semilattice --a sl2_ord "
                          "--n-free 3 --k 2");
  CHECK(seg.exit_code == 0);

  RunResult one = run_cli(catalog_flag() +
                          "segment-induction --variety semilattice --a sl2_ord "
                          "--n-free 3 --k 2 --coloring 0,1,1");
  CHECK(one.exit_code == 0);
  CHECK(one.output.find("level") != std::string::npos);
}

TEST_CASE("verify-suite passes clean and fails with the planted defect") {
  RunResult ok = run_cli("verify-suite --scope chains");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("rigid-surjection counts") != std::string::npos);
  RunResult bad = run_cli("verify-suite --scope chains --inject-mutant");
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("FAIL") != std::string::npos);
}

TEST_CASE("json mode emits a reproducible run report") {
  RunResult r = run_cli(catalog_flag() +
                        "--json check-arrow --category ordered --c sl3_ord --b sl3_ord "
                        "--a sl2_ord --k 2 --t 1");
  nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j.contains("inputs_digest"));
  CHECK(j.contains("results"));
  CHECK(j.contains("timings"));
  CHECK(j["seed"] == 1);
  RunResult again = run_cli(catalog_flag() +
                            "--json check-arrow --category ordered --c sl3_ord --b sl3_ord "
                            "--a sl2_ord --k 2 --t 1");
  CHECK(again.output == r.output);
}

TEST_CASE("degree bounds through the command line") {
  RunResult r = run_cli("degree --category chains --a 2 --pool 2,3,4 --k-max 2 --t-max 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("lower") != std::string::npos);
  CHECK(r.output.find("2") != std::string::npos);
}

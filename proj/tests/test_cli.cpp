#include <cstdlib>
#include <filesystem>
#include <string>

#include "colorsat/formula.hpp"
#include "doctest.h"
#include "json.hpp"
#include "support/dot_check.hpp"
#include "support/fixtures.hpp"
#include "support/proc.hpp"

namespace fs = std::filesystem;
using support::run_command;

namespace {

// The binary under test; cmake exports its location.
std::string cli() {
  const char* path = std::getenv("COLORSAT_CLI");
  REQUIRE_MESSAGE(path != nullptr, "COLORSAT_CLI is not set");
  return std::string(path);
}

struct TempDir {
  fs::path path = support::make_temp_dir("colorsat-cli");
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

}  // namespace

TEST_CASE("validate classifies files and sets exit codes") {
  TempDir tmp;
  fs::path unsat9 = tmp.path / "unsat9.cnf";
  support::write_file(unsat9, colorsat::write_dimacs(fixtures::dense_unsat()));
  auto result = run_command(cli() + " validate --strict " + unsat9.string());
  CHECK(result.exit_code == 2);
  CHECK(result.output.find("k_max=9") != std::string::npos);

  auto gen = run_command(cli() + " gen --n 12 --seed 7 --out " +
                         (tmp.path / "strict.cnf").string());
  REQUIRE(gen.exit_code == 0);
  auto strict = run_command(cli() + " validate --strict " +
                            (tmp.path / "strict.cnf").string());
  CHECK(strict.exit_code == 0);

  fs::path truncated = tmp.path / "truncated.cnf";
  support::write_file(truncated, "p cnf 9 6\n-1 -2 -3 0\n1 3");
  auto broken = run_command(cli() + " validate " + truncated.string());
  CHECK(broken.exit_code == 1);

  auto json_run = run_command(cli() + " validate --relaxed --json " + unsat9.string());
  CHECK(json_run.exit_code == 2);
  auto doc = nlohmann::json::parse(json_run.output);
  CHECK(doc["k_max"] == 9);
  CHECK(doc["relaxed_31"] == false);
}

TEST_CASE("solve emits a v-line with one false literal per color") {
  TempDir tmp;
  fs::path sat9 = tmp.path / "sat9.cnf";
  support::write_file(sat9, fixtures::small_satisfiable_dimacs());
  auto result = run_command(cli() + " solve " + sat9.string());
  REQUIRE(result.exit_code == 0);
  CHECK(result.output.find("s SATISFIABLE") != std::string::npos);
  int negatives = 0;
  std::size_t pos = 0;
  while ((pos = result.output.find(" -", pos)) != std::string::npos) {
    negatives++;
    pos += 2;
  }
  CHECK(negatives == 3);

  // The emitted assignment verifies through the CLI as well.
  fs::path assignment = tmp.path / "assignment.txt";
  support::write_file(assignment, result.output);
  auto verify = run_command(cli() + " verify " + sat9.string() + " " +
                            assignment.string());
  CHECK(verify.exit_code == 0);
}

TEST_CASE("solve rejects out-of-class input") {
  TempDir tmp;
  fs::path unsat9 = tmp.path / "unsat9.cnf";
  support::write_file(unsat9, colorsat::write_dimacs(fixtures::dense_unsat()));
  auto result = run_command(cli() + " solve " + unsat9.string());
  CHECK(result.exit_code == 1);
  CHECK(result.output.find("error") != std::string::npos);
}

TEST_CASE("solve writes a valid DOT rendering") {
  TempDir tmp;
  fs::path file = tmp.path / "instance.cnf";
  fs::path dot = tmp.path / "structure.dot";
  REQUIRE(run_command(cli() + " gen --n 30 --seed 4 --out " + file.string())
              .exit_code == 0);
  auto result = run_command(cli() + " solve " + file.string() + " --stats --dot " +
                            dot.string());
  REQUIRE(result.exit_code == 0);
  CHECK(result.output.find("c stats expansions=") != std::string::npos);
  std::string why;
  CHECK_MESSAGE(support::is_valid_dot(support::read_file(dot), &why), why);
}

TEST_CASE("verify rejects bad and partial assignments") {
  TempDir tmp;
  fs::path unsat9 = tmp.path / "unsat9.cnf";
  support::write_file(unsat9, colorsat::write_dimacs(fixtures::dense_unsat()));
  fs::path bad = tmp.path / "bad.txt";
  support::write_file(bad, "v -1 2 3 -4 5 6 7 8 9 0\n");
  auto result = run_command(cli() + " verify " + unsat9.string() + " " +
                            bad.string());
  CHECK(result.exit_code == 3);
  CHECK(result.output.find("-7 -8 -9") != std::string::npos);

  fs::path partial = tmp.path / "partial.txt";
  support::write_file(partial, "v -1 2 3 0\n");
  auto partial_run = run_command(cli() + " verify " + unsat9.string() + " " +
                                 partial.string());
  CHECK(partial_run.exit_code == 1);
}

TEST_CASE("seeded solving is reproducible through the CLI") {
  TempDir tmp;
  fs::path file = tmp.path / "instance.cnf";
  REQUIRE(run_command(cli() + " gen --n 18 --seed 8 --out " + file.string())
              .exit_code == 0);
  auto first = run_command(cli() + " solve " + file.string() + " --seed 5");
  auto second = run_command(cli() + " solve " + file.string() + " --seed 5");
  REQUIRE(first.exit_code == 0);
  CHECK(first.output == second.output);
}

TEST_CASE("gen is deterministic and checks its arguments") {
  TempDir tmp;
  fs::path a = tmp.path / "a.cnf";
  fs::path b = tmp.path / "b.cnf";
  REQUIRE(run_command(cli() + " gen --n 24 --seed 9 --out " + a.string())
              .exit_code == 0);
  REQUIRE(run_command(cli() + " gen --n 24 --seed 9 --out " + b.string())
              .exit_code == 0);
  CHECK(support::read_file(a) == support::read_file(b));

  CHECK(run_command(cli() + " gen --n 4").exit_code == 1);
  CHECK(run_command(cli() + " gen").exit_code == 1);  // usage error
}

TEST_CASE("fuzz verifies batches and dumps repro files on failure") {
  TempDir tmp;
  std::string cd = "cd " + tmp.path.string() + " && ";
  auto ok = run_command(cd + cli() + " fuzz --count 40 --n-range 3:24 --seed 11");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("failures=0") != std::string::npos);

  auto empty = run_command(cd + cli() + " fuzz --count 0");
  CHECK(empty.exit_code == 0);

  // The injected mutant must be caught and leave a reproduction file behind.
  auto mutant = run_command(
      cd + cli() + " fuzz --count 5 --n-range 3:12 --seed 11 --inject-fault 2");
  CHECK(mutant.exit_code != 0);
  CHECK(mutant.output.find("repro=") != std::string::npos);
  bool repro_exists = false;
  for (const auto& entry : fs::directory_iterator(tmp.path)) {
    if (entry.path().filename().string().rfind("colorsat-fuzz-fail-", 0) == 0) {
      repro_exists = true;
    }
  }
  CHECK(repro_exists);

  auto report = run_command(cd + cli() +
                            " fuzz --count 10 --n-range 3:9 --seed 3 --report " +
                            (tmp.path / "report.json").string());
  CHECK(report.exit_code == 0);
  auto doc = nlohmann::json::parse(support::read_file(tmp.path / "report.json"));
  CHECK(doc["instances"] == 10);
  CHECK(doc["failures"] == 0);
}

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

std::string cli_path() {
  const char* p = std::getenv("MOQGA_CLI");
  REQUIRE(p != nullptr);
  return p;
}

int run_cli(const std::string& args) {
  std::string cmd = cli_path() + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path temp_dir() {
  auto dir = fs::temp_directory_path() / "moqga-cli-test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("generate writes the requested scenario") {
  auto dir = temp_dir();
  auto file = (dir / "scn.json").string();
  REQUIRE(run_cli("generate --uavs 8 --tasks 2 --seed 7 --out " + file) == 0);
  nlohmann::json j;
  std::ifstream(file) >> j;
  CHECK(j["uavs"].size() == 8);
  CHECK(j["tasks"].size() == 2);
  CHECK(j["uavs"][0]["resources"].size() == 5);
}

TEST_CASE("generate is byte-identical across reruns") {
  auto dir = temp_dir();
  auto a = (dir / "a.json").string();
  auto b = (dir / "b.json").string();
  REQUIRE(run_cli("generate --uavs 5 --tasks 2 --seed 11 --out " + a) == 0);
  REQUIRE(run_cli("generate --uavs 5 --tasks 2 --seed 11 --out " + b) == 0);
  CHECK(slurp(a) == slurp(b));
}

TEST_CASE("generate rejects non-positive counts with exit 2") {
  CHECK(run_cli("generate --uavs 0") == 2);
}

TEST_CASE("run rejects unknown solver with exit 2") {
  CHECK(run_cli("run --preset table2-8-2 --solver simplex") == 2);
}

TEST_CASE("run rejects unknown preset with exit 2") {
  CHECK(run_cli("run --preset table9 --solver moqga") == 2);
}

TEST_CASE("run without inputs is a usage error") {
  CHECK(run_cli("run --solver moqga") == 2);
}

TEST_CASE("single-mission run emits one report line per task") {
  auto dir = temp_dir();
  auto scn = (dir / "scn.json").string();
  REQUIRE(run_cli("generate --uavs 6 --tasks 3 --seed 4 --out " + scn) == 0);
  REQUIRE(run_cli("run --scenario " + scn +
                  " --solver distance --missions 1 --seed 4 --out " +
                  dir.string()) == 0);
  std::ifstream reports(dir / "distance-reports.jsonl");
  int lines = 0;
  std::string line;
  while (std::getline(reports, line)) {
    auto j = nlohmann::json::parse(line);
    CHECK(j["mission"] == 0);
    ++lines;
  }
  CHECK(lines == 3);
  // aggregate CSV carries the metadata header and one data row
  auto agg = slurp(dir / "distance-aggregates.csv");
  CHECK(agg.find("# preset=") != std::string::npos);
  CHECK(agg.find("solver,n_uavs,n_tasks,completed_pct,mean_violations") !=
        std::string::npos);
  CHECK(agg.find("distance,6,3,") != std::string::npos);
  CHECK(fs::exists(dir / "distance-reputation.csv"));
  CHECK(fs::exists(dir / "distance-scatter.csv"));
}

TEST_CASE("run outputs are rerun-identical") {
  auto dir = temp_dir();
  auto scn = (dir / "scn.json").string();
  REQUIRE(run_cli("generate --uavs 6 --tasks 2 --seed 8 --out " + scn) == 0);
  auto out1 = dir / "one";
  auto out2 = dir / "two";
  std::string base = "run --scenario " + scn +
                     " --solver distance --missions 2 --seed 8 --out ";
  REQUIRE(run_cli(base + out1.string()) == 0);
  REQUIRE(run_cli(base + out2.string()) == 0);
  CHECK(slurp(out1 / "distance-reports.jsonl") ==
        slurp(out2 / "distance-reports.jsonl"));
  CHECK(slurp(out1 / "distance-reputation.csv") ==
        slurp(out2 / "distance-reputation.csv"));
}

TEST_CASE("compare needs at least two solvers") {
  CHECK(run_cli("compare --preset table2-8-2 --solvers moqga") == 2);
}

TEST_CASE("compare writes one row per solver on shared seeds") {
  auto dir = temp_dir();
  REQUIRE(run_cli("compare --preset table2-8-2 --solvers distance "
                  "merge-split --missions 2 --out " +
                  dir.string()) == 0);
  auto csv = slurp(dir / "comparison.csv");
  CHECK(csv.find("distance,8,2,") != std::string::npos);
  CHECK(csv.find("merge-split,8,2,") != std::string::npos);
}

TEST_CASE("presets list names the builtin experiments") {
  std::string cmd = cli_path() + " presets list > /tmp/moqga-presets.txt 2>&1";
  REQUIRE(std::system(cmd.c_str()) == 0);
  auto text = slurp("/tmp/moqga-presets.txt");
  CHECK(text.find("table2-8-2") != std::string::npos);
  CHECK(text.find("table2-128-24") != std::string::npos);
  CHECK(text.find("fig2-selfish") != std::string::npos);
  CHECK(text.find("table3-unreliable") != std::string::npos);
}

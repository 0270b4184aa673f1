#include "doctest.h"

#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome sim(std::vector<std::string> args) {
  args.insert(args.begin(), "netform-sim");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = netform::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string f; std::getline(in, f, ',');) out.push_back(f);
  return out;
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::current_path() / "cli_scratch" / name;
  fs::remove_all(dir);
  return dir;
}

std::string column(const std::vector<std::string>& header, const std::vector<std::string>& row,
                   const std::string& name) {
  for (std::size_t k = 0; k < header.size(); ++k)
    if (header[k] == name) return row.at(k);
  FAIL("missing column " << name);
  return {};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("sweep writes one row per cell and is reproducible") {
  const fs::path a = scratch("sweep_a");
  const fs::path b = scratch("sweep_b");
  const std::vector<std::string> common{"sweep", "--n", "6", "--delta-range", "0.4:0.5", "--cost-range", "0.1:0.2",
                                        "--step", "0.1", "--densities", "0,0.5", "--reps", "4", "--seed", "7"};
  auto args_a = common;
  args_a.insert(args_a.end(), {"--out", a.string(), "--workers", "1"});
  auto args_b = common;
  args_b.insert(args_b.end(), {"--out", b.string(), "--workers", "4"});
  REQUIRE(sim(args_a).code == 0);
  REQUIRE(sim(args_b).code == 0);
  const std::string csv = slurp(a / "sweep.csv");
  CHECK(csv == slurp(b / "sweep.csv"));

  const auto rows = lines(csv);
  REQUIRE(rows.size() == 9);
  const auto header = fields(rows[0]);
  CHECK(rows[0].rfind("delta,cost,density,n,reps,modal_class,mean_utility,mean_iterations,mean_acts,"
                      "mean_final_clustering,freq_NULL,",
                      0) == 0);
  CHECK(header.size() == 10 + 15);
  CHECK(header.back() == "freq_UNCLASSIFIED");
  CHECK(rows[1].rfind("0.4,0.1,0,6,4,", 0) == 0);
  CHECK(rows[2].rfind("0.4,0.1,0.5,6,4,", 0) == 0);
  CHECK(rows[8].rfind("0.5,0.2,0.5,6,4,", 0) == 0);
  CHECK(csv.find('\r') == std::string::npos);
  for (std::size_t k = 1; k < rows.size(); ++k) {
    const auto row = fields(rows[k]);
    int total = 0;
    for (std::size_t c = 10; c < row.size(); ++c) total += std::stoi(row[c]);
    CHECK(total == 4);
  }
  CHECK(fs::exists(a / "manifest.txt"));
}

TEST_CASE("sweep endpoints") {
  const fs::path dir = scratch("sweep_endpoints");
  REQUIRE(sim({"sweep", "--n", "10", "--delta-range", "0.1:0.5", "--cost-range", "0.1:0.5", "--step", "0.4",
               "--densities", "0", "--reps", "20", "--out", dir.string()})
              .code == 0);
  const auto rows = lines(slurp(dir / "sweep.csv"));
  const auto header = fields(rows.at(0));
  bool saw_complete = false, saw_null = false;
  for (std::size_t k = 1; k < rows.size(); ++k) {
    const auto row = fields(rows[k]);
    if (row[0] == "0.5" && row[1] == "0.1") {
      saw_complete = true;
      CHECK(column(header, row, "modal_class") == "COMPLETE");
      CHECK(column(header, row, "freq_COMPLETE") == "20");
    }
    if (row[0] == "0.1" && row[1] == "0.5") {
      saw_null = true;
      CHECK(column(header, row, "mean_acts") == "0.000000");
      CHECK(column(header, row, "modal_class") == "NULL");
    }
  }
  CHECK(saw_complete);
  CHECK(saw_null);
}

TEST_CASE("config files supply defaults and flags override them") {
  const fs::path dir = scratch("config");
  fs::create_directories(dir);
  {
    std::ofstream cfg(dir / "sweep.cfg");
    cfg << "# small sweep\nn=5\ndelta-range=0.5\ncost-range=0.5\nstep=0.05\ndensities=0,0.35\nreps=3\nseed=11\n";
  }
  REQUIRE(sim({"sweep", "--config", (dir / "sweep.cfg").string(), "--reps", "2", "--out", (dir / "a").string()})
              .code == 0);
  const auto rows = lines(slurp(dir / "a" / "sweep.csv"));
  REQUIRE(rows.size() == 3);
  CHECK(rows[1].rfind("0.5,0.5,0,5,2,", 0) == 0);
  CHECK(rows[2].rfind("0.5,0.5,0.35,5,2,", 0) == 0);

  // The manifest doubles as a config file and reproduces the run.
  REQUIRE(sim({"sweep", "--config", (dir / "a" / "manifest.txt").string(), "--out", (dir / "b").string()}).code == 0);
  CHECK(slurp(dir / "a" / "sweep.csv") == slurp(dir / "b" / "sweep.csv"));

  {
    std::ofstream bad(dir / "bad.cfg");
    bad << "[section]\nreps=3\n";
  }
  CHECK(sim({"sweep", "--config", (dir / "bad.cfg").string(), "--out", (dir / "c").string()}).code == 1);
  CHECK(sim({"sweep", "--config", (dir / "missing.cfg").string()}).code == 2);
}

TEST_CASE("run output round-trips through classify") {
  const fs::path dir = scratch("run");
  const Outcome r = sim({"run", "--n", "12", "--delta", "0.5", "--cost", "0.45", "--density", "0.35", "--seed", "3",
                         "--out", dir.string()});
  REQUIRE(r.code == 0);
  const std::string summary = slurp(dir / "summary.txt");
  const auto label_at = summary.find("label=");
  REQUIRE(label_at != std::string::npos);
  const std::string label = summary.substr(label_at + 6, summary.find('\n', label_at) - label_at - 6);

  const Outcome c = sim({"classify", (dir / "final.edges").string()});
  REQUIRE(c.code == 0);
  CHECK(c.out.rfind("primary: " + label + "\n", 0) == 0);

  const auto traj = lines(slurp(dir / "trajectory.csv"));
  REQUIRE(traj.size() >= 2);
  CHECK(traj[0] == "iteration,clustering,utility");
  CHECK(traj[1].rfind("0,", 0) == 0);

  const fs::path again = scratch("run_again");
  REQUIRE(sim({"run", "--n", "12", "--delta", "0.5", "--cost", "0.45", "--density", "0.35", "--seed", "3", "--out",
               again.string()})
              .code == 0);
  CHECK(slurp(dir / "trajectory.csv") == slurp(again / "trajectory.csv"));
  CHECK(slurp(dir / "final.edges") == slurp(again / "final.edges"));
}

TEST_CASE("regions report observed against predicted cells") {
  const fs::path dir = scratch("regions");
  const Outcome r = sim({"regions", "--n", "8", "--delta-range", "0.5", "--cost-range", "0.1:0.5", "--step", "0.4",
                         "--densities", "0", "--reps", "5", "--out", dir.string()});
  REQUIRE(r.code == 0);
  const auto rows = lines(slurp(dir / "regions_COMPLETE.csv"));
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == "delta,cost,observed,predicted,match");
  CHECK(rows[1] == "0.5,0.1,1,1,match");
  CHECK(fs::exists(dir / "regions_TURAN.csv"));
}

TEST_CASE("pos and atlas outputs") {
  const fs::path dir = scratch("pos");
  REQUIRE(sim({"pos", "--n", "4", "--step", "0.5", "--out", dir.string()}).code == 0);
  CHECK(slurp(dir / "pos.csv") == "delta,cost,kind,value\n0.5,0.5,EXACT,1\n");

  const fs::path grid = scratch("pos_grid");
  REQUIRE(sim({"pos", "--n", "10", "--step", "0.05", "--out", grid.string()}).code == 0);
  const auto rows = lines(slurp(grid / "pos.csv"));
  CHECK(rows.size() == 362);
  CHECK(rows[1] == "0.05,0.05,EXACT,1");

  const fs::path oracle = scratch("pos_oracle");
  REQUIRE(sim({"pos", "--n", "4", "--step", "0.25", "--method", "oracle", "--out", oracle.string()}).code == 0);
  CHECK(lines(slurp(oracle / "pos.csv")).size() == 10);

  const fs::path atlas = scratch("atlas");
  const Outcome a = sim({"atlas", "--n", "4", "--delta-range", "0.5", "--cost-range", "0.1:0.5", "--step", "0.4",
                         "--dump", "--out", atlas.string()});
  REQUIRE(a.code == 0);
  CHECK(a.out.find("n=4 stable-topologies checked=") != std::string::npos);
  CHECK(fs::exists(atlas / "atlas_n4.csv"));
  CHECK(slurp(atlas / "oracle_n4" / "d0.5_c0.1.txt").rfind("# n=4 delta=1/2 cost=1/10 visited=64", 0) == 0);
}

TEST_CASE("exit codes") {
  CHECK(sim({}).code == 1);
  CHECK(sim({"--help"}).code == 0);
  CHECK(sim({"sweep", "--bogus"}).code == 1);
  CHECK(sim({"run", "--delta", "0", "--out", scratch("bad_delta").string()}).code == 1);
  CHECK(sim({"run", "--delta", "abc", "--out", scratch("bad_delta2").string()}).code == 1);
  CHECK(sim({"sweep", "--step", "0.3", "--out", scratch("bad_step").string()}).code == 1);
  CHECK(sim({"pos", "--method", "guess"}).code == 1);
  CHECK(sim({"atlas", "--n", "8", "--out", scratch("atlas8").string()}).code == 1);
  CHECK(sim({"classify", (scratch("nothing") / "none.edges").string()}).code == 2);

  const fs::path dir = scratch("io");
  fs::create_directories(dir);
  {
    std::ofstream bad(dir / "bad.edges");
    bad << "n 3\n0 0\n";
  }
  CHECK(sim({"classify", (dir / "bad.edges").string()}).code == 2);
  {
    std::ofstream blocker(dir / "blocker");
    blocker << "x";
  }
  CHECK(sim({"pos", "--n", "4", "--step", "0.5", "--out", (dir / "blocker" / "sub").string()}).code == 2);
}

}

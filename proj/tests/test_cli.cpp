#include <unistd.h>

#include <filesystem>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "dbubble/cli.hpp"
#include "doctest.h"

using namespace dbubble;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run(std::initializer_list<const char*> args) {
  std::vector<const char*> argv = {"dbubble"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  RunResult r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

bool contains(const std::string& s, const std::string& needle) {
  return s.find(needle) != std::string::npos;
}

struct TempDir {
  fs::path dir;
  TempDir() {
    dir = fs::temp_directory_path() /
          ("dbubble_cli_" + std::to_string(::getpid()) + "_" +
           std::to_string(counter++));
    fs::create_directories(dir);
  }
  ~TempDir() { fs::remove_all(dir); }
  static int counter;
};
int TempDir::counter = 0;

}  // namespace

TEST_CASE("show reports the full chain for a small pair") {
  auto r = run({"show", "7", "4", "--no-cache"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "n=7 m=4"));
  CHECK(contains(r.out, "rho_cont = 16.248077 (high)"));
  CHECK(contains(r.out, "ceil = 17"));
  CHECK(contains(r.out,
                 "constructed rhoDB = 18 (bound 19, slack 2, "
                 "high-ratio wall shift, guaranteed no)"));
  CHECK(contains(r.out, "oracle value = 17 (exact)"));
  CHECK(contains(r.out, "gap = 0 (exact)"));
}

TEST_CASE("show falls back to an upper bound past the exhaustive limit") {
  auto r = run({"show", "20", "2", "--no-cache"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "constructed rhoDB = 23"));
  CHECK(!contains(r.out, "oracle value"));
  CHECK(contains(r.out, "gap <= 1 (upper bound)"));
}

TEST_CASE("show renders the witness when asked") {
  auto r = run({"show", "7", "4", "--no-cache", "--render", "ascii"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "config (oracle witness):"));
  CHECK(contains(r.out, "AABB\nAABB\nAAA.\n"));
}

TEST_CASE("curves emits one csv row per sample") {
  auto r = run({"curves", "6000", "5"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0] == "x,y1,y2");
  CHECK(rows[1].rfind("-2.981392387", 0) == 0);
  CHECK(rows[5].rfind("2.481392387", 0) == 0);
}

TEST_CASE("certify prints the containment verdict and the triple") {
  auto small = run({"certify", "12"});
  CHECK(small.code == 0);
  CHECK(contains(small.out, "contained = false"));
  CHECK(contains(small.out, "triple = (3, 3, 4) objective = 24 rhoDB = 24"));

  auto none = run({"certify", "13"});
  CHECK(none.code == 0);
  CHECK(contains(none.out, "triple = none within budget slack 1"));

  auto big = run({"certify", "6000"});
  CHECK(big.code == 0);
  CHECK(contains(big.out, "contained = true"));
  CHECK(contains(big.out, "margin = 0.023674"));
  CHECK(contains(big.out, "hitsAllShifts = true"));
  // zero up to sign: lattice points sit exactly on closed edges
  CHECK((contains(big.out, "shiftClearance = 0.000000") ||
         contains(big.out, "shiftClearance = -0.000000")));
  CHECK(contains(big.out, "triple = (69, 69, 87) objective = 537 rhoDB = 537"));
  CHECK(!contains(big.out, "monotone"));

  auto above = run({"certify", "6500"});
  CHECK(above.code == 0);
  CHECK(contains(above.out, "monotone from 6000 = true"));
}

TEST_CASE("oracle caches its result for show to reuse") {
  TempDir tmp;
  CliOptions opt;
  opt.cachePath = (tmp.dir / "cache.csv").string();

  std::ostringstream out1;
  CHECK(cmd_oracle(5, 2, opt, out1) == 0);
  CHECK(contains(out1.str(), "value = 14"));
  CHECK(contains(out1.str(), "exact = true"));
  CHECK(fs::exists(tmp.dir / "cache.csv"));
  CHECK(fs::exists(tmp.dir / "witness_5_2.txt"));

  std::ostringstream out2;
  CHECK(cmd_show(5, 2, opt, out2) == 0);
  CHECK(contains(out2.str(), "oracle value = 14 (exact)"));
  CHECK(contains(out2.str(), "gap = 1 (exact)"));
}

TEST_CASE("sweep writes its artifacts into the out directory") {
  TempDir tmp;
  auto r = run({"--out", tmp.dir.c_str(), "sweep", "3", "3", "--no-cache"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "rows = 6"));
  CHECK(fs::exists(tmp.dir / "sweep.csv"));
  CHECK(fs::exists(tmp.dir / "heatmap.svg"));
}

TEST_CASE("svg render lands in the out directory") {
  TempDir tmp;
  CliOptions opt;
  opt.outDir = tmp.dir.string();
  opt.render = "svg";
  opt.noCache = true;
  std::ostringstream out;
  CHECK(cmd_show(3, 2, opt, out) == 0);
  CHECK(fs::exists(tmp.dir / "show_3_2.svg"));
}

TEST_CASE("a tight node budget is reported honestly") {
  auto r = run({"oracle", "7", "4", "--node-budget", "50", "--no-cache"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "exact = false"));
}

TEST_CASE("bad invocations exit with code 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"show", "7"}).code == 1);

  auto swapped = run({"show", "4", "7"});
  CHECK(swapped.code == 1);
  CHECK(contains(swapped.err, "error:"));

  auto badSamples = run({"curves", "6000", "1"});
  CHECK(badSamples.code == 1);
  CHECK(contains(badSamples.err, "error:"));

  auto badRender = run({"show", "3", "2", "--render", "jpeg"});
  CHECK(badRender.code == 1);
}

TEST_CASE("help exits cleanly") {
  auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "show"));
  CHECK(contains(r.out, "sweep"));
}

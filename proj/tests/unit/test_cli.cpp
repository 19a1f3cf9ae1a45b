#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
};

fs::path work_dir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / "chgoe_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

Result run(const std::string& args, const std::string& env = "") {
  const std::string cmd = "cd " + work_dir().string() + " && " + env + " " + CHGOE_CLI_PATH + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::fgets(buf, sizeof buf, pipe)) out += buf;
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const fs::path& p) {
  std::stringstream ss;
  ss << std::ifstream(p).rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("micro example prints the closed-form value") {
  const auto r = run("micro --quantity smallest --k 0 --u 1");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("0.2007230356946", 0) == 0);
  CHECK(fs::exists(work_dir() / "micro_smallest_k0.csv"));
  CHECK(fs::exists(work_dir() / "micro_smallest_k0.csv.manifest"));
}

TEST_CASE("gap writes a t,value CSV with 17 significant digits and a manifest") {
  const auto r = run("gap --p 4 --nu 2 --t-min 0.5 --t-max 1.5 --points 3 --out g.csv");
  CHECK(r.code == 0);
  const auto csv = slurp(work_dir() / "g.csv");
  CHECK(csv.rfind("t,value\n0.5,", 0) == 0);
  std::istringstream lines(csv);
  std::string header, first;
  std::getline(lines, header);
  std::getline(lines, first);
  const auto value = first.substr(first.find(',') + 1);
  CHECK(value.size() >= 17);
  const auto manifest = slurp(work_dir() / "g.csv.manifest");
  CHECK(manifest.find("command = gap") != std::string::npos);
  CHECK(manifest.find("nu = 2") != std::string::npos);
}

TEST_CASE("environment variable sets the output directory") {
  fs::create_directories(work_dir() / "envout");
  const auto r = run("smallest --p 3 --k 1 --t 0.7", "CHGOE_OUTPUT_DIR=" + (work_dir() / "envout").string());
  CHECK(r.code == 0);
  CHECK(fs::exists(work_dir() / "envout" / "smallest_p3_k1.csv"));
}

TEST_CASE("parameter errors exit with 2") {
  CHECK(run("mc --p 10 --nu 2 --samples 0").code == 2);
  CHECK(run("gap --p 0 --k 1 --t 1").code == 2);
  CHECK(run("smallest --p 3 --k 1 --t 0").code == 2);
  CHECK(run("gap --p 3 --k 1 --nu 2 --t 1").code == 2);
  CHECK(run("micro --quantity nonsense --u 1").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("gap --p 3 --k 1 --t 2,1").code == 2);
}

TEST_CASE("bad correlation file content exits with 2, a missing one with 4") {
  std::ofstream(work_dir() / "asym.csv") << "1,0.9\n0,1\n";
  CHECK(run("mc --p 2 --nu 2 --samples 10 --c-file asym.csv --compare none").code == 2);
  CHECK(run("mc --p 2 --nu 2 --samples 10 --c-file missing.csv --compare none").code == 4);
  CHECK(run("gap --p 3 --k 1 --t 1 --out /nonexistent/dir/x.csv").code == 4);
}

TEST_CASE("mc is reproducible across thread counts") {
  CHECK(run("--threads 1 mc --p 6 --nu 2 --samples 500 --seed 9 --out a.csv").code == 0);
  CHECK(run("--threads 4 mc --p 6 --nu 2 --samples 500 --seed 9 --out b.csv").code == 0);
  CHECK(slurp(work_dir() / "a.csv") == slurp(work_dir() / "b.csv"));
  CHECK(fs::exists(work_dir() / "a_hist.csv"));
  CHECK(slurp(work_dir() / "a.csv.manifest").find("seeds = 9") != std::string::npos);
}

TEST_CASE("mc KS threshold failure exits with 3") {
  CHECK(run("mc --p 6 --nu 2 --samples 200 --seed 1 --ks-max 0.000001 --out ks.csv").code == 3);
}

TEST_CASE("expdecay writes a matrix mc accepts") {
  CHECK(run("expdecay --p 5 --rho 0.5 --out c5.csv").code == 0);
  CHECK(run("mc --p 5 --nu 2 --samples 100 --c-file c5.csv --compare micro --out m.csv").code == 0);
}

TEST_CASE("unfolding is recorded and needs the micro comparison") {
  CHECK(run("mc --p 5 --nu 2 --samples 50 --exp-decay 0.5 --compare micro --unfold --out uf.csv").code == 0);
  CHECK(slurp(work_dir() / "uf.csv.manifest").find("unfolding = 1.") != std::string::npos);
  CHECK(run("mc --p 5 --nu 2 --samples 50 --exp-decay 0.5 --unfold").code == 2);
}

TEST_CASE("converge reports decreasing deviations") {
  const auto r = run("converge --k 2 --p 11,51 --points 50 --out conv.csv");
  CHECK(r.code == 0);
  CHECK(slurp(work_dir() / "conv.csv").rfind("u,p11,p51,limit\n", 0) == 0);
}

TEST_CASE("help and version exit with 0") {
  CHECK(run("--help").code == 0);
  CHECK(run("--version").code == 0);
}

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "chgoe/io.hpp"

using namespace chgoe;
namespace fs = std::filesystem;

TEST_CASE("numbers round-trip exactly through text") {
  std::mt19937_64 gen(1);
  std::uniform_real_distribution<double> uni(-30, 30);
  for (int i = 0; i < 1000; ++i) {
    const double x = std::exp(uni(gen)) * (i % 2 ? -1 : 1);
    CHECK(std::stod(format_number(x)) == x);
  }
  CHECK(format_number(0.5) == "0.5");
}

TEST_CASE("curve CSV round trip") {
  const auto path = (fs::temp_directory_path() / "chgoe_io_curve.csv").string();
  const std::vector<CurvePoint> pts{{0.1, 1.0 / 3.0}, {2.0, 1e-300}, {5.5, 0.0}};
  write_curve_csv(path, "t", pts);
  const auto [header, rows] = read_table_csv(path);
  CHECK(header == std::vector<std::string>{"t", "value"});
  REQUIRE(rows.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(rows[i][0] == pts[i].x);
    CHECK(rows[i][1] == pts[i].value);
  }
}

TEST_CASE("table CSV and errors") {
  const auto path = (fs::temp_directory_path() / "chgoe_io_table.csv").string();
  write_table_csv(path, {"u", "a", "b"}, {{1, 2, 3}, {4, 5, 6}});
  const auto [header, rows] = read_table_csv(path);
  CHECK(header.size() == 3);
  CHECK(rows[1][2] == 6.0);
  CHECK_THROWS_AS(write_curve_csv("/nonexistent/dir/x.csv", "t", {}), IoError);
  CHECK_THROWS_AS(read_table_csv("/nonexistent/dir/x.csv"), IoError);
  std::ofstream(path) << "t,value\n1,abc\n";
  CHECK_THROWS_AS(read_table_csv(path), IoError);
}

TEST_CASE("run manifest") {
  RunManifest m;
  m.command = "mc";
  m.parameters = {{"p", "10"}, {"nu", "4"}};
  m.seeds = {42};
  m.version = library_version();
  m.wall_seconds = 1.5;
  m.outputs = {"a.csv"};
  const auto text = m.to_text();
  CHECK(text.find("[run]") == 0);
  CHECK(text.find("command = mc") != std::string::npos);
  CHECK(text.find("seeds = 42") != std::string::npos);
  CHECK(text.find("p = 10") != std::string::npos);
  CHECK(text.find("[outputs]\na.csv") != std::string::npos);
  const auto path = (fs::temp_directory_path() / "chgoe_io.manifest").string();
  m.write(path);
  std::stringstream ss;
  ss << std::ifstream(path).rdbuf();
  CHECK(ss.str() == text);
  CHECK_FALSE(library_version().empty());
}

TEST_CASE("output directory comes from the environment") {
  ::setenv(kOutputDirEnv, "/tmp/chgoe_out", 1);
  CHECK(default_output_dir() == "/tmp/chgoe_out");
  ::setenv(kOutputDirEnv, "", 1);
  CHECK(default_output_dir() == ".");
  ::unsetenv(kOutputDirEnv);
  CHECK(default_output_dir() == ".");
}

#include "chgoe/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef CHGOE_VERSION
#define CHGOE_VERSION "unknown"
#endif

namespace chgoe {

std::string default_output_dir() {
  const char* env = std::getenv(kOutputDirEnv);
  if (env && *env) return env;
  return ".";
}

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  return out;
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

}  // namespace

void write_curve_csv(const std::string& path, const std::string& x_name,
                     const std::vector<CurvePoint>& samples) {
  auto out = open_out(path);
  out << x_name << ",value\n";
  for (const auto& s : samples) out << format_number(s.x) << ',' << format_number(s.value) << '\n';
  finish(out, path);
}

void write_table_csv(const std::string& path, const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& rows) {
  auto out = open_out(path);
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_number(row[i]);
    out << '\n';
  }
  finish(out, path);
}

std::pair<std::vector<std::string>, std::vector<std::vector<double>>> read_table_csv(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::pair<std::vector<std::string>, std::vector<std::vector<double>>> out;
  std::string line, cell;
  if (!std::getline(in, line)) throw IoError("'" + path + "' is empty");
  std::stringstream hs(line);
  while (std::getline(hs, cell, ',')) out.first.push_back(cell);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw IoError("'" + path + "': non-numeric cell '" + cell + "'");
      }
    }
    out.second.push_back(std::move(row));
  }
  return out;
}

std::string RunManifest::to_text() const {
  std::ostringstream o;
  o << "[run]\n";
  o << "command = " << command << '\n';
  o << "version = " << version << '\n';
  o << "wall_seconds = " << format_number(wall_seconds) << '\n';
  o << "seeds =";
  for (auto s : seeds) o << ' ' << s;
  o << "\n\n[parameters]\n";
  for (const auto& [k, v] : parameters) o << k << " = " << v << '\n';
  o << "\n[outputs]\n";
  for (const auto& f : outputs) o << f << '\n';
  return o.str();
}

void RunManifest::write(const std::string& path) const {
  auto out = open_out(path);
  out << to_text();
  finish(out, path);
}

std::string library_version() { return CHGOE_VERSION; }

}  // namespace chgoe

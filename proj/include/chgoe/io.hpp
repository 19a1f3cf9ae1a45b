#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chgoe/distributions.hpp"

namespace chgoe {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Environment variable that overrides the default output directory.
inline constexpr const char* kOutputDirEnv = "CHGOE_OUTPUT_DIR";

/// $CHGOE_OUTPUT_DIR if set and non-empty, else the current directory.
std::string default_output_dir();

/// Shortest text with 17 significant digits, so read-back is exact.
std::string format_number(double x);

/// Two-column CSV with header "<x_name>,value".
void write_curve_csv(const std::string& path, const std::string& x_name,
                     const std::vector<CurvePoint>& samples);

/// Any CSV with a header row and numeric cells.
void write_table_csv(const std::string& path, const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& rows);

/// Reads a CSV written by the functions above. Returns the header and rows.
std::pair<std::vector<std::string>, std::vector<std::vector<double>>> read_table_csv(
    const std::string& path);

/// Provenance sidecar written next to every output file.
struct RunManifest {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::uint64_t> seeds;
  std::string version;
  double wall_seconds = 0.0;
  std::vector<std::string> outputs;

  /// INI-like text: a [run] section with key = value lines followed by
  /// [parameters] and [outputs] sections.
  std::string to_text() const;
  void write(const std::string& path) const;
};

/// Version string compiled into the library.
std::string library_version();

}  // namespace chgoe

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace mwi {

// One output table: named columns of equal length, serialized as CSV with a
// header row and 9-significant-digit scientific notation.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;  // rows[i].size() == columns.size()
};

std::string format_number(double v);
std::string format_csv(const Table& table);

// Writes content to path, creating parent directories. Throws std::runtime_error
// on failure; partial files are not cleaned up.
void write_text_file(const std::filesystem::path& path, const std::string& content);

// Minimal line plot. Self-contained SVG, one polyline per series, labeled axes.
struct SvgSeries {
  std::vector<double> x;
  std::vector<double> y;
  std::string color = "#1f6fb2";
};

struct SvgPlot {
  std::vector<SvgSeries> series;
  std::string x_label = "x[m]";
  std::string y_label = "normalized intensity";
  int width = 860;
  int height = 520;
};

std::string render_svg(const SvgPlot& plot);

// FNV-1a 64-bit over raw bytes, rendered as 16 lowercase hex digits.
std::uint64_t fnv1a64(const std::string& bytes);
std::string fnv1a_hex(const std::string& bytes);

// Record of one tool invocation. Serialization is deterministic: keys sorted,
// no timestamps, fixed tool version string. Parameter values are preformatted
// strings so the record does not depend on any JSON library type.
struct RunManifest {
  std::string command;
  std::string scenario_digest;              // fnv1a_hex of the scenario file bytes
  std::map<std::string, std::string> parameters;  // resolved CLI parameters
  std::vector<std::string> outputs;         // files written, relative to --out
};

std::string manifest_json(const RunManifest& manifest);

}  // namespace mwi

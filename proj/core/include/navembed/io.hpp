#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "navembed/graph.hpp"
#include "navembed/matrix.hpp"

namespace navembed {

// I/O failure or malformed input file; the message names the path.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::string_view kNotAvailable = "NA";

// "%.<digits>g"; non-finite values print as nan / inf / -inf.
std::string format_double(double value, int significant_digits);
// Shortest text that parses back to the same double.
std::string format_shortest(double value);

// Edge list: "n <count>" header, then "u v" per line with u < v.
void write_edge_list(const Graph& g, std::ostream& out);
Graph read_edge_list(std::istream& in, std::string_view source_name = "<stream>");
void write_edge_list_file(const Graph& g, const std::filesystem::path& path);
Graph read_edge_list_file(const std::filesystem::path& path);

// Coordinates: "n m" header, then one row of m values per vertex with 17
// significant digits.
void write_coordinates(const RowMatrix& coords, std::ostream& out);
RowMatrix read_coordinates(std::istream& in, std::string_view source_name = "<stream>");
void write_coordinates_file(const RowMatrix& coords, const std::filesystem::path& path);
RowMatrix read_coordinates_file(const std::filesystem::path& path);

// One pre-formatted table cell.
struct Cell {
  enum class Kind { kText, kNumber, kMissing };

  std::string text;
  Kind kind = Kind::kText;

  static Cell string(std::string value) { return {std::move(value), Kind::kText}; }
  static Cell number(double value, int significant_digits);
  static Cell shortest(double value);
  static Cell integer(std::int64_t value);
  static Cell unsigned_integer(std::uint64_t value);
  static Cell boolean(bool value);
  static Cell missing() { return {std::string(kNotAvailable), Kind::kMissing}; }
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

enum class OutputFormat { kCsv, kJson };

OutputFormat parse_output_format(std::string_view text);
std::string_view file_extension(OutputFormat format);

// CSV: header plus one line per row. JSON: an array of objects with keys in
// column order; missing cells become null. Output is newline-terminated.
void emit(const Table& table, OutputFormat format, std::ostream& out);
void emit_file(const Table& table, OutputFormat format, const std::filesystem::path& path);

}  // namespace navembed

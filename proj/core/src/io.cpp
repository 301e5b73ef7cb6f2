#include "navembed/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <nlohmann/json.hpp>
#include <ostream>
#include <sstream>

namespace navembed {
namespace {

std::ofstream open_for_writing(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  return out;
}

std::ifstream open_for_reading(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return in;
}

void finish_writing(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

// Next line that is neither blank nor a '#' comment.
bool next_content_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

[[noreturn]] void malformed(std::string_view source, std::size_t line_no, const std::string& what) {
  throw IoError(std::string(source) + ":" + std::to_string(line_no) + ": " + what);
}

std::string json_quote(const std::string& s) { return nlohmann::json(s).dump(); }

}  // namespace

std::string format_double(double value, int significant_digits) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", significant_digits, value);
  return buffer;
}

std::string format_shortest(double value) {
  if (!std::isfinite(value)) return format_double(value, 17);
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  (void)ec;
  return std::string(buffer, end);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << "n " << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

Graph read_edge_list(std::istream& in, std::string_view source_name) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_content_line(in, line, line_no)) malformed(source_name, line_no, "missing 'n <count>' header");
  std::istringstream header(line);
  std::string tag;
  long long n = -1;
  std::string extra;
  if (!(header >> tag >> n) || tag != "n" || n < 0 || (header >> extra)) {
    malformed(source_name, line_no, "expected header 'n <count>'");
  }
  std::vector<Edge> edges;
  while (next_content_line(in, line, line_no)) {
    std::istringstream fields(line);
    long long u = -1;
    long long v = -1;
    if (!(fields >> u >> v) || (fields >> extra)) malformed(source_name, line_no, "expected 'u v'");
    if (u < 0 || v < 0 || u >= n || v >= n) malformed(source_name, line_no, "vertex id out of range");
    if (u >= v) malformed(source_name, line_no, "edges must be written with u < v");
    edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
  }
  try {
    return Graph::from_edges(static_cast<std::size_t>(n), edges);
  } catch (const std::invalid_argument& e) {
    throw IoError(std::string(source_name) + ": " + e.what());
  }
}

void write_edge_list_file(const Graph& g, const std::filesystem::path& path) {
  auto out = open_for_writing(path);
  write_edge_list(g, out);
  finish_writing(out, path);
}

Graph read_edge_list_file(const std::filesystem::path& path) {
  auto in = open_for_reading(path);
  return read_edge_list(in, path.string());
}

void write_coordinates(const RowMatrix& coords, std::ostream& out) {
  out << coords.rows() << ' ' << coords.cols() << '\n';
  for (std::size_t i = 0; i < coords.rows(); ++i) {
    const auto r = coords.row(i);
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (k > 0) out << ' ';
      out << format_double(r[k], 17);
    }
    out << '\n';
  }
}

RowMatrix read_coordinates(std::istream& in, std::string_view source_name) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_content_line(in, line, line_no)) malformed(source_name, line_no, "missing 'n m' header");
  std::istringstream header(line);
  long long n = -1;
  long long m = -1;
  if (!(header >> n >> m) || n < 0 || m < 1) malformed(source_name, line_no, "expected header 'n m'");
  RowMatrix coords(static_cast<std::size_t>(n), static_cast<std::size_t>(m));
  for (std::size_t i = 0; i < coords.rows(); ++i) {
    if (!next_content_line(in, line, line_no)) malformed(source_name, line_no, "too few rows");
    std::istringstream fields(line);
    for (std::size_t k = 0; k < coords.cols(); ++k) {
      std::string token;
      if (!(fields >> token)) malformed(source_name, line_no, "too few values in row");
      // strtod accepts nan/inf, which mark vertices outside the embedding.
      char* end = nullptr;
      const double value = std::strtod(token.c_str(), &end);
      if (end != token.c_str() + token.size()) malformed(source_name, line_no, "bad number '" + token + "'");
      coords(i, k) = value;
    }
    std::string extra;
    if (fields >> extra) malformed(source_name, line_no, "too many values in row");
  }
  if (next_content_line(in, line, line_no)) malformed(source_name, line_no, "unexpected extra rows");
  return coords;
}

void write_coordinates_file(const RowMatrix& coords, const std::filesystem::path& path) {
  auto out = open_for_writing(path);
  write_coordinates(coords, out);
  finish_writing(out, path);
}

RowMatrix read_coordinates_file(const std::filesystem::path& path) {
  auto in = open_for_reading(path);
  return read_coordinates(in, path.string());
}

Cell Cell::number(double value, int significant_digits) {
  return {format_double(value, significant_digits), Kind::kNumber};
}
Cell Cell::shortest(double value) { return {format_shortest(value), Kind::kNumber}; }
Cell Cell::integer(std::int64_t value) { return {std::to_string(value), Kind::kNumber}; }
Cell Cell::unsigned_integer(std::uint64_t value) { return {std::to_string(value), Kind::kNumber}; }
Cell Cell::boolean(bool value) { return {value ? "1" : "0", Kind::kNumber}; }

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::invalid_argument("row width does not match columns");
  rows.push_back(std::move(row));
}

OutputFormat parse_output_format(std::string_view text) {
  if (text == "csv") return OutputFormat::kCsv;
  if (text == "json") return OutputFormat::kJson;
  throw std::invalid_argument("format must be csv or json");
}

std::string_view file_extension(OutputFormat format) {
  return format == OutputFormat::kCsv ? ".csv" : ".json";
}

void emit(const Table& table, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::kCsv) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      out << (c ? "," : "") << table.columns[c];
    }
    out << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c].text;
      out << '\n';
    }
    return;
  }
  out << '[';
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out << (r ? ",\n " : "\n ") << '{';
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      const Cell& cell = table.rows[r][c];
      out << (c ? ", " : "") << json_quote(table.columns[c]) << ": ";
      const bool finite_number =
          cell.kind == Cell::Kind::kNumber && cell.text != "nan" && cell.text.find("inf") == std::string::npos;
      if (finite_number) {
        out << cell.text;
      } else if (cell.kind == Cell::Kind::kText) {
        out << json_quote(cell.text);
      } else {
        out << "null";
      }
    }
    out << '}';
  }
  out << (table.rows.empty() ? "]\n" : "\n]\n");
}

void emit_file(const Table& table, OutputFormat format, const std::filesystem::path& path) {
  auto out = open_for_writing(path);
  emit(table, format, out);
  finish_writing(out, path);
}

}  // namespace navembed

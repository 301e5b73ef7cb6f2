#include "navembed/io.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <sstream>

#include <nlohmann/json.hpp>

#include "navembed/config.hpp"
#include "navembed/generators.hpp"

namespace navembed {
namespace {

TEST(FormatTest, Doubles) {
  EXPECT_EQ(format_double(0.5, 6), "0.5");
  EXPECT_EQ(format_double(1.0 / 3.0, 6), "0.333333");
  EXPECT_EQ(format_double(std::nan(""), 17), "nan");
  const double x = 0.1 + 0.2;
  EXPECT_EQ(std::stod(format_double(x, 17)), x);
  EXPECT_EQ(format_shortest(0.001), "0.001");
  EXPECT_EQ(format_shortest(1e-4), "1e-04");
  EXPECT_EQ(std::stod(format_shortest(0.1 + 0.2)), 0.1 + 0.2);
}

TEST(EdgeListTest, RoundTrip) {
  const Graph g = watts_strogatz({.n = 100, .k = 4, .p = 0.3, .seed = 1});
  std::stringstream buffer;
  write_edge_list(g, buffer);
  EXPECT_EQ(read_edge_list(buffer), g);
}

TEST(EdgeListTest, Format) {
  std::stringstream buffer;
  write_edge_list(complete_graph(3), buffer);
  EXPECT_EQ(buffer.str(), "n 3\n0 1\n0 2\n1 2\n");
}

TEST(EdgeListTest, CommentsAndIsolatedVertices) {
  std::istringstream in("# header comment\nn 4\n\n0 1\n# trailing\n");
  const Graph g = read_edge_list(in);
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(EdgeListTest, Malformed) {
  for (const char* text : {"", "m 3\n", "n 3\n0 3\n", "n 3\n1 0\n", "n 3\n0 1\n0 1\n",
                           "n 3\n0 x\n", "n 3\n0 1 2\n", "n -1\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(read_edge_list(in, "test"), IoError) << text;
  }
}

TEST(CoordinatesTest, RoundTripExactly) {
  RowMatrix c(3, 2);
  c(0, 0) = 0.1;
  c(0, 1) = -1e-300;
  c(1, 0) = 12345.678901234567;
  c(1, 1) = std::nextafter(1.0, 2.0);
  c(2, 0) = std::nan("");
  c(2, 1) = std::nan("");
  std::stringstream buffer;
  write_coordinates(c, buffer);
  const RowMatrix back = read_coordinates(buffer);
  ASSERT_EQ(back.rows(), 3u);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t k = 0; k < 2; ++k) EXPECT_EQ(back(i, k), c(i, k));
  }
  EXPECT_TRUE(std::isnan(back(2, 0)));
}

TEST(CoordinatesTest, Malformed) {
  for (const char* text : {"", "2\n", "2 1\n0.5\n", "1 2\n0.5\n", "1 1\n0.5 1\n", "1 1\nabc\n",
                           "1 1\n0.5\n0.7\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(read_coordinates(in, "test"), IoError) << text;
  }
}

TEST(FileTest, MissingFileNamesPath) {
  try {
    read_edge_list_file("/nonexistent/dir/graph.txt");
    FAIL();
  } catch (const IoError& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent/dir/graph.txt"), std::string::npos);
  }
  EXPECT_THROW(write_edge_list_file(complete_graph(2), "/nonexistent/dir/out.txt"), IoError);
}

Table sample_table() {
  Table t;
  t.columns = {"name", "value", "stretch"};
  t.add_row({Cell::string("a"), Cell::number(0.5, 6), Cell::missing()});
  t.add_row({Cell::string("b\"q"), Cell::integer(-3), Cell::number(1.25, 6)});
  return t;
}

TEST(EmitTest, Csv) {
  std::ostringstream out;
  emit(sample_table(), OutputFormat::kCsv, out);
  EXPECT_EQ(out.str(), "name,value,stretch\na,0.5,NA\nb\"q,-3,1.25\n");
}

TEST(EmitTest, HeaderOnlyWhenEmpty) {
  Table t;
  t.columns = {"x", "y"};
  std::ostringstream csv;
  emit(t, OutputFormat::kCsv, csv);
  EXPECT_EQ(csv.str(), "x,y\n");
  std::ostringstream json;
  emit(t, OutputFormat::kJson, json);
  EXPECT_EQ(nlohmann::json::parse(json.str()), nlohmann::json::array());
}

TEST(EmitTest, JsonMirrorsCsv) {
  std::ostringstream out;
  emit(sample_table(), OutputFormat::kJson, out);
  const auto parsed = nlohmann::json::parse(out.str());
  ASSERT_EQ(parsed.size(), 2u);
  EXPECT_EQ(parsed[0]["name"], "a");
  EXPECT_EQ(parsed[0]["value"], 0.5);
  EXPECT_TRUE(parsed[0]["stretch"].is_null());
  EXPECT_EQ(parsed[1]["name"], "b\"q");
  EXPECT_EQ(parsed[1]["value"], -3);
}

TEST(EmitTest, RowWidthChecked) {
  Table t;
  t.columns = {"x"};
  EXPECT_THROW(t.add_row({Cell::integer(1), Cell::integer(2)}), std::invalid_argument);
}

TEST(OutputFormatTest, Parse) {
  EXPECT_EQ(parse_output_format("csv"), OutputFormat::kCsv);
  EXPECT_EQ(parse_output_format("json"), OutputFormat::kJson);
  EXPECT_THROW(parse_output_format("xml"), std::invalid_argument);
}

TEST(SpecFileTest, ParsesAllKeys) {
  std::istringstream in(
      "# sweep\nfamily = ws\nn = 500\nk = 6\np_grid = 0.0001, 0.01\ndims = 5,20\n"
      "realizations = 3\ntrials = 100\nseed = 7\neps = 1e-5\nmax_iters = 5000\n");
  const SweepSpec s = parse_sweep_spec(in);
  EXPECT_EQ(s.family, Family::kWs);
  EXPECT_EQ(s.n, 500u);
  EXPECT_EQ(s.k, 6u);
  EXPECT_EQ(s.grid, (std::vector<double>{0.0001, 0.01}));
  EXPECT_EQ(s.dims, (std::vector<std::size_t>{5, 20}));
  EXPECT_EQ(s.realizations, 3u);
  EXPECT_EQ(s.trials, 100u);
  EXPECT_EQ(s.master_seed, 7u);
  EXPECT_EQ(s.sync_tolerance, 1e-5);
  EXPECT_EQ(s.max_iters, 5000u);
}

TEST(SpecFileTest, TrailingComments) {
  std::istringstream in("family = ba   # scale-free\ngamma_grid = 2.2, 3.0  # two points\n");
  const SweepSpec s = parse_sweep_spec(in);
  EXPECT_EQ(s.family, Family::kBa);
  EXPECT_EQ(s.grid, (std::vector<double>{2.2, 3.0}));
}

TEST(SpecFileTest, Defaults) {
  std::istringstream ws("family = ws\n");
  EXPECT_EQ(parse_sweep_spec(ws).grid, default_p_grid());
  std::istringstream ba("family = ba\nmlinks = 3\n");
  const SweepSpec s = parse_sweep_spec(ba);
  EXPECT_EQ(s.grid, default_gamma_grid());
  EXPECT_EQ(s.grid.size(), 11u);
  EXPECT_NEAR(s.grid.front(), 2.2, 1e-12);
  EXPECT_NEAR(s.grid.back(), 4.0, 1e-12);
  EXPECT_EQ(default_p_grid().size(), 20u);
  EXPECT_NEAR(default_p_grid().front(), 1e-4, 1e-18);
  EXPECT_NEAR(default_p_grid().back(), 1.0, 1e-15);
}

std::string spec_error(const std::string& text) {
  std::istringstream in(text);
  try {
    parse_sweep_spec(in, "s.cfg");
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

TEST(SpecFileTest, Errors) {
  EXPECT_NE(spec_error("family = ba\ngamma_grid = 2.0, 3.0\n").find("k0 > -mlinks"), std::string::npos);
  EXPECT_NE(spec_error("colour = red\n").find("unknown key 'colour'"), std::string::npos);
  EXPECT_NE(spec_error("n = 5\nn = 6\n").find("given twice"), std::string::npos);
  EXPECT_NE(spec_error("family = ws\ngamma_grid = 3\n").find("needs family = ba"), std::string::npos);
  EXPECT_NE(spec_error("k = 9\n").find("k must be even"), std::string::npos);
  EXPECT_NE(spec_error("n = abc\n").find("s.cfg:1"), std::string::npos);
  EXPECT_NE(spec_error("p_grid = 0.1, 1.5\n"), "");
  EXPECT_NE(spec_error("realizations = 0\n"), "");
  EXPECT_NE(spec_error("family = ws\np_grid =\n"), "");
  EXPECT_NE(spec_error("just text\n"), "");
}

}  // namespace
}  // namespace navembed

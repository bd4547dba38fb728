#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>
#include <sstream>

#include "schemelab/config.hpp"
#include "schemelab/csv.hpp"

using namespace schemelab;

TEST_CASE("doubles format with 17 significant digits and round-trip") {
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(0.5) == "0.5");
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> dist(-1e6, 1e6);
  for (int i = 0; i < 500; ++i) {
    const double x = dist(rng) * std::pow(10.0, static_cast<int>(rng() % 20) - 10);
    CHECK(std::stod(format_double(x)) == x);
  }
  CHECK(format_double(std::nan("")) == "nan");
}

TEST_CASE("csv parse then emit is the identity") {
  CsvTable table({"n", "value", "tag"});
  table.add_row({"0", "1.5", "a"});
  table.add_row({"1", "nan", "b"});
  table.add_row({"2", "-3.25e-12", ""});
  const std::string text = table.to_string();
  const CsvTable back = CsvTable::read_string(text);
  CHECK(back.to_string() == text);
  CHECK(back.header() == table.header());
  CHECK(back.rows() == table.rows());
}

TEST_CASE("csv round-trip property on random tables") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const int cols = 1 + static_cast<int>(rng() % 5);
    std::vector<std::string> header;
    for (int c = 0; c < cols; ++c) header.push_back("c" + std::to_string(c));
    CsvTable table(header);
    const int rows = static_cast<int>(rng() % 20);
    std::uniform_real_distribution<double> dist(-1e3, 1e3);
    for (int r = 0; r < rows; ++r) {
      std::vector<std::string> row;
      for (int c = 0; c < cols; ++c) row.push_back(format_double(dist(rng)));
      table.add_row(row);
    }
    const std::string text = table.to_string();
    CHECK(CsvTable::read_string(text).to_string() == text);
  }
}

TEST_CASE("csv rejects malformed rows") {
  CsvTable table({"a", "b"});
  CHECK_THROWS_AS(table.add_row({"only-one"}), std::invalid_argument);
  CHECK_THROWS_AS(CsvTable(std::vector<std::string>{}), std::invalid_argument);
}

TEST_CASE("config parsing: sections, comments, values") {
  const std::string text =
      "# bundle\n"
      "[fem]\n"
      "kind = fem-converge\n"
      "levels = 5\n"
      "solver_tol = 1e-10   # tight\n"
      "\n"
      "[paths]\n"
      "kind = counterexample\n"
      "x = 0\n"
      "y = 1\n";
  const auto experiments = parse_config_string(text);
  REQUIRE(experiments.size() == 2);
  CHECK(experiments[0].name == "fem");
  CHECK(experiments[0].kind == "fem-converge");
  CHECK(experiments[0].get_int("levels", 0) == 5);
  CHECK(experiments[0].get_double("solver_tol", 0) == 1e-10);
  CHECK(experiments[1].get_double("y", 0) == 1.0);
  CHECK_NOTHROW(validate_config(experiments));
}

TEST_CASE("config strictness: unknown keys and kinds fail upfront") {
  auto experiments = parse_config_string("[e]\nkind = fem-converge\nlevles = 5\n");
  CHECK_THROWS_AS(validate_config(experiments), ConfigError);

  experiments = parse_config_string("[e]\nkind = warp-drive\n");
  CHECK_THROWS_AS(validate_config(experiments), ConfigError);

  experiments = parse_config_string("[e]\nlevels = 5\n");
  CHECK_THROWS_AS(validate_config(experiments), ConfigError);  // missing kind
}

TEST_CASE("config parse errors carry locations") {
  CHECK_THROWS_AS(parse_config_string("kind = orphan\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_string("[a\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_string("[a]\nnot a pair\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_string("[a]\n[a]\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_string("[a]\nk = 1\nk = 2\n"), ConfigError);
  CHECK_THROWS_AS(parse_config_string("[a]\nkind = probe\npoint = zebra\n")[0].get_double("point", 0),
                  ConfigError);
}

TEST_CASE("list values parse") {
  const auto experiments = parse_config_string("[d]\nkind = ift-domain\nsteps = 0.1, 0.5,0.9\n");
  const std::vector<double> steps = experiments[0].get_list("steps", {});
  CHECK(steps == std::vector<double>{0.1, 0.5, 0.9});
}

// Copyright 2026 The Eigencert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "eigencert/report.hpp"
#include "eigencert/svg.hpp"

using namespace eigencert;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("csv_double keeps 17 significant digits") {
  const double value = 0.1 + 0.2;  // not exactly 0.3
  CHECK(std::stod(csv_double(value)) == value);
  CHECK(std::stod(csv_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("CSV writer round-trips and quotes per RFC 4180") {
  const auto path = temp_file("eigencert_test.csv");
  {
    CsvWriter csv(path, {"name", "value"});
    csv.row({"plain", csv_double(1.5)});
    csv.row({"comma, quoted", csv_double(2.5)});
    csv.row({"has \"quotes\"", csv_double(-0.25)});
    csv.flush();
  }
  const std::string raw = slurp(path);
  CHECK(raw.find("\r\n") != std::string::npos);
  CHECK(raw.find("\"comma, quoted\"") != std::string::npos);
  CHECK(raw.find("\"has \"\"quotes\"\"\"") != std::string::npos);

  const auto rows = read_csv(path);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == std::vector<std::string>{"name", "value"});
  CHECK(rows[2][0] == "comma, quoted");
  CHECK(rows[3][0] == "has \"quotes\"");
  CHECK(std::stod(rows[1][1]) == 1.5);
  std::filesystem::remove(path);
}

TEST_CASE("CSV writer rejects ragged rows") {
  const auto path = temp_file("eigencert_ragged.csv");
  CsvWriter csv(path, {"a", "b"});
  CHECK_THROWS_AS(csv.row({"only one"}), std::invalid_argument);
  std::filesystem::remove(path);
}

TEST_CASE("manifests carry version and wall time") {
  const auto path = temp_file("eigencert_manifest.json");
  nlohmann::json manifest;
  manifest["config"] = {{"seed", 7}};
  write_manifest(path, manifest, 1.25);
  const nlohmann::json loaded = nlohmann::json::parse(slurp(path));
  CHECK(loaded["config"]["seed"] == 7);
  CHECK(loaded["wall_seconds"] == 1.25);
  CHECK(loaded.contains("version"));
  std::filesystem::remove(path);
}

TEST_CASE("SVG plots render self-contained markup") {
  SvgPlot plot("demo", "x", "y");
  plot.add_series("series a", {0.0, 1.0, 2.0}, {1.0, 0.5, 0.25},
                  {0.1, 0.1, 0.1});
  plot.add_histogram("hist", {0.1, 0.2, 0.2, 0.9}, 4, 0.0, 1.0);
  const std::string svg = plot.render();
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("demo") != std::string::npos);
  CHECK(svg.find("series a") != std::string::npos);
  CHECK(svg.find("polyline") != std::string::npos);
}

TEST_CASE("log-scale plots render without error") {
  SvgPlot plot("log demo", "r", "error");
  plot.set_log_y(true);
  plot.add_series("decay", {1.0, 2.0, 4.0, 8.0}, {0.5, 0.1, 0.02, 0.004});
  CHECK(plot.render().find("<svg") != std::string::npos);
}

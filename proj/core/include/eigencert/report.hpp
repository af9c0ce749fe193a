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

#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace eigencert {

// Numeric cell formatted to 17 significant digits (lossless round trip).
std::string csv_double(double value);
std::string csv_int(long long value);

/// RFC 4180 CSV writer: fields containing commas, quotes, or newlines are
/// quoted, quotes doubled, CRLF row terminators.
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, std::vector<std::string> header);
  void row(const std::vector<std::string>& fields);
  void flush();

 private:
  void write_row(const std::vector<std::string>& fields);

  std::ofstream out_;
  std::size_t columns_;
};

// Parsed numeric table (test and CLI support).
std::vector<std::vector<std::string>> read_csv(const std::filesystem::path& path);

// Writes the manifest after stamping version and wall time. IO failures
// surface as std::runtime_error with the path in the message.
void write_manifest(const std::filesystem::path& path, nlohmann::json manifest,
                    double wall_seconds);

}  // namespace eigencert

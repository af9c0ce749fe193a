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
#include <string>
#include <vector>

namespace eigencert {

/// Minimal built-in SVG plotting: axes, line/scatter series, error bars,
/// histograms. No external renderer.
class SvgPlot {
 public:
  SvgPlot(std::string title, std::string x_label, std::string y_label);

  void add_series(std::string label, std::vector<double> x,
                  std::vector<double> y, std::vector<double> y_err = {});
  void add_histogram(std::string label, const std::vector<double>& values,
                     int bins, double lo, double hi);
  void set_log_y(bool log_y) { log_y_ = log_y; }

  std::string render() const;
  void write(const std::filesystem::path& path) const;

 private:
  struct Series {
    std::string label;
    std::vector<double> x, y, y_err;
    bool bars = false;
  };

  std::string title_, x_label_, y_label_;
  std::vector<Series> series_;
  bool log_y_ = false;
};

}  // namespace eigencert

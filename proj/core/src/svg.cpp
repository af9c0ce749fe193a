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

#include "eigencert/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace eigencert {

namespace {

constexpr double kWidth = 640, kHeight = 420;
constexpr double kMarginLeft = 70, kMarginRight = 20;
constexpr double kMarginTop = 40, kMarginBottom = 55;

const char* kPalette[] = {"#c0392b", "#2980b9", "#27ae60",
                          "#8e44ad", "#f39c12", "#16a085"};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(4);
  os << v;
  return os.str();
}

}  // namespace

SvgPlot::SvgPlot(std::string title, std::string x_label, std::string y_label)
    : title_(std::move(title)),
      x_label_(std::move(x_label)),
      y_label_(std::move(y_label)) {}

void SvgPlot::add_series(std::string label, std::vector<double> x,
                         std::vector<double> y, std::vector<double> y_err) {
  if (x.size() != y.size() || (!y_err.empty() && y_err.size() != y.size())) {
    throw std::invalid_argument("SvgPlot: series length mismatch");
  }
  series_.push_back({std::move(label), std::move(x), std::move(y),
                     std::move(y_err), false});
}

void SvgPlot::add_histogram(std::string label, const std::vector<double>& values,
                            int bins, double lo, double hi) {
  if (bins < 1 || hi <= lo) throw std::invalid_argument("SvgPlot: bad histogram spec");
  std::vector<double> x(static_cast<std::size_t>(bins));
  std::vector<double> y(static_cast<std::size_t>(bins), 0.0);
  const double width = (hi - lo) / bins;
  for (int b = 0; b < bins; ++b) x[static_cast<std::size_t>(b)] = lo + (b + 0.5) * width;
  for (double v : values) {
    int b = static_cast<int>((v - lo) / width);
    b = std::clamp(b, 0, bins - 1);
    y[static_cast<std::size_t>(b)] += 1.0;
  }
  series_.push_back({std::move(label), std::move(x), std::move(y), {}, true});
}

std::string SvgPlot::render() const {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& s : series_) {
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      const double e = s.y_err.empty() ? 0.0 : s.y_err[i];
      xmin = std::min(xmin, s.x[i]);
      xmax = std::max(xmax, s.x[i]);
      ymin = std::min(ymin, s.y[i] - e);
      ymax = std::max(ymax, s.y[i] + e);
    }
    if (s.bars) ymin = std::min(ymin, 0.0);
  }
  if (!(xmin <= xmax)) {
    xmin = 0;
    xmax = 1;
    ymin = 0;
    ymax = 1;
  }
  if (log_y_) {
    ymin = ymin > 0 ? std::log10(ymin) : -6;
    ymax = ymax > 0 ? std::log10(ymax) : 0;
  }
  if (xmax == xmin) xmax = xmin + 1;
  if (ymax == ymin) ymax = ymin + 1;
  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  auto sx = [&](double v) {
    return kMarginLeft + (v - xmin) / (xmax - xmin) * plot_w;
  };
  auto sy = [&](double v) {
    if (log_y_) v = v > 0 ? std::log10(v) : ymin;
    return kMarginTop + plot_h - (v - ymin) / (ymax - ymin) * plot_h;
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
      << "\" height=\"" << kHeight << "\" font-family=\"sans-serif\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << kWidth / 2 << "\" y=\"22\" text-anchor=\"middle\" "
         "font-size=\"15\">" << title_ << "</text>\n";

  // Axes with 5 ticks per side.
  svg << "<g stroke=\"#333\" stroke-width=\"1\">\n"
      << "<line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop + plot_h
      << "\" x2=\"" << kMarginLeft + plot_w << "\" y2=\"" << kMarginTop + plot_h
      << "\"/>\n"
      << "<line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop << "\" x2=\""
      << kMarginLeft << "\" y2=\"" << kMarginTop + plot_h << "\"/>\n</g>\n";
  for (int i = 0; i <= 5; ++i) {
    const double fx = xmin + (xmax - xmin) * i / 5.0;
    const double fy = ymin + (ymax - ymin) * i / 5.0;
    svg << "<text x=\"" << sx(fx) << "\" y=\"" << kMarginTop + plot_h + 18
        << "\" text-anchor=\"middle\" font-size=\"11\">" << fmt(fx)
        << "</text>\n";
    svg << "<text x=\"" << kMarginLeft - 6 << "\" y=\""
        << kMarginTop + plot_h - plot_h * i / 5.0 + 4
        << "\" text-anchor=\"end\" font-size=\"11\">"
        << fmt(log_y_ ? std::pow(10.0, fy) : fy) << "</text>\n";
  }
  svg << "<text x=\"" << kMarginLeft + plot_w / 2 << "\" y=\"" << kHeight - 12
      << "\" text-anchor=\"middle\" font-size=\"13\">" << x_label_
      << "</text>\n";
  svg << "<text x=\"16\" y=\"" << kMarginTop + plot_h / 2
      << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 16 "
      << kMarginTop + plot_h / 2 << ")\">" << y_label_ << "</text>\n";

  for (std::size_t si = 0; si < series_.size(); ++si) {
    const auto& s = series_[si];
    const char* color = kPalette[si % (sizeof kPalette / sizeof *kPalette)];
    if (s.bars) {
      const double bar_w =
          s.x.size() > 1 ? (sx(s.x[1]) - sx(s.x[0])) * 0.85 : plot_w * 0.8;
      for (std::size_t i = 0; i < s.x.size(); ++i) {
        const double top = sy(s.y[i]);
        svg << "<rect x=\"" << sx(s.x[i]) - bar_w / 2 << "\" y=\"" << top
            << "\" width=\"" << bar_w << "\" height=\""
            << kMarginTop + plot_h - top << "\" fill=\"" << color
            << "\" fill-opacity=\"0.55\"/>\n";
      }
    } else {
      svg << "<polyline fill=\"none\" stroke=\"" << color
          << "\" stroke-width=\"1.5\" points=\"";
      for (std::size_t i = 0; i < s.x.size(); ++i) {
        svg << sx(s.x[i]) << ',' << sy(s.y[i]) << ' ';
      }
      svg << "\"/>\n";
      for (std::size_t i = 0; i < s.x.size(); ++i) {
        svg << "<circle cx=\"" << sx(s.x[i]) << "\" cy=\"" << sy(s.y[i])
            << "\" r=\"2.5\" fill=\"" << color << "\"/>\n";
        if (!s.y_err.empty() && s.y_err[i] > 0) {
          svg << "<line x1=\"" << sx(s.x[i]) << "\" y1=\""
              << sy(s.y[i] - s.y_err[i]) << "\" x2=\"" << sx(s.x[i])
              << "\" y2=\"" << sy(s.y[i] + s.y_err[i]) << "\" stroke=\""
              << color << "\" stroke-width=\"1\"/>\n";
        }
      }
    }
    svg << "<text x=\"" << kMarginLeft + plot_w - 8 << "\" y=\""
        << kMarginTop + 16 + 16 * static_cast<double>(si)
        << "\" text-anchor=\"end\" font-size=\"12\" fill=\"" << color << "\">"
        << s.label << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

void SvgPlot::write(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("SvgPlot: cannot open " + path.string());
  out << render();
  if (!out) throw std::runtime_error("SvgPlot: write failed for " + path.string());
}

}  // namespace eigencert

// Copyright 2026 The randbasis Authors.
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

#include "randbasis/experiments/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace randbasis::experiments {
namespace {

constexpr double kWidth = 760.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 170.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string label_text(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void add(double v, bool positive_only) {
    if (!std::isfinite(v) || (positive_only && !(v > 0.0))) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  bool empty() const { return !(lo <= hi); }
};

class Axes {
 public:
  Axes(Range x, Range y, bool log_y) : log_y_(log_y) {
    if (x.empty()) x = {0.0, 1.0};
    if (y.empty()) y = log_y ? Range{0.1, 1.0} : Range{0.0, 1.0};
    if (log_y) {
      y.lo = std::pow(10.0, std::floor(std::log10(y.lo)));
      y.hi = std::pow(10.0, std::ceil(std::log10(y.hi)));
      if (y.lo == y.hi) y.hi *= 10.0;
    } else {
      const double pad = 0.05 * (y.hi - y.lo);
      y.lo -= pad > 0 ? pad : 0.5;
      y.hi += pad > 0 ? pad : 0.5;
    }
    if (x.lo == x.hi) {
      x.lo -= 0.5;
      x.hi += 0.5;
    }
    x_ = x;
    y_ = y;
  }

  double px(double x) const {
    return kLeft + (x - x_.lo) / (x_.hi - x_.lo) * (kWidth - kLeft - kRight);
  }
  double py(double y) const {
    double t;
    if (log_y_) {
      t = (std::log10(y) - std::log10(y_.lo)) /
          (std::log10(y_.hi) - std::log10(y_.lo));
    } else {
      t = (y - y_.lo) / (y_.hi - y_.lo);
    }
    return kHeight - kBottom - t * (kHeight - kTop - kBottom);
  }
  bool drawable(double y) const {
    return std::isfinite(y) && (!log_y_ || y > 0.0);
  }
  double clamp_y(double y) const {
    if (log_y_ && !(y > 0.0)) return y_.lo;
    return std::clamp(y, y_.lo, y_.hi);
  }

  std::vector<double> x_ticks() const { return linear_ticks(x_); }
  std::vector<double> y_ticks() const {
    if (!log_y_) return linear_ticks(y_);
    std::vector<double> t;
    const int a = static_cast<int>(std::lround(std::log10(y_.lo)));
    const int b = static_cast<int>(std::lround(std::log10(y_.hi)));
    const int step = std::max(1, (b - a) / 8);
    for (int e = a; e <= b; e += step) t.push_back(std::pow(10.0, e));
    return t;
  }
  const Range& x() const { return x_; }

 private:
  static std::vector<double> linear_ticks(const Range& r) {
    const double span = r.hi - r.lo;
    const double raw = span / 6.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
      step = m * mag;
      if (step >= raw) break;
    }
    std::vector<double> t;
    for (double v = std::ceil(r.lo / step) * step; v <= r.hi + 1e-9 * span;
         v += step) {
      t.push_back(std::abs(v) < 1e-12 * span ? 0.0 : v);
    }
    return t;
  }

  Range x_;
  Range y_;
  bool log_y_;
};

}  // namespace

std::string render_svg(const PlotSpec& spec) {
  Range xr;
  Range yr;
  const bool pos = spec.log_y;
  for (const auto& s : spec.lines) {
    for (double v : s.x) xr.add(v, false);
    for (double v : s.y) yr.add(v, pos);
  }
  const BoxSeries& bs = spec.boxes;
  for (std::size_t i = 0; i < bs.x.size() && i < bs.boxes.size(); ++i) {
    xr.add(bs.x[i] - bs.width / 2, false);
    xr.add(bs.x[i] + bs.width / 2, false);
    const BoxStats& b = bs.boxes[i];
    for (double v : {b.whisker_lo, b.whisker_hi, b.mean, b.q1, b.q3}) {
      yr.add(v, pos);
    }
    for (double v : b.outliers) yr.add(v, pos);
  }
  for (const Bar& b : spec.bars) {
    xr.add(b.lo, false);
    xr.add(b.hi, false);
    yr.add(b.height, pos);
    if (!pos) yr.add(0.0, false);
  }
  const Axes ax(xr, yr, spec.log_y);

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
     << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
     << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
     << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << num(kWidth / 2 - kRight / 2 + kLeft / 2)
     << "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">"
     << escape(spec.title) << "</text>\n";

  const double x0 = kLeft;
  const double x1 = kWidth - kRight;
  const double y0 = kHeight - kBottom;
  const double y1 = kTop;
  os << "<g stroke=\"#ccc\" stroke-width=\"0.5\">\n";
  for (double t : ax.y_ticks()) {
    os << "<line x1=\"" << num(x0) << "\" x2=\"" << num(x1) << "\" y1=\""
       << num(ax.py(t)) << "\" y2=\"" << num(ax.py(t)) << "\"/>\n";
  }
  os << "</g>\n";
  os << "<rect x=\"" << num(x0) << "\" y=\"" << num(y1) << "\" width=\""
     << num(x1 - x0) << "\" height=\"" << num(y0 - y1)
     << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (double t : ax.x_ticks()) {
    os << "<line x1=\"" << num(ax.px(t)) << "\" x2=\"" << num(ax.px(t))
       << "\" y1=\"" << num(y0) << "\" y2=\"" << num(y0 + 5)
       << "\" stroke=\"black\"/>\n"
       << "<text x=\"" << num(ax.px(t)) << "\" y=\"" << num(y0 + 18)
       << "\" text-anchor=\"middle\">" << label_text(t) << "</text>\n";
  }
  for (double t : ax.y_ticks()) {
    os << "<text x=\"" << num(x0 - 6) << "\" y=\"" << num(ax.py(t) + 4)
       << "\" text-anchor=\"end\">" << label_text(t) << "</text>\n";
  }
  os << "<text x=\"" << num((x0 + x1) / 2) << "\" y=\"" << num(kHeight - 18)
     << "\" text-anchor=\"middle\">" << escape(spec.x_label) << "</text>\n"
     << "<text transform=\"translate(18," << num((y0 + y1) / 2)
     << ") rotate(-90)\" text-anchor=\"middle\">" << escape(spec.y_label)
     << "</text>\n";

  for (const Bar& b : spec.bars) {
    if (!ax.drawable(b.height)) continue;
    const double top = ax.py(b.height);
    const double base = ax.py(ax.clamp_y(0.0));
    os << "<rect x=\"" << num(ax.px(b.lo)) << "\" y=\"" << num(top)
       << "\" width=\"" << num(ax.px(b.hi) - ax.px(b.lo)) << "\" height=\""
       << num(std::max(0.0, base - top))
       << "\" fill=\"#4c72b0\" stroke=\"white\" stroke-width=\"0.3\"/>\n";
  }

  for (std::size_t i = 0; i < bs.x.size() && i < bs.boxes.size(); ++i) {
    const BoxStats& b = bs.boxes[i];
    if (b.count == 0) continue;
    const double cx = ax.px(bs.x[i]);
    const double half = (ax.px(bs.x[i] + bs.width / 2) - cx);
    const double yq1 = ax.py(ax.clamp_y(b.q1));
    const double yq3 = ax.py(ax.clamp_y(b.q3));
    os << "<g stroke=\"black\" stroke-width=\"0.8\">"
       << "<line x1=\"" << num(cx) << "\" x2=\"" << num(cx) << "\" y1=\""
       << num(ax.py(ax.clamp_y(b.whisker_lo))) << "\" y2=\"" << num(yq1)
       << "\" stroke-dasharray=\"3,2\"/>"
       << "<line x1=\"" << num(cx) << "\" x2=\"" << num(cx) << "\" y1=\""
       << num(yq3) << "\" y2=\"" << num(ax.py(ax.clamp_y(b.whisker_hi)))
       << "\" stroke-dasharray=\"3,2\"/>"
       << "<rect x=\"" << num(cx - half) << "\" y=\"" << num(yq3)
       << "\" width=\"" << num(2 * half) << "\" height=\""
       << num(std::max(0.0, yq1 - yq3))
       << "\" fill=\"#aec7e8\" stroke=\"#1f77b4\"/>"
       << "<line x1=\"" << num(cx - half) << "\" x2=\"" << num(cx + half)
       << "\" y1=\"" << num(ax.py(ax.clamp_y(b.median))) << "\" y2=\""
       << num(ax.py(ax.clamp_y(b.median)))
       << "\" stroke=\"#d62728\" stroke-width=\"1.5\"/></g>\n";
    if (bs.show_mean && ax.drawable(b.mean)) {
      os << "<circle cx=\"" << num(cx) << "\" cy=\"" << num(ax.py(b.mean))
         << "\" r=\"3\" fill=\"#2ca02c\"/>\n";
    }
    for (double v : b.outliers) {
      if (!ax.drawable(v)) continue;
      const double oy = ax.py(v);
      os << "<path d=\"M" << num(cx - 3) << " " << num(oy - 3) << "L"
         << num(cx + 3) << " " << num(oy + 3) << "M" << num(cx - 3) << " "
         << num(oy + 3) << "L" << num(cx + 3) << " " << num(oy - 3)
         << "\" stroke=\"#d62728\" stroke-width=\"0.8\"/>\n";
    }
  }

  for (double m : spec.x_markers) {
    os << "<line x1=\"" << num(ax.px(m)) << "\" x2=\"" << num(ax.px(m))
       << "\" y1=\"" << num(y0) << "\" y2=\"" << num(y1)
       << "\" stroke=\"#888\" stroke-dasharray=\"4,3\"/>\n";
  }

  double legend_y = kTop + 10;
  for (const auto& s : spec.lines) {
    std::string d;
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      if (!ax.drawable(s.y[i])) continue;
      d += (d.empty() ? "M" : "L") + num(ax.px(s.x[i])) + " " +
           num(ax.py(s.y[i]));
    }
    if (!d.empty()) {
      os << "<path d=\"" << d << "\" fill=\"none\" stroke=\"" << s.color
         << "\" stroke-width=\"1.5\""
         << (s.dashed ? " stroke-dasharray=\"6,4\"" : "") << "/>\n";
    }
    if (s.markers) {
      for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
        if (!ax.drawable(s.y[i])) continue;
        os << "<circle cx=\"" << num(ax.px(s.x[i])) << "\" cy=\""
           << num(ax.py(s.y[i])) << "\" r=\"2.5\" fill=\"" << s.color
           << "\"/>\n";
      }
    }
    if (!s.label.empty()) {
      os << "<line x1=\"" << num(x1 + 10) << "\" x2=\"" << num(x1 + 34)
         << "\" y1=\"" << num(legend_y) << "\" y2=\"" << num(legend_y)
         << "\" stroke=\"" << s.color << "\" stroke-width=\"1.5\""
         << (s.dashed ? " stroke-dasharray=\"6,4\"" : "") << "/>"
         << "<text x=\"" << num(x1 + 40) << "\" y=\"" << num(legend_y + 4)
         << "\">" << escape(s.label) << "</text>\n";
      legend_y += 18;
    }
  }
  os << "</svg>\n";
  return os.str();
}

void save_svg(const std::filesystem::path& path, const PlotSpec& spec) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << render_svg(spec);
}

}  // namespace randbasis::experiments

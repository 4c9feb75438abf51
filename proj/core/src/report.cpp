// Copyright 2026 The qtrack Authors
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


#include "qtrack/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "qtrack/error.hpp"

namespace qtrack {
namespace {

std::string Num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("write failed: " + path);
}

std::string Escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

constexpr const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                    "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};

struct Axis {
  double lo = 0.0;
  double hi = 1.0;
  bool log = false;

  double map(double v) const {
    const double a = log ? std::log10(v) : v;
    return (a - lo) / (hi - lo);
  }
};

Axis MakeAxis(double lo, double hi, bool log) {
  Axis axis;
  axis.log = log;
  if (log) {
    axis.lo = std::floor(std::log10(lo));
    axis.hi = std::ceil(std::log10(hi));
  } else {
    axis.lo = std::min(lo, 0.0);
    axis.hi = hi;
  }
  if (!(axis.hi > axis.lo)) axis.hi = axis.lo + 1.0;
  return axis;
}

std::vector<double> Ticks(const Axis& axis) {
  std::vector<double> ticks;
  if (axis.log) {
    for (double e = axis.lo; e <= axis.hi + 1e-9; e += 1.0) ticks.push_back(std::pow(10.0, e));
    return ticks;
  }
  for (int i = 0; i <= 5; ++i) ticks.push_back(axis.lo + (axis.hi - axis.lo) * i / 5.0);
  return ticks;
}

}  // namespace

std::string format_csv(const RegretLedger& l) {
  std::string out = kLedgerCsvHeader;
  out += '\n';
  for (std::size_t i = 0; i < l.size(); ++i) {
    out += std::to_string(i + 1) + ',' + Num(l.learner_loss[i]) + ',' +
           Num(l.comparator_loss[i]) + ',' + Num(l.cum_regret[i]) + ',' +
           Num(l.avg_regret[i]) + ',' + Num(l.ratio[i]) + ',' + std::to_string(l.mistakes[i]) +
           ',' + Num(l.path_length[i]) + '\n';
  }
  return out;
}

std::string format_csv(const AggregateCurves& a) {
  std::string out = kAggregateCsvHeader;
  out += '\n';
  for (std::size_t i = 0; i < a.size(); ++i) {
    out += std::to_string(i + 1) + ',' + Num(a.mean_cum_regret[i]) + ',' +
           Num(a.std_cum_regret[i]) + ',' + Num(a.min_cum_regret[i]) + ',' +
           Num(a.max_cum_regret[i]) + ',' + Num(a.mean_ratio[i]) + ',' + Num(a.max_ratio[i]) +
           ',' + Num(a.mean_mistakes[i]) + ',' + Num(a.mean_path_length[i]) + '\n';
  }
  return out;
}

void emit_csv(const RegretLedger& ledger, const std::string& path) {
  WriteFile(path, format_csv(ledger));
}

void emit_csv(const AggregateCurves& aggregate, const std::string& path) {
  WriteFile(path, format_csv(aggregate));
}

std::string format_svg_plot(const std::vector<Curve>& curves, const PlotOptions& opt) {
  constexpr double kW = 800, kH = 500, kLeft = 70, kRight = 170, kTop = 40, kBottom = 50;
  const double pw = kW - kLeft - kRight;
  const double ph = kH - kTop - kBottom;

  double xmax = 1.0;
  double ymin = std::numeric_limits<double>::infinity();
  double ymax = -std::numeric_limits<double>::infinity();
  for (const auto& c : curves) {
    xmax = std::max(xmax, static_cast<double>(c.values.size()));
    for (double v : c.values) {
      if (!std::isfinite(v) || (opt.log_y && v <= 0.0)) continue;
      ymin = std::min(ymin, v);
      ymax = std::max(ymax, v);
    }
  }
  if (!std::isfinite(ymin)) {
    ymin = opt.log_y ? 1.0 : 0.0;
    ymax = opt.log_y ? 10.0 : 1.0;
  }
  const Axis xa = MakeAxis(1.0, xmax, opt.log_x);
  const Axis ya = MakeAxis(ymin, ymax, opt.log_y);
  auto px = [&](double x) { return kLeft + pw * xa.map(x); };
  auto py = [&](double y) { return kTop + ph * (1.0 - ya.map(y)); };

  std::string s =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 500\" "
      "font-family=\"sans-serif\" font-size=\"12\">\n";
  s += "<rect width=\"800\" height=\"500\" fill=\"white\"/>\n";
  s += "<text x=\"400\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" + Escape(opt.title) +
       "</text>\n";
  s += "<rect x=\"" + Num(kLeft) + "\" y=\"" + Num(kTop) + "\" width=\"" + Num(pw) +
       "\" height=\"" + Num(ph) + "\" fill=\"none\" stroke=\"black\"/>\n";
  for (double t : Ticks(xa)) {
    const double x = px(t);
    s += "<line x1=\"" + Num(x) + "\" y1=\"" + Num(kTop + ph) + "\" x2=\"" + Num(x) +
         "\" y2=\"" + Num(kTop + ph + 5) + "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + Num(x) + "\" y=\"" + Num(kTop + ph + 18) +
         "\" text-anchor=\"middle\">" + Num(t) + "</text>\n";
  }
  for (double t : Ticks(ya)) {
    const double y = py(t);
    s += "<line x1=\"" + Num(kLeft - 5) + "\" y1=\"" + Num(y) + "\" x2=\"" + Num(kLeft) +
         "\" y2=\"" + Num(y) + "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + Num(kLeft - 8) + "\" y=\"" + Num(y + 4) + "\" text-anchor=\"end\">" +
         Num(t) + "</text>\n";
  }
  s += "<text x=\"" + Num(kLeft + pw / 2) + "\" y=\"" + Num(kH - 10) +
       "\" text-anchor=\"middle\">" + Escape(opt.x_label) + "</text>\n";
  s += "<text x=\"16\" y=\"" + Num(kTop + ph / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
       Num(kTop + ph / 2) + ")\">" + Escape(opt.y_label) + "</text>\n";

  for (std::size_t c = 0; c < curves.size(); ++c) {
    const char* color = kPalette[c % std::size(kPalette)];
    std::string points;
    for (std::size_t i = 0; i < curves[c].values.size(); ++i) {
      const double v = curves[c].values[i];
      if (!std::isfinite(v) || (opt.log_y && v <= 0.0)) continue;
      if (!points.empty()) points += ' ';
      points += Num(px(static_cast<double>(i + 1))) + ',' + Num(py(v));
    }
    s += "<polyline fill=\"none\" stroke=\"" + std::string(color) +
         "\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";
    const double ly = kTop + 14 + 18 * static_cast<double>(c);
    s += "<line x1=\"" + Num(kW - kRight + 12) + "\" y1=\"" + Num(ly) + "\" x2=\"" +
         Num(kW - kRight + 32) + "\" y2=\"" + Num(ly) + "\" stroke=\"" + color +
         "\" stroke-width=\"2\"/>\n";
    s += "<text x=\"" + Num(kW - kRight + 38) + "\" y=\"" + Num(ly + 4) + "\">" +
         Escape(curves[c].label) + "</text>\n";
  }
  s += "</svg>\n";
  return s;
}

void emit_svg_plot(const std::vector<Curve>& curves, const PlotOptions& options,
                   const std::string& path) {
  WriteFile(path, format_svg_plot(curves, options));
}

}  // namespace qtrack

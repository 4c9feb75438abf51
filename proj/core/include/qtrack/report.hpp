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

// CSV and SVG output. Numbers are printed with %.12g, so output is
// byte-identical for identical ledgers.

#ifndef QTRACK_REPORT_HPP_
#define QTRACK_REPORT_HPP_

#include <string>
#include <vector>

#include "qtrack/ledger.hpp"

namespace qtrack {

inline constexpr const char* kLedgerCsvHeader =
    "t,learner_loss,comparator_loss,cum_regret,avg_regret,ratio,mistakes,path_length";
inline constexpr const char* kAggregateCsvHeader =
    "t,mean_cum_regret,std_cum_regret,min_cum_regret,max_cum_regret,mean_ratio,max_ratio,"
    "mean_mistakes,mean_path_length";

std::string format_csv(const RegretLedger& ledger);
std::string format_csv(const AggregateCurves& aggregate);
void emit_csv(const RegretLedger& ledger, const std::string& path);
void emit_csv(const AggregateCurves& aggregate, const std::string& path);

struct Curve {
  std::string label;
  std::vector<double> values;  // values[i] is plotted at x = i + 1
};

struct PlotOptions {
  std::string title;
  std::string x_label = "t";
  std::string y_label;
  bool log_x = false;
  bool log_y = false;
};

// Polyline chart in a fixed 800x500 viewBox. Log axes put ticks at powers of
// 10; non-positive values are dropped from log-scaled series.
std::string format_svg_plot(const std::vector<Curve>& curves, const PlotOptions& options);
void emit_svg_plot(const std::vector<Curve>& curves, const PlotOptions& options,
                   const std::string& path);

}  // namespace qtrack

#endif  // QTRACK_REPORT_HPP_

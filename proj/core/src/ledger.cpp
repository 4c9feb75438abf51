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


#include "qtrack/ledger.hpp"

#include <algorithm>
#include <cmath>

#include "qtrack/error.hpp"

namespace qtrack {

std::vector<double> ratio_curves(const RegretLedger& ledger, RatioMode mode) {
  std::vector<double> out(ledger.size(), 0.0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double t = static_cast<double>(i + 1);
    const double p = ledger.path_length[i];
    double scale = 0.0;
    switch (mode) {
      case RatioMode::kKShift:
        scale = t * std::log(t);
        break;
      case RatioMode::kPath:
        scale = t * (ledger.n_qubits + std::log(t)) * p;
        break;
      case RatioMode::kAdaptivePath:
        scale = t * p;
        break;
    }
    out[i] = scale > 0.0 ? ledger.cum_regret[i] / std::sqrt(scale) : 0.0;
  }
  return out;
}

int mistake_count(const RegretLedger& ledger, double epsilon) {
  return static_cast<int>(std::count_if(ledger.prediction_gap.begin(),
                                        ledger.prediction_gap.end(),
                                        [epsilon](double gap) { return gap > epsilon; }));
}

AggregateCurves aggregate_trials(std::span<const RegretLedger> ledgers) {
  AggregateCurves agg;
  if (ledgers.empty()) return agg;
  const std::size_t len = ledgers.front().size();
  for (const auto& l : ledgers) {
    if (l.size() != len) throw DimensionError("aggregate_trials: ledgers differ in length");
  }
  const double n = static_cast<double>(ledgers.size());
  for (auto* v : {&agg.mean_cum_regret, &agg.std_cum_regret, &agg.min_cum_regret,
                  &agg.max_cum_regret, &agg.mean_ratio, &agg.max_ratio, &agg.mean_mistakes,
                  &agg.mean_path_length}) {
    v->assign(len, 0.0);
  }
  for (std::size_t i = 0; i < len; ++i) {
    double sum = 0.0;
    double lo = ledgers.front().cum_regret[i];
    double hi = lo;
    double ratio_sum = 0.0;
    double ratio_hi = ledgers.front().ratio[i];
    double mistakes = 0.0;
    double path = 0.0;
    for (const auto& l : ledgers) {
      sum += l.cum_regret[i];
      lo = std::min(lo, l.cum_regret[i]);
      hi = std::max(hi, l.cum_regret[i]);
      ratio_sum += l.ratio[i];
      ratio_hi = std::max(ratio_hi, l.ratio[i]);
      mistakes += l.mistakes[i];
      path += l.path_length[i];
    }
    const double mean = sum / n;
    double var = 0.0;
    for (const auto& l : ledgers) var += (l.cum_regret[i] - mean) * (l.cum_regret[i] - mean);
    agg.mean_cum_regret[i] = mean;
    agg.std_cum_regret[i] = std::sqrt(var / n);
    agg.min_cum_regret[i] = lo;
    agg.max_cum_regret[i] = hi;
    agg.mean_ratio[i] = ratio_sum / n;
    agg.max_ratio[i] = ratio_hi;
    agg.mean_mistakes[i] = mistakes / n;
    agg.mean_path_length[i] = path / n;
  }
  return agg;
}

}  // namespace qtrack

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

// Per-trial regret accounting and its aggregation across trials.

#ifndef QTRACK_LEDGER_HPP_
#define QTRACK_LEDGER_HPP_

#include <span>
#include <string>
#include <vector>

#include "qtrack/config.hpp"

namespace qtrack {

// Row t - 1 of every array describes round t.
struct RegretLedger {
  std::string learner;
  int n_qubits = 1;
  std::vector<double> learner_loss;
  std::vector<double> comparator_loss;
  std::vector<double> cum_regret;
  // cum_regret / t
  std::vector<double> avg_regret;
  std::vector<double> ratio;
  // Running count of rounds with |Tr(E x) - Tr(E rho)| > epsilon.
  std::vector<int> mistakes;
  // sum_{s < t} ||rho_{s+1} - rho_s||_*
  std::vector<double> path_length;
  // |Tr(E_t x_t) - Tr(E_t rho_t)|
  std::vector<double> prediction_gap;
  // Rounds whose prediction failed the domain check (when checked).
  int domain_violations = 0;

  std::size_t size() const noexcept { return cum_regret.size(); }
  friend bool operator==(const RegretLedger&, const RegretLedger&) = default;
};

// Ratio of cumulative regret to the mode's scale at each t:
//   kshift         sqrt(t log t)
//   path           sqrt(t (n + log t) P_t)
//   adaptive_path  sqrt(t P_t)
// with P_t the running path length. A zero denominator gives ratio 0.
std::vector<double> ratio_curves(const RegretLedger& ledger, RatioMode mode);

int mistake_count(const RegretLedger& ledger, double epsilon);

struct AggregateCurves {
  std::vector<double> mean_cum_regret;
  std::vector<double> std_cum_regret;
  std::vector<double> min_cum_regret;
  std::vector<double> max_cum_regret;
  std::vector<double> mean_ratio;
  std::vector<double> max_ratio;
  std::vector<double> mean_mistakes;
  std::vector<double> mean_path_length;

  std::size_t size() const noexcept { return mean_cum_regret.size(); }
};

// Pointwise max / min / mean / population standard deviation. Ledgers must
// have equal length.
AggregateCurves aggregate_trials(std::span<const RegretLedger> ledgers);

}  // namespace qtrack

#endif  // QTRACK_LEDGER_HPP_

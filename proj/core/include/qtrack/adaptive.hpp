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

// Strongly adaptive meta-learner: one black-box learner per geometric
// interval [i 2^k, (i+1) 2^k), combined over the live intervals either by
// coin betting (CBCE: a Krichevsky-Trofimov bettor per interval on the
// clipped instantaneous regret) or by sleeping-experts multiplicative
// weights. Rounds are 1-based throughout.

#ifndef QTRACK_ADAPTIVE_HPP_
#define QTRACK_ADAPTIVE_HPP_

#include <memory>
#include <vector>

#include "qtrack/learner.hpp"

namespace qtrack {

// Half-open [start, end).
struct Interval {
  int start = 1;
  int end = 2;

  int length() const noexcept { return end - start; }
  bool contains(int t) const noexcept { return start <= t && t < end; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// {[i 2^k, (i+1) 2^k) : k >= 0, i >= 1, i 2^k <= T}, ordered by (k, i).
std::vector<Interval> geometric_intervals(int horizon);

// Disjoint geometric intervals whose union is exactly [q, s). Greedy: from
// the current position p take the longest block starting at p (aligned to
// its length) that still fits.
std::vector<Interval> cover_interval(int q, int s);

enum class MetaRule { kCoinBetting, kSleepingMw };

struct IntervalExpert {
  Interval interval;
  int level = 0;
  std::unique_ptr<Learner> box;
  // log prior, plus eta * sum(l_meta - l_J) under sleeping MW.
  double log_weight = 0.0;
  double eta = 0.0;
  // Coin betting: sum of clipped regrets, wealth, and the current bet.
  double reward_sum = 0.0;
  double wealth = 1.0;
  double bet = 0.0;
};

class StronglyAdaptiveLearner final : public Learner {
 public:
  // The factory is called with |J| each time an interval J opens.
  StronglyAdaptiveLearner(int horizon, LearnerFactory factory,
                          MetaRule rule = MetaRule::kCoinBetting);

  const DensityMatrix& predict() const override { return prediction_; }
  void observe(const Effect& effect, const LossDescriptor& loss) override;
  std::string name() const override;

  int round() const noexcept { return t_; }
  std::size_t live_count() const noexcept { return experts_.size(); }
  const std::vector<IntervalExpert>& experts() const noexcept { return experts_; }
  // Normalized meta weights of experts(), in the same order.
  std::vector<double> weights() const;

 private:
  void open_and_retire();
  void refresh();

  int horizon_;
  LearnerFactory factory_;
  MetaRule rule_;
  int t_ = 1;
  std::vector<IntervalExpert> experts_;
  DensityMatrix prediction_;
};

// Black boxes are RftlLearner(|J|, n, L).
std::unique_ptr<StronglyAdaptiveLearner> adaptive_rftl_learner(
    int horizon, int n_qubits, double lipschitz, MetaRule rule = MetaRule::kCoinBetting);

}  // namespace qtrack

#endif  // QTRACK_ADAPTIVE_HPP_

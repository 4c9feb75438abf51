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


#include "qtrack/adaptive.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "qtrack/error.hpp"
#include "qtrack/rftl.hpp"

namespace qtrack {

std::vector<Interval> geometric_intervals(int horizon) {
  if (horizon < 1) throw DomainError("geometric_intervals: horizon must be >= 1");
  std::vector<Interval> out;
  for (long long len = 1; len <= horizon; len *= 2) {
    for (long long start = len; start <= horizon; start += len) {
      out.push_back({static_cast<int>(start), static_cast<int>(start + len)});
    }
  }
  return out;
}

std::vector<Interval> cover_interval(int q, int s) {
  if (q < 1 || s < q) throw DomainError("cover_interval: need 1 <= q <= s");
  std::vector<Interval> out;
  int p = q;
  while (p < s) {
    long long len = 1;
    while (p % (len * 2) == 0 && p + len * 2 <= s) len *= 2;
    out.push_back({p, static_cast<int>(p + len)});
    p += static_cast<int>(len);
  }
  return out;
}

StronglyAdaptiveLearner::StronglyAdaptiveLearner(int horizon, LearnerFactory factory,
                                                 MetaRule rule)
    : horizon_(horizon), factory_(std::move(factory)), rule_(rule) {
  if (horizon_ < 1) throw DomainError("StronglyAdaptiveLearner: horizon must be >= 1");
  if (!factory_) throw DomainError("StronglyAdaptiveLearner: empty factory");
  open_and_retire();
}

void StronglyAdaptiveLearner::open_and_retire() {
  std::erase_if(experts_, [this](const IntervalExpert& e) { return e.interval.end <= t_; });
  const double log_t = std::log(std::max(horizon_, 2));
  for (int k = 0; (1LL << k) <= t_; ++k) {
    const int len = 1 << k;
    if (t_ % len != 0) continue;
    IntervalExpert e;
    e.interval = {t_, t_ + len};
    e.level = k;
    e.box = factory_(len);
    const double same_length = std::max(1, horizon_ / len);
    e.log_weight = -std::log(static_cast<double>(len) * same_length);
    e.eta = std::sqrt(8.0 * log_t / len);
    experts_.push_back(std::move(e));
  }
  refresh();
}

std::vector<double> StronglyAdaptiveLearner::weights() const {
  double top = -std::numeric_limits<double>::infinity();
  for (const auto& e : experts_) top = std::max(top, e.log_weight);
  std::vector<double> w(experts_.size());
  double total = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = std::exp(experts_[i].log_weight - top);
    if (rule_ == MetaRule::kCoinBetting) w[i] *= std::max(experts_[i].bet, 0.0);
    total += w[i];
  }
  if (total <= 0.0) {
    // No interval is betting on itself: fall back to the prior.
    for (std::size_t i = 0; i < w.size(); ++i) {
      w[i] = std::exp(experts_[i].log_weight - top);
      total += w[i];
    }
  }
  for (double& v : w) v /= total;
  return w;
}

void StronglyAdaptiveLearner::refresh() {
  HermitianMatrix mix = HermitianMatrix::zero(experts_.front().box->predict().dim());
  if (rule_ == MetaRule::kCoinBetting) {
    for (auto& e : experts_) {
      const double age = t_ - e.interval.start + 1;
      e.bet = e.reward_sum / age * e.wealth;
    }
  }
  const std::vector<double> w = weights();
  for (std::size_t i = 0; i < w.size(); ++i) {
    mix.add_scaled(w[i], experts_[i].box->predict().matrix());
  }
  prediction_ = DensityMatrix(std::move(mix), unchecked);
}

void StronglyAdaptiveLearner::observe(const Effect& effect, const LossDescriptor& loss) {
  const double meta_loss = loss_eval(loss, effect.probability(prediction_.matrix()));
  for (auto& e : experts_) {
    const double own = loss_eval(loss, effect.probability(e.box->predict().matrix()));
    const double r = std::clamp(meta_loss - own, -1.0, 1.0);
    if (rule_ == MetaRule::kCoinBetting) {
      const double g = e.bet > 0.0 ? r : std::max(r, 0.0);
      e.wealth += g * e.bet;
      e.reward_sum += g;
    } else {
      e.log_weight += e.eta * r;
    }
    e.box->observe(effect, loss);
  }
  ++t_;
  open_and_retire();
}

std::string StronglyAdaptiveLearner::name() const {
  std::ostringstream out;
  out << (rule_ == MetaRule::kCoinBetting ? "cbce" : "sleeping_mw") << "(T=" << horizon_ << ")";
  return out.str();
}

std::unique_ptr<StronglyAdaptiveLearner> adaptive_rftl_learner(int horizon, int n_qubits,
                                                               double lipschitz,
                                                               MetaRule rule) {
  return std::make_unique<StronglyAdaptiveLearner>(
      horizon,
      [n_qubits, lipschitz](int len) -> std::unique_ptr<Learner> {
        return std::make_unique<RftlLearner>(len, n_qubits, lipschitz);
      },
      rule);
}

}  // namespace qtrack

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


#include "qtrack/meta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "qtrack/error.hpp"

namespace qtrack {
namespace {

// log(1e-300)
constexpr double kLogUnderflow = -690.7755278982137;

}  // namespace

MetaWeights MetaWeights::uniform(std::size_t count, double alpha) {
  if (count == 0) throw DimensionError("MetaWeights: no experts");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw DomainError("MetaWeights: alpha must be > 0");
  MetaWeights meta;
  meta.log_weights.assign(count, -std::log(static_cast<double>(count)));
  meta.alpha = alpha;
  return meta;
}

std::vector<double> MetaWeights::normalized() const {
  const double top = *std::max_element(log_weights.begin(), log_weights.end());
  std::vector<double> w(log_weights.size());
  double total = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = std::exp(log_weights[i] - top);
    total += w[i];
  }
  for (double& v : w) v /= total;
  return w;
}

DensityMatrix mw_predict(const MetaWeights& meta, std::span<const DensityMatrix> outputs) {
  if (outputs.size() != meta.log_weights.size() || outputs.empty()) {
    throw DimensionError("mw_predict: expert count mismatch");
  }
  const std::vector<double> w = meta.normalized();
  HermitianMatrix mix = HermitianMatrix::zero(outputs.front().dim());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (outputs[i].dim() != mix.dim()) throw DimensionError("mw_predict: dimension mismatch");
    mix.add_scaled(w[i], outputs[i].matrix());
  }
  return DensityMatrix(std::move(mix), unchecked);
}

MetaWeights mw_update(MetaWeights meta, std::span<const double> losses) {
  if (losses.size() != meta.log_weights.size()) {
    throw DimensionError("mw_update: loss count mismatch");
  }
  double top = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < losses.size(); ++i) {
    meta.log_weights[i] -= meta.alpha * losses[i];
    top = std::max(top, meta.log_weights[i]);
  }
  if (top < kLogUnderflow) {
    for (double& lw : meta.log_weights) lw -= top;
  }
  return meta;
}

double default_alpha(int horizon, std::size_t expert_count) {
  if (horizon < 1) throw DomainError("default_alpha: horizon must be >= 1");
  const double n = static_cast<double>(std::max<std::size_t>(expert_count, 2));
  return std::sqrt(8.0 * std::log(n) / static_cast<double>(horizon));
}

MultiplicativeWeightsLearner::MultiplicativeWeightsLearner(
    std::vector<std::unique_ptr<Learner>> experts, double alpha, std::vector<int> tags)
    : experts_(std::move(experts)), tags_(std::move(tags)) {
  if (experts_.empty()) throw DimensionError("MultiplicativeWeightsLearner: no experts");
  if (tags_.empty()) tags_.assign(experts_.size(), 0);
  if (tags_.size() != experts_.size()) {
    throw DimensionError("MultiplicativeWeightsLearner: tag count mismatch");
  }
  meta_ = MetaWeights::uniform(experts_.size(), alpha);
  losses_.resize(experts_.size());
  refresh();
}

void MultiplicativeWeightsLearner::refresh() {
  outputs_.clear();
  for (const auto& e : experts_) outputs_.push_back(e->predict());
  prediction_ = mw_predict(meta_, outputs_);
}

void MultiplicativeWeightsLearner::observe(const Effect& effect, const LossDescriptor& loss) {
  for (std::size_t i = 0; i < experts_.size(); ++i) {
    losses_[i] = loss_eval(loss, effect.probability(outputs_[i].matrix()));
  }
  meta_ = mw_update(std::move(meta_), losses_);
  for (auto& e : experts_) e->observe(effect, loss);
  refresh();
}

std::string MultiplicativeWeightsLearner::name() const {
  std::ostringstream out;
  out << "mw(" << experts_.size() << " experts)";
  return out.str();
}

int MultiplicativeWeightsLearner::leading_tag() const {
  const auto it = std::max_element(meta_.log_weights.begin(), meta_.log_weights.end());
  return tags_[static_cast<std::size_t>(it - meta_.log_weights.begin())];
}

std::unique_ptr<MultiplicativeWeightsLearner> dynamic_learner(int horizon, int n_qubits,
                                                              double lipschitz,
                                                              std::optional<double> alpha) {
  const ClippedDomain domain(n_qubits, horizon);
  const std::vector<double> grid = eta_grid(horizon, lipschitz);
  std::vector<std::unique_ptr<Learner>> experts;
  for (double eta : grid) experts.push_back(std::make_unique<OmdLearner>(eta, domain, lipschitz));
  return std::make_unique<MultiplicativeWeightsLearner>(
      std::move(experts), alpha.value_or(default_alpha(horizon, grid.size())));
}

std::unique_ptr<MultiplicativeWeightsLearner> channel_family_learner(
    int horizon, int n_qubits, double lipschitz, const std::vector<QuantumChannel>& channels,
    std::optional<double> alpha) {
  if (channels.empty()) throw DimensionError("channel_family_learner: empty channel family");
  const ClippedDomain domain(n_qubits, horizon);
  const std::vector<double> grid = eta_grid(horizon, lipschitz);
  std::vector<std::unique_ptr<Learner>> experts;
  std::vector<int> tags;
  for (double eta : grid) {
    for (std::size_t j = 0; j < channels.size(); ++j) {
      if (channels[j].dim_in() != domain.dim() || channels[j].dim_out() != domain.dim()) {
        throw DimensionError("channel_family_learner: channel dimension mismatch");
      }
      experts.push_back(std::make_unique<OmdLearner>(eta, domain, lipschitz, channels[j]));
      tags.push_back(static_cast<int>(j));
    }
  }
  const std::size_t count = experts.size();
  return std::make_unique<MultiplicativeWeightsLearner>(
      std::move(experts), alpha.value_or(default_alpha(horizon, count)), std::move(tags));
}

}  // namespace qtrack

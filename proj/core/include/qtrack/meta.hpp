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

// Multiplicative weights over a finite set of expert learners. The meta
// prediction is the weighted average of the experts' current states; every
// expert is updated with the loss evaluated at its own prediction.

#ifndef QTRACK_META_HPP_
#define QTRACK_META_HPP_

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "qtrack/learner.hpp"
#include "qtrack/omd.hpp"

namespace qtrack {

// Weights live in the log domain; normalization happens only in normalized().
struct MetaWeights {
  std::vector<double> log_weights;
  double alpha = 0.0;

  static MetaWeights uniform(std::size_t count, double alpha);
  std::vector<double> normalized() const;
};

// sum_k w(k) x(k) / sum_k w(k).
DensityMatrix mw_predict(const MetaWeights& meta, std::span<const DensityMatrix> outputs);
// log w(k) -= alpha * loss(k), re-centred when the largest weight drops
// below 1e-300.
MetaWeights mw_update(MetaWeights meta, std::span<const double> losses);

// sqrt(8 ln N / T), with N clamped to at least 2.
double default_alpha(int horizon, std::size_t expert_count);

class MultiplicativeWeightsLearner final : public Learner {
 public:
  // `tags` labels each expert (e.g. its channel index); empty means all 0.
  MultiplicativeWeightsLearner(std::vector<std::unique_ptr<Learner>> experts, double alpha,
                               std::vector<int> tags = {});

  const DensityMatrix& predict() const override { return prediction_; }
  void observe(const Effect& effect, const LossDescriptor& loss) override;
  std::string name() const override;

  const MetaWeights& weights() const noexcept { return meta_; }
  std::size_t size() const noexcept { return experts_.size(); }
  const Learner& expert(std::size_t i) const { return *experts_.at(i); }
  int tag(std::size_t i) const { return tags_.at(i); }
  // Tag of the currently heaviest expert.
  int leading_tag() const;

 private:
  void refresh();

  std::vector<std::unique_ptr<Learner>> experts_;
  std::vector<int> tags_;
  MetaWeights meta_;
  DensityMatrix prediction_;
  std::vector<DensityMatrix> outputs_;
  std::vector<double> losses_;
};

// MW over one OMD expert per eta in eta_grid(T, L), all started at the
// maximally mixed state of K = ClippedDomain(n, T).
std::unique_ptr<MultiplicativeWeightsLearner> dynamic_learner(
    int horizon, int n_qubits, double lipschitz, std::optional<double> alpha = std::nullopt);

// MW over the (eta, channel) product grid of channel-aware OMD experts. The
// tag of each expert is the index of its channel.
std::unique_ptr<MultiplicativeWeightsLearner> channel_family_learner(
    int horizon, int n_qubits, double lipschitz, const std::vector<QuantumChannel>& channels,
    std::optional<double> alpha = std::nullopt);

}  // namespace qtrack

#endif  // QTRACK_META_HPP_

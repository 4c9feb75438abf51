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

// Regularized follow-the-leader with the entropy regularizer over all density
// matrices: x_{t+1} is the Gibbs state of the accumulated gradients.

#ifndef QTRACK_RFTL_HPP_
#define QTRACK_RFTL_HPP_

#include <optional>

#include "qtrack/learner.hpp"

namespace qtrack {

// exp(-eta S) / Tr exp(-eta S), exponent shifted by its largest eigenvalue.
DensityMatrix rftl_step(const HermitianMatrix& grad_sum, double eta);

// sqrt(n ln 2 / (2 T)) / L.
double rftl_eta(int horizon, int n_qubits, double lipschitz);

// Fixed: eta throughout. Adaptive: eta_t = sqrt(n ln 2 / (2 sum_s ||grad_s||^2))
// over the gradients seen so far, i.e. the fixed rate with L replaced by the
// observed gradient scale.
enum class RftlRate { kFixed, kAdaptive };

class RftlLearner final : public Learner {
 public:
  // With mix_output the Gibbs state is mixed into ClippedDomain(n, T) before
  // it is played, so predictions stay inside K.
  RftlLearner(int horizon, int n_qubits, double lipschitz,
              std::optional<double> eta = std::nullopt, bool mix_output = true,
              RftlRate rate = RftlRate::kFixed);

  const DensityMatrix& predict() const override { return prediction_; }
  void observe(const Effect& effect, const LossDescriptor& loss) override;
  std::string name() const override;

  // Step used for the current prediction.
  double eta() const noexcept { return eta_; }
  RftlRate rate() const noexcept { return rate_; }
  const HermitianMatrix& grad_sum() const noexcept { return grad_sum_; }
  const ClippedDomain& domain() const noexcept { return domain_; }

 private:
  void refresh();

  ClippedDomain domain_;
  double eta_;
  bool mix_output_;
  RftlRate rate_;
  double grad_sq_sum_ = 0.0;
  HermitianMatrix grad_sum_;
  DensityMatrix prediction_;
};

}  // namespace qtrack

#endif  // QTRACK_RFTL_HPP_

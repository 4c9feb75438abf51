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

// Online mirror descent over the clipped state domain K with the negative von
// Neumann entropy as mirror map:
//
//   grad_t  = l'(Tr(E x_t)) E
//   y_{t+1} = exp(log x_t - eta grad_t)
//   x_{t+1} = argmin_{x in K} B_R(x || y_{t+1})
//
// optionally followed by a known channel, x_{t+1} <- phi(x_{t+1}).

#ifndef QTRACK_OMD_HPP_
#define QTRACK_OMD_HPP_

#include <optional>
#include <vector>

#include "qtrack/learner.hpp"

namespace qtrack {

struct OmdDiagnostics {
  // Running max of ||grad_t|| (spectral), i.e. the observed G_R.
  double max_grad_norm = 0.0;
  // Running max of R(x_s) - R(x_t) over iterates seen; a proxy for D_R^2.
  double max_entropy_gap = 0.0;
  double min_neg_entropy = 0.0;
  double max_neg_entropy = 0.0;
  // B_R(x_t || y_{t+1}) of the latest step, from the dual-update identity
  // eta Tr(x_t grad_t) - 1 + Tr(y_{t+1}).
  double last_step_divergence = 0.0;
  // Smallest eigenvalue of any dual iterate y_{t+1} produced so far.
  double min_dual_eigenvalue = 1.0;
  // Times the channel output left K and was mixed back in.
  int channel_mix_count = 0;
  int steps = 0;
};

struct OmdState {
  double eta = 0.0;
  ClippedDomain domain{1, 1};
  DensityMatrix x;
  // Eigendecomposition of x, kept so that log x needs no extra solve.
  Spectrum x_spectrum;
  OmdDiagnostics diagnostics;
  // Dual iterate of the most recent step (Hermitian PD by construction).
  std::optional<Spectrum> last_dual;

  // x_1 = 2^{-n} I. Throws DomainError unless 0 < eta < 1 / (2 L).
  static OmdState initial(double eta, const ClippedDomain& domain, double lipschitz);
  // Starts from a given K-member instead (same eta check).
  static OmdState starting_at(double eta, const ClippedDomain& domain, double lipschitz,
                              const DensityMatrix& x1);
};

OmdState omd_step(OmdState state, const Effect& effect, const LossDescriptor& loss);

// omd_step, then x_{t+1} = phi(x_hat_{t+1}). If phi(x_hat) leaves K (possible
// for non-unital channels) it is mixed back with mix_into_domain.
OmdState channel_omd_step(OmdState state, const QuantumChannel& phi,
                          const Effect& effect, const LossDescriptor& loss);

// {2^{-k-1} : 1 <= k <= ceil(log2 T)}, values >= 1 / (2L) clipped to just
// below 1 / (2L).
std::vector<double> eta_grid(int horizon, double lipschitz);

class OmdLearner final : public Learner {
 public:
  OmdLearner(double eta, const ClippedDomain& domain, double lipschitz,
             std::optional<QuantumChannel> channel = std::nullopt);
  explicit OmdLearner(OmdState state, std::optional<QuantumChannel> channel = std::nullopt);

  const DensityMatrix& predict() const override { return state_.x; }
  void observe(const Effect& effect, const LossDescriptor& loss) override;
  std::string name() const override;

  const OmdState& state() const noexcept { return state_; }
  const std::optional<QuantumChannel>& channel() const noexcept { return channel_; }

 private:
  OmdState state_;
  std::optional<QuantumChannel> channel_;
};

}  // namespace qtrack

#endif  // QTRACK_OMD_HPP_

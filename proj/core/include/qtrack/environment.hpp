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

// Simulated ground truth: state processes, random measurements, bounded-error
// feedback, and the scalar losses applied to predicted probabilities.

#ifndef QTRACK_ENVIRONMENT_HPP_
#define QTRACK_ENVIRONMENT_HPP_

#include <variant>
#include <vector>

#include "qtrack/quantum.hpp"
#include "qtrack/random.hpp"

namespace qtrack {

enum class LossKind { kL1, kL2 };

// l(z) = |z - b| (L1, Lipschitz 1) or (z - b)^2 (L2, Lipschitz 2 on [0, 1]).
struct LossDescriptor {
  LossKind kind = LossKind::kL2;
  double target = 0.0;

  double lipschitz() const noexcept { return kind == LossKind::kL1 ? 1.0 : 2.0; }
};

double lipschitz_constant(LossKind kind) noexcept;
double loss_eval(const LossDescriptor& loss, double z);
// Subderivative; the L1 subgradient at z == b is 0.
double loss_subgrad(const LossDescriptor& loss, double z);

struct StaticProcess {};

// Piecewise constant: a fresh random state at each change step (1-based).
struct KShiftProcess {
  int k = 0;
  std::vector<int> change_steps;  // sorted, subset of {2..T}, size <= k
};

// rho_{t+1} = U rho_t U^dagger, U = exp(-i H dt).
struct HamiltonianDrift {
  HermitianMatrix hamiltonian;
  double dt = 0.0;
};

// rho_{t+1} = phi(rho_t).
struct ChannelDynamics {
  QuantumChannel channel;
};

struct GroundTruthProcess {
  std::variant<StaticProcess, KShiftProcess, HamiltonianDrift, ChannelDynamics> variant;
  DensityMatrix initial_state;
  int horizon = 1;
};

// k distinct change steps drawn uniformly without replacement from {2..T},
// returned sorted. Throws DomainError if k exceeds the T - 1 available steps.
std::vector<int> draw_change_steps(int k, int horizon, Rng& rng);

// Random spectral-norm-1 Hamiltonian (random_hermitian rescaled).
HermitianMatrix random_hamiltonian(std::size_t dim, Rng& rng);

// Length-T state sequence. KShift draws a fresh random_density at each change
// step from `rng`; the other variants are deterministic given the process.
std::vector<DensityMatrix> gen_state_sequence(const GroundTruthProcess& proc, Rng& rng);

// E = U diag(u_1..u_d) U^dagger with u_i ~ Uniform[0, 1] and Haar U.
Effect gen_effect(int n_qubits, Rng& rng);

// b_t = clamp(Tr(E rho) + delta, 0, 1), delta ~ Uniform[-eps/3, eps/3] when
// noisy, delta = 0 otherwise.
struct FeedbackRule {
  double epsilon = 0.3;
  bool noisy = false;
};
double gen_feedback(const Effect& effect, const DensityMatrix& rho,
                    const FeedbackRule& rule, Rng& rng);

// sum_t ||rho_{t+1} - rho_t||_*.
double path_length(const std::vector<DensityMatrix>& seq);
// sum_t ||rho_{t+1} - phi(rho_t)||_*.
double channel_path_length(const std::vector<DensityMatrix>& seq,
                           const QuantumChannel& phi);

}  // namespace qtrack

#endif  // QTRACK_ENVIRONMENT_HPP_

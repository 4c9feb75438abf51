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

#include "qtrack/environment.hpp"

#include <algorithm>
#include <cmath>

#include "qtrack/error.hpp"

namespace qtrack {

double lipschitz_constant(LossKind kind) noexcept {
  return kind == LossKind::kL1 ? 1.0 : 2.0;
}

double loss_eval(const LossDescriptor& loss, double z) {
  const double r = z - loss.target;
  return loss.kind == LossKind::kL1 ? std::abs(r) : r * r;
}

double loss_subgrad(const LossDescriptor& loss, double z) {
  const double r = z - loss.target;
  if (loss.kind == LossKind::kL2) return 2.0 * r;
  if (r > 0.0) return 1.0;
  if (r < 0.0) return -1.0;
  return 0.0;
}

std::vector<int> draw_change_steps(int k, int horizon, Rng& rng) {
  if (k < 0) throw DomainError("draw_change_steps: negative k");
  const int slots = horizon - 1;
  if (k > slots) {
    throw DomainError("k-shift: k = " + std::to_string(k) + " exceeds the " +
                      std::to_string(std::max(slots, 0)) +
                      " available change steps for T = " + std::to_string(horizon));
  }
  // Partial Fisher-Yates over {2..T}.
  std::vector<int> pool(static_cast<std::size_t>(slots));
  for (int i = 0; i < slots; ++i) pool[static_cast<std::size_t>(i)] = i + 2;
  for (int i = 0; i < k; ++i) {
    const auto j = static_cast<std::size_t>(i) +
                   rng.below(static_cast<std::uint64_t>(slots - i));
    std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
  }
  std::vector<int> steps(pool.begin(), pool.begin() + k);
  std::sort(steps.begin(), steps.end());
  return steps;
}

HermitianMatrix random_hamiltonian(std::size_t dim, Rng& rng) {
  HermitianMatrix h = random_hermitian(dim, rng);
  const double norm = spectral_norm(h);
  if (norm > 0.0) h *= 1.0 / norm;
  return h;
}

std::vector<DensityMatrix> gen_state_sequence(const GroundTruthProcess& proc, Rng& rng) {
  if (proc.horizon < 1) throw DomainError("gen_state_sequence: horizon must be >= 1");
  const auto t_max = static_cast<std::size_t>(proc.horizon);
  std::vector<DensityMatrix> seq;
  seq.reserve(t_max);
  seq.push_back(proc.initial_state);
  const std::size_t dim = proc.initial_state.dim();

  std::visit(
      [&](const auto& v) {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, StaticProcess>) {
          while (seq.size() < t_max) seq.push_back(proc.initial_state);
        } else if constexpr (std::is_same_v<V, KShiftProcess>) {
          if (v.k > proc.horizon) throw DomainError("k-shift: k exceeds T");
          if (static_cast<int>(v.change_steps.size()) > v.k) {
            throw DomainError("k-shift: more change steps than k");
          }
          std::size_t next_change = 0;
          for (std::size_t t = 2; t <= t_max; ++t) {
            if (next_change < v.change_steps.size() &&
                v.change_steps[next_change] == static_cast<int>(t)) {
              seq.emplace_back(random_density(dim, rng), unchecked);
              ++next_change;
            } else {
              seq.push_back(seq.back());
            }
          }
        } else if constexpr (std::is_same_v<V, HamiltonianDrift>) {
          const QuantumChannel u = unitary_channel_from_hamiltonian(v.hamiltonian, v.dt);
          while (seq.size() < t_max) seq.push_back(apply_channel(u, seq.back()));
        } else {
          while (seq.size() < t_max) seq.push_back(apply_channel(v.channel, seq.back()));
        }
      },
      proc.variant);
  return seq;
}

Effect gen_effect(int n_qubits, Rng& rng) {
  const std::size_t d = dimension_for_qubits(n_qubits);
  const ComplexMatrix u = haar_unitary(d, rng);
  std::vector<double> spectrum(d);
  for (double& value : spectrum) value = rng.uniform();
  return Effect(reconstruct(u, spectrum));
}

double gen_feedback(const Effect& effect, const DensityMatrix& rho,
                    const FeedbackRule& rule, Rng& rng) {
  const double p = effect.probability(rho.matrix());
  const double delta = rule.noisy ? rng.uniform(-rule.epsilon / 3.0, rule.epsilon / 3.0) : 0.0;
  return std::clamp(p + delta, 0.0, 1.0);
}

double path_length(const std::vector<DensityMatrix>& seq) {
  double total = 0.0;
  for (std::size_t t = 0; t + 1 < seq.size(); ++t) {
    total += nuclear_norm(seq[t + 1].matrix() - seq[t].matrix());
  }
  return total;
}

double channel_path_length(const std::vector<DensityMatrix>& seq,
                           const QuantumChannel& phi) {
  double total = 0.0;
  for (std::size_t t = 0; t + 1 < seq.size(); ++t) {
    total += nuclear_norm(seq[t + 1].matrix() - phi.apply(seq[t].matrix()));
  }
  return total;
}

}  // namespace qtrack

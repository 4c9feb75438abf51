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

// Experiment driver: builds a scenario (states, measurements, feedback) from
// a config and a trial stream, plays a learner through it and records the
// regret ledger.

#ifndef QTRACK_EXPERIMENT_HPP_
#define QTRACK_EXPERIMENT_HPP_

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "qtrack/config.hpp"
#include "qtrack/ledger.hpp"
#include "qtrack/learner.hpp"

namespace qtrack {

// Everything nature commits to in one trial. Replaying the same scenario
// against several learners gives paired comparisons.
struct Scenario {
  int n_qubits = 1;
  int horizon = 1;
  LossKind loss = LossKind::kL2;
  double epsilon = 0.3;
  RatioMode ratio_mode = RatioMode::kKShift;
  std::vector<DensityMatrix> states;
  std::vector<Effect> effects;
  std::vector<double> targets;
  std::vector<int> change_steps;
  std::optional<QuantumChannel> true_channel;
};

// Streams of trial i: Rng(seed).split(i); split(0) feeds the scenario and
// split(1) the learner.
Rng trial_stream(std::uint64_t seed, int trial);

Scenario make_scenario(const ExperimentConfig& cfg, Rng rng);

// Resolves a channel spec (see ExperimentConfig::channel) on n qubits.
// Single-qubit built-ins act on qubit 0 when n > 1.
QuantumChannel make_channel(const std::string& spec, int n_qubits, Rng& rng);

std::unique_ptr<Learner> make_learner(const ExperimentConfig& cfg, LearnerKind kind,
                                      const Scenario& scenario, Rng rng);

// Plays all rounds. With check_domain every prediction is tested against
// ClippedDomain(n, T) and failures are counted in domain_violations.
RegretLedger run_learner(const Scenario& scenario, Learner& learner, bool check_domain = false);

struct ExperimentResult {
  std::vector<RegretLedger> trials;
  AggregateCurves aggregate;
};

ExperimentResult run_experiment(const ExperimentConfig& cfg);
ExperimentResult run_experiment(const ExperimentConfig& cfg, LearnerKind kind);
// Every kind plays the same scenarios (same seeds); result i is for kinds[i].
std::vector<ExperimentResult> run_paired(const ExperimentConfig& cfg,
                                         std::span<const LearnerKind> kinds);

// Per-round loss of the best fixed state on each constant segment of a
// single-qubit scenario, found by grid search over the Bloch ball
// (radial x polar x azimuthal resolution). Small instances only.
std::vector<double> best_fixed_segment_losses(const Scenario& scenario, int resolution = 24);

}  // namespace qtrack

#endif  // QTRACK_EXPERIMENT_HPP_

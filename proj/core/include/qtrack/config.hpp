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

// Experiment configuration: a flat `key = value` text format with one section
// per component.
//
//   [experiment]   n_qubits horizon seed trials loss epsilon noisy_feedback
//                  ratio_mode out_dir
//   [environment]  process k dt hamiltonian_scale channel
//   [learner]      kind inner blackbox meta alpha eta eta_scale rftl_rate
//                  channels
//
// Keys are unique across sections. '#' starts a comment. Unknown sections or
// keys are errors.

#ifndef QTRACK_CONFIG_HPP_
#define QTRACK_CONFIG_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qtrack/environment.hpp"
#include "qtrack/rftl.hpp"

namespace qtrack {

enum class ProcessKind { kStatic, kKShift, kHamiltonian, kChannel };
enum class LearnerKind { kDynamic, kAdaptive, kRftl, kChannelFamily, kLazy };
// Black box used inside the adaptive meta.
enum class BlackBoxKind { kRftl, kDynamic };
// Combiner inside the adaptive meta.
enum class MetaKind { kCbce, kSleepingMw };
enum class RatioMode { kKShift, kPath, kAdaptivePath };

struct ExperimentConfig {
  // [experiment]
  int n_qubits = 1;
  int horizon = 100;
  std::uint64_t seed = 1;
  int trials = 1;
  LossKind loss = LossKind::kL2;
  double epsilon = 0.3;
  bool noisy_feedback = false;
  RatioMode ratio_mode = RatioMode::kKShift;
  std::string out_dir = "out";

  // [environment]
  ProcessKind process = ProcessKind::kStatic;
  int k = 0;
  double dt = 0.01;
  double hamiltonian_scale = 1.0;
  // random_unitary | identity | depolarizing:<p> | amplitude_damping:<g> |
  // bit_flip:<p> | <path to channel JSON>
  std::string channel = "random_unitary";

  // [learner]
  LearnerKind learner = LearnerKind::kAdaptive;
  // Learner wrapped by `lazy`; any kind but lazy.
  LearnerKind inner = LearnerKind::kAdaptive;
  BlackBoxKind blackbox = BlackBoxKind::kRftl;
  MetaKind meta = MetaKind::kCbce;
  std::optional<double> alpha;  // "auto" when unset
  std::optional<double> eta;    // RFTL step; "auto" when unset
  // Multiplies the default RFTL step, for the standalone learner and for the
  // adaptive black boxes alike.
  double eta_scale = 1.0;
  // fixed | adaptive (see RftlRate); adaptive ignores eta and eta_scale.
  RftlRate rftl_rate = RftlRate::kFixed;
  // Channel family for channel_family: channel specs as above, plus `true`
  // (the environment's channel) and `decoy` (a fresh random unitary).
  std::vector<std::string> channels = {"true", "identity"};

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

// Throws ConfigError on syntax errors, unknown keys or bad values, and on
// any validate() failure.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);
// Canonical form: every key, fixed order, doubles with 17 significant digits.
std::string emit_config(const ExperimentConfig& cfg);

// Sets one key (bare, or "section.key") from its textual value.
void set_config_value(ExperimentConfig& cfg, const std::string& key, const std::string& value);

// T >= 2, 1 <= n <= 6, trials >= 1, k <= T - 1, referenced channel files
// exist, and the learner/environment combination is meaningful.
void validate(const ExperimentConfig& cfg);

std::string to_string(ProcessKind kind);
std::string to_string(LearnerKind kind);
std::string to_string(BlackBoxKind kind);
std::string to_string(MetaKind kind);
std::string to_string(RftlRate rate);
std::string to_string(RatioMode mode);
std::string to_string(LossKind kind);
LearnerKind parse_learner_kind(const std::string& text);

}  // namespace qtrack

#endif  // QTRACK_CONFIG_HPP_

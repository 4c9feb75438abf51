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


#include "qtrack/experiment.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "qtrack/adaptive.hpp"
#include "qtrack/error.hpp"
#include "qtrack/lazy.hpp"
#include "qtrack/meta.hpp"
#include "qtrack/rftl.hpp"

namespace qtrack {
namespace {

QuantumChannel OnQubitZero(const QuantumChannel& local, int n_qubits) {
  if (n_qubits == 1) return local;
  const int target[] = {0};
  return embed_local_channel(local, target, n_qubits);
}

double SpecParameter(const std::string& spec) {
  return std::stod(spec.substr(spec.find(':') + 1));
}

}  // namespace

Rng trial_stream(std::uint64_t seed, int trial) {
  return Rng(seed).split(static_cast<std::uint64_t>(trial));
}

QuantumChannel make_channel(const std::string& spec, int n_qubits, Rng& rng) {
  const std::size_t d = dimension_for_qubits(n_qubits);
  if (spec == "random_unitary") return QuantumChannel::unitary(haar_unitary(d, rng));
  if (spec == "identity") return QuantumChannel::identity(d);
  if (spec.rfind("depolarizing:", 0) == 0) {
    return QuantumChannel::depolarizing(d, SpecParameter(spec));
  }
  if (spec.rfind("amplitude_damping:", 0) == 0) {
    return OnQubitZero(QuantumChannel::amplitude_damping(SpecParameter(spec)), n_qubits);
  }
  if (spec.rfind("bit_flip:", 0) == 0) {
    return OnQubitZero(QuantumChannel::bit_flip(SpecParameter(spec)), n_qubits);
  }
  QuantumChannel phi = load_channel(spec);
  if (phi.dim_in() != d || phi.dim_out() != d) {
    throw ConfigError("channel file " + spec + " does not act on " +
                      std::to_string(n_qubits) + " qubits");
  }
  return phi;
}

Scenario make_scenario(const ExperimentConfig& cfg, Rng rng) {
  Scenario sc;
  sc.n_qubits = cfg.n_qubits;
  sc.horizon = cfg.horizon;
  sc.loss = cfg.loss;
  sc.epsilon = cfg.epsilon;
  sc.ratio_mode = cfg.ratio_mode;

  Rng state_rng = rng.split(0);
  Rng effect_rng = rng.split(1);
  Rng noise_rng = rng.split(2);
  Rng process_rng = rng.split(3);
  const std::size_t d = dimension_for_qubits(cfg.n_qubits);

  GroundTruthProcess proc;
  proc.horizon = cfg.horizon;
  proc.initial_state = DensityMatrix(random_density(d, state_rng), unchecked);
  switch (cfg.process) {
    case ProcessKind::kStatic:
      proc.variant = StaticProcess{};
      break;
    case ProcessKind::kKShift:
      sc.change_steps = draw_change_steps(cfg.k, cfg.horizon, process_rng);
      proc.variant = KShiftProcess{cfg.k, sc.change_steps};
      break;
    case ProcessKind::kHamiltonian: {
      HermitianMatrix h = random_hamiltonian(d, process_rng);
      h *= cfg.hamiltonian_scale;
      proc.variant = HamiltonianDrift{std::move(h), cfg.dt};
      break;
    }
    case ProcessKind::kChannel:
      sc.true_channel = make_channel(cfg.channel, cfg.n_qubits, process_rng);
      proc.variant = ChannelDynamics{*sc.true_channel};
      break;
  }
  sc.states = gen_state_sequence(proc, state_rng);

  const FeedbackRule rule{cfg.epsilon, cfg.noisy_feedback};
  sc.effects.reserve(sc.states.size());
  sc.targets.reserve(sc.states.size());
  for (const auto& rho : sc.states) {
    sc.effects.push_back(gen_effect(cfg.n_qubits, effect_rng));
    sc.targets.push_back(gen_feedback(sc.effects.back(), rho, rule, noise_rng));
  }
  return sc;
}

std::unique_ptr<Learner> make_learner(const ExperimentConfig& cfg, LearnerKind kind,
                                      const Scenario& scenario, Rng rng) {
  const int t = scenario.horizon;
  const int n = scenario.n_qubits;
  const double lip = lipschitz_constant(scenario.loss);
  switch (kind) {
    case LearnerKind::kDynamic:
      return dynamic_learner(t, n, lip, cfg.alpha);
    case LearnerKind::kRftl:
      return std::make_unique<RftlLearner>(
          t, n, lip, cfg.eta.value_or(cfg.eta_scale * rftl_eta(t, n, lip)), true, cfg.rftl_rate);
    case LearnerKind::kAdaptive: {
      LearnerFactory factory;
      if (cfg.blackbox == BlackBoxKind::kRftl) {
        factory = [n, lip, scale = cfg.eta_scale,
                   rate = cfg.rftl_rate](int len) -> std::unique_ptr<Learner> {
          return std::make_unique<RftlLearner>(len, n, lip, scale * rftl_eta(len, n, lip), true,
                                               rate);
        };
      } else {
        factory = [n, lip](int len) -> std::unique_ptr<Learner> {
          return dynamic_learner(len, n, lip);
        };
      }
      const MetaRule rule =
          cfg.meta == MetaKind::kCbce ? MetaRule::kCoinBetting : MetaRule::kSleepingMw;
      return std::make_unique<StronglyAdaptiveLearner>(t, std::move(factory), rule);
    }
    case LearnerKind::kChannelFamily: {
      Rng decoy_rng = rng.split(0);
      std::vector<QuantumChannel> family;
      for (const auto& spec : cfg.channels) {
        if (spec == "true") {
          if (!scenario.true_channel) {
            throw ConfigError("channels: 'true' needs a channel environment");
          }
          family.push_back(*scenario.true_channel);
        } else if (spec == "decoy") {
          family.push_back(make_channel("random_unitary", n, decoy_rng));
        } else {
          family.push_back(make_channel(spec, n, decoy_rng));
        }
      }
      return channel_family_learner(t, n, lip, family, cfg.alpha);
    }
    case LearnerKind::kLazy:
      if (cfg.inner == LearnerKind::kLazy) throw ConfigError("lazy cannot wrap lazy");
      return lazy_update_wrapper(make_learner(cfg, cfg.inner, scenario, rng.split(1)),
                                 cfg.epsilon);
  }
  throw ConfigError("unknown learner kind");
}

RegretLedger run_learner(const Scenario& sc, Learner& learner, bool check_domain) {
  const std::size_t rounds = sc.states.size();
  const ClippedDomain domain(sc.n_qubits, sc.horizon);
  RegretLedger ledger;
  ledger.learner = learner.name();
  ledger.n_qubits = sc.n_qubits;
  for (auto* v : {&ledger.learner_loss, &ledger.comparator_loss, &ledger.cum_regret,
                  &ledger.avg_regret, &ledger.path_length, &ledger.prediction_gap}) {
    v->resize(rounds);
  }
  ledger.mistakes.resize(rounds);

  double regret = 0.0;
  double path = 0.0;
  int mistakes = 0;
  for (std::size_t i = 0; i < rounds; ++i) {
    if (i > 0) path += nuclear_norm(sc.states[i].matrix() - sc.states[i - 1].matrix());
    const DensityMatrix& x = learner.predict();
    if (check_domain && !domain.contains(x.matrix())) ++ledger.domain_violations;
    const Effect& e = sc.effects[i];
    const LossDescriptor loss{sc.loss, sc.targets[i]};
    const double z = e.probability(x.matrix());
    const double truth = e.probability(sc.states[i].matrix());
    const double ll = loss_eval(loss, z);
    const double lc = loss_eval(loss, truth);
    regret += ll - lc;
    const double gap = std::abs(z - truth);
    if (gap > sc.epsilon) ++mistakes;

    ledger.learner_loss[i] = ll;
    ledger.comparator_loss[i] = lc;
    ledger.cum_regret[i] = regret;
    ledger.avg_regret[i] = regret / static_cast<double>(i + 1);
    ledger.path_length[i] = path;
    ledger.prediction_gap[i] = gap;
    ledger.mistakes[i] = mistakes;

    learner.observe(e, loss);
  }
  ledger.ratio = ratio_curves(ledger, sc.ratio_mode);
  return ledger;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  return run_experiment(cfg, cfg.learner);
}

ExperimentResult run_experiment(const ExperimentConfig& cfg, LearnerKind kind) {
  const LearnerKind kinds[] = {kind};
  return std::move(run_paired(cfg, kinds).front());
}

std::vector<ExperimentResult> run_paired(const ExperimentConfig& cfg,
                                         std::span<const LearnerKind> kinds) {
  validate(cfg);
  std::vector<ExperimentResult> results(kinds.size());
  for (int trial = 0; trial < cfg.trials; ++trial) {
    const Rng stream = trial_stream(cfg.seed, trial);
    const Scenario sc = make_scenario(cfg, stream.split(0));
    for (std::size_t j = 0; j < kinds.size(); ++j) {
      auto learner = make_learner(cfg, kinds[j], sc, stream.split(1));
      results[j].trials.push_back(run_learner(sc, *learner));
    }
  }
  for (auto& r : results) r.aggregate = aggregate_trials(r.trials);
  return results;
}

std::vector<double> best_fixed_segment_losses(const Scenario& sc, int resolution) {
  if (sc.n_qubits != 1) throw DimensionError("best_fixed_segment_losses: n = 1 only");
  if (resolution < 2) throw DomainError("best_fixed_segment_losses: resolution must be >= 2");
  // Candidate states (I + r . sigma) / 2 on a spherical grid, plus the centre.
  std::vector<DensityMatrix> grid;
  grid.push_back(DensityMatrix::maximally_mixed(1));
  for (int a = 1; a <= resolution; ++a) {
    const double r = static_cast<double>(a) / resolution;
    for (int b = 0; b <= resolution; ++b) {
      const double theta = std::numbers::pi * b / resolution;
      const int phis = (b == 0 || b == resolution) ? 1 : 2 * resolution;
      for (int c = 0; c < phis; ++c) {
        const double phi = 2.0 * std::numbers::pi * c / phis;
        const double x = r * std::sin(theta) * std::cos(phi);
        const double y = r * std::sin(theta) * std::sin(phi);
        const double z = r * std::cos(theta);
        ComplexMatrix m = ComplexMatrix::from_rows(
            {{Complex(0.5 * (1 + z), 0), Complex(0.5 * x, -0.5 * y)},
             {Complex(0.5 * x, 0.5 * y), Complex(0.5 * (1 - z), 0)}});
        grid.emplace_back(HermitianMatrix(std::move(m)), unchecked);
      }
    }
  }
  const std::size_t rounds = sc.states.size();
  std::vector<std::size_t> bounds = {0};
  for (int step : sc.change_steps) bounds.push_back(static_cast<std::size_t>(step - 1));
  bounds.push_back(rounds);

  std::vector<double> out(rounds, 0.0);
  for (std::size_t s = 0; s + 1 < bounds.size(); ++s) {
    const std::size_t lo = bounds[s];
    const std::size_t hi = bounds[s + 1];
    if (lo >= hi) continue;
    std::size_t best = 0;
    double best_total = std::numeric_limits<double>::infinity();
    for (std::size_t g = 0; g < grid.size(); ++g) {
      double total = 0.0;
      for (std::size_t i = lo; i < hi; ++i) {
        total += loss_eval({sc.loss, sc.targets[i]}, sc.effects[i].probability(grid[g].matrix()));
      }
      if (total < best_total) {
        best_total = total;
        best = g;
      }
    }
    for (std::size_t i = lo; i < hi; ++i) {
      out[i] = loss_eval({sc.loss, sc.targets[i]}, sc.effects[i].probability(grid[best].matrix()));
    }
  }
  return out;
}

}  // namespace qtrack

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


#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "qtrack/config.hpp"
#include "qtrack/error.hpp"
#include "qtrack/experiment.hpp"
#include "qtrack/report.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

struct CommonArgs {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::optional<std::string> out;
};

void AddCommon(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config, "experiment config file")->required();
  cmd->add_option("--seed", args.seed, "override experiment.seed");
  cmd->add_option("--trials", args.trials, "override experiment.trials");
  cmd->add_option("--out", args.out, "output directory (overrides experiment.out_dir)");
}

qtrack::ExperimentConfig LoadConfig(const CommonArgs& args) {
  qtrack::ExperimentConfig cfg = qtrack::parse_config_file(args.config);
  if (args.seed) cfg.seed = *args.seed;
  if (args.trials) cfg.trials = *args.trials;
  if (args.out) cfg.out_dir = *args.out;
  qtrack::validate(cfg);
  return cfg;
}

std::string TrialName(std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "trial_%04zu.csv", i);
  return buf;
}

void WriteResult(const qtrack::ExperimentResult& result, const fs::path& dir,
                 const std::string& label) {
  fs::create_directories(dir);
  for (std::size_t i = 0; i < result.trials.size(); ++i) {
    qtrack::emit_csv(result.trials[i], (dir / TrialName(i)).string());
  }
  qtrack::emit_csv(result.aggregate, (dir / "aggregate.csv").string());
  const auto& a = result.aggregate;
  qtrack::emit_svg_plot({{"mean", a.mean_cum_regret}, {"max", a.max_cum_regret}},
                        {label + ": cumulative regret", "t", "regret", false, false},
                        (dir / "regret.svg").string());
  qtrack::emit_svg_plot({{"max ratio", a.max_ratio}, {"mean ratio", a.mean_ratio}},
                        {label + ": regret ratio", "t", "ratio", true, false},
                        (dir / "ratio.svg").string());
}

void Summarize(const std::string& label, const qtrack::ExperimentResult& r) {
  const auto& a = r.aggregate;
  if (a.size() == 0) return;
  const std::size_t last = a.size() - 1;
  std::cout << label << ": T=" << a.size() << " trials=" << r.trials.size()
            << " mean_regret=" << a.mean_cum_regret[last]
            << " max_regret=" << a.max_cum_regret[last]
            << " max_ratio=" << a.max_ratio[last]
            << " mean_mistakes=" << a.mean_mistakes[last] << "\n";
}

int Run(const CommonArgs& args) {
  const qtrack::ExperimentConfig cfg = LoadConfig(args);
  spdlog::info("run: {} learner, {} trials, T={}", qtrack::to_string(cfg.learner), cfg.trials,
               cfg.horizon);
  const qtrack::ExperimentResult result = qtrack::run_experiment(cfg);
  WriteResult(result, cfg.out_dir, qtrack::to_string(cfg.learner));
  Summarize(qtrack::to_string(cfg.learner), result);
  return 0;
}

int Compare(const CommonArgs& args, const std::vector<std::string>& names) {
  const qtrack::ExperimentConfig cfg = LoadConfig(args);
  std::vector<qtrack::LearnerKind> kinds;
  for (const auto& n : names) kinds.push_back(qtrack::parse_learner_kind(n));
  if (kinds.empty()) throw qtrack::ConfigError("compare: --learners is empty");
  spdlog::info("compare: {} learners on {} paired trials", kinds.size(), cfg.trials);
  const auto results = qtrack::run_paired(cfg, kinds);

  std::vector<qtrack::Curve> curves;
  for (std::size_t j = 0; j < kinds.size(); ++j) {
    WriteResult(results[j], fs::path(cfg.out_dir) / names[j], names[j]);
    Summarize(names[j], results[j]);
    curves.push_back({names[j], results[j].aggregate.mean_cum_regret});
  }
  qtrack::emit_svg_plot(curves, {"mean cumulative regret", "t", "regret", false, false},
                        (fs::path(cfg.out_dir) / "compare.svg").string());
  for (std::size_t j = 1; j < kinds.size(); ++j) {
    int wins = 0;
    for (std::size_t i = 0; i < results[0].trials.size(); ++i) {
      if (results[0].trials[i].cum_regret.back() < results[j].trials[i].cum_regret.back()) ++wins;
    }
    std::cout << names[0] << " beats " << names[j] << " in " << wins << "/"
              << results[0].trials.size() << " paired trials\n";
  }
  return 0;
}

int Sweep(const CommonArgs& args, const std::string& vary) {
  const qtrack::ExperimentConfig base = LoadConfig(args);
  const auto eq = vary.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw qtrack::ConfigError("sweep: --vary must look like key=v1,v2,...");
  }
  const std::string key = vary.substr(0, eq);
  std::vector<std::string> values;
  std::stringstream in(vary.substr(eq + 1));
  for (std::string v; std::getline(in, v, ',');) {
    if (!v.empty()) values.push_back(v);
  }
  if (values.empty()) throw qtrack::ConfigError("sweep: no values for " + key);

  // Validate every point before running any of them.
  std::vector<qtrack::ExperimentConfig> points;
  for (const auto& v : values) {
    qtrack::ExperimentConfig cfg = base;
    qtrack::set_config_value(cfg, key, v);
    qtrack::validate(cfg);
    points.push_back(cfg);
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::string label = key + "=" + values[i];
    spdlog::info("sweep: {}", label);
    const auto result = qtrack::run_experiment(points[i]);
    WriteResult(result, fs::path(base.out_dir) / label, label);
    Summarize(label, result);
  }
  return 0;
}

void ConfigureLogging() {
  spdlog::set_level(spdlog::level::warn);
  if (const char* level = std::getenv("QTRACK_LOG_LEVEL")) {
    spdlog::set_level(spdlog::level::from_str(level));
  }
}

}  // namespace

int main(int argc, char** argv) {
  ConfigureLogging();
  CLI::App app{"qtrack: online learning of changing quantum states"};
  app.require_subcommand(1);

  CommonArgs run_args;
  CLI::App* run = app.add_subcommand("run", "run one experiment");
  AddCommon(run, run_args);

  CommonArgs cmp_args;
  std::vector<std::string> learners;
  CLI::App* cmp = app.add_subcommand("compare", "run several learners on paired scenarios");
  AddCommon(cmp, cmp_args);
  cmp->add_option("--learners", learners, "comma-separated learner kinds")
      ->required()
      ->delimiter(',');

  CommonArgs sweep_args;
  std::string vary;
  CLI::App* sweep = app.add_subcommand("sweep", "repeat an experiment over values of one key");
  AddCommon(sweep, sweep_args);
  sweep->add_option("--vary", vary, "key=v1,v2,...")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*run) return Run(run_args);
    if (*cmp) return Compare(cmp_args, learners);
    if (*sweep) return Sweep(sweep_args, vary);
  } catch (const qtrack::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const qtrack::NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

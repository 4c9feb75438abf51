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


#include "qtrack/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <locale>
#include <sstream>

#include "qtrack/error.hpp"

namespace qtrack {
namespace {

std::string Trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void Bad(const std::string& key, const std::string& value, const std::string& what) {
  throw ConfigError("config: " + key + " = '" + value + "': " + what);
}

long long ParseInt(const std::string& key, const std::string& value) {
  long long out = 0;
  const char* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) Bad(key, value, "expected an integer");
  return out;
}

std::uint64_t ParseU64(const std::string& key, const std::string& value) {
  std::uint64_t out = 0;
  const char* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) Bad(key, value, "expected an unsigned integer");
  return out;
}

int ParseSmallInt(const std::string& key, const std::string& value) {
  const long long v = ParseInt(key, value);
  if (v < -1000000000LL || v > 1000000000LL) Bad(key, value, "out of range");
  return static_cast<int>(v);
}

double ParseDouble(const std::string& key, const std::string& value) {
  // from_chars for double is missing from older libstdc++.
  std::istringstream in(value);
  in.imbue(std::locale::classic());
  double out = 0.0;
  in >> out;
  if (in.fail() || !in.eof() || !std::isfinite(out)) Bad(key, value, "expected a number");
  return out;
}

std::optional<double> ParseAuto(const std::string& key, const std::string& value) {
  if (value == "auto") return std::nullopt;
  return ParseDouble(key, value);
}

bool ParseBool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  Bad(key, value, "expected true or false");
}

std::string FormatDouble(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

template <typename E, std::size_t N>
E ParseEnum(const std::string& key, const std::string& value,
            const std::pair<const char*, E> (&table)[N]) {
  for (const auto& [name, e] : table) {
    if (value == name) return e;
  }
  std::string options;
  for (const auto& [name, e] : table) options += std::string(options.empty() ? "" : ", ") + name;
  Bad(key, value, "expected one of " + options);
}

template <typename E, std::size_t N>
std::string EnumName(E e, const std::pair<const char*, E> (&table)[N]) {
  for (const auto& [name, v] : table) {
    if (v == e) return name;
  }
  return "?";
}

constexpr std::pair<const char*, ProcessKind> kProcesses[] = {
    {"static", ProcessKind::kStatic},
    {"kshift", ProcessKind::kKShift},
    {"hamiltonian", ProcessKind::kHamiltonian},
    {"channel", ProcessKind::kChannel}};
constexpr std::pair<const char*, LearnerKind> kLearners[] = {
    {"dynamic", LearnerKind::kDynamic},
    {"adaptive", LearnerKind::kAdaptive},
    {"rftl", LearnerKind::kRftl},
    {"channel_family", LearnerKind::kChannelFamily},
    {"lazy", LearnerKind::kLazy}};
constexpr std::pair<const char*, BlackBoxKind> kBlackBoxes[] = {
    {"rftl", BlackBoxKind::kRftl}, {"dynamic", BlackBoxKind::kDynamic}};
constexpr std::pair<const char*, MetaKind> kMetas[] = {{"cbce", MetaKind::kCbce},
                                                       {"sleeping_mw", MetaKind::kSleepingMw}};
constexpr std::pair<const char*, RftlRate> kRates[] = {{"fixed", RftlRate::kFixed},
                                                       {"adaptive", RftlRate::kAdaptive}};
constexpr std::pair<const char*, RatioMode> kRatioModes[] = {
    {"kshift", RatioMode::kKShift},
    {"path", RatioMode::kPath},
    {"adaptive_path", RatioMode::kAdaptivePath}};
constexpr std::pair<const char*, LossKind> kLosses[] = {{"l1", LossKind::kL1},
                                                        {"l2", LossKind::kL2}};

struct KeyInfo {
  const char* section;
  const char* key;
};

constexpr KeyInfo kKeys[] = {
    {"experiment", "n_qubits"},   {"experiment", "horizon"},
    {"experiment", "seed"},       {"experiment", "trials"},
    {"experiment", "loss"},       {"experiment", "epsilon"},
    {"experiment", "noisy_feedback"}, {"experiment", "ratio_mode"},
    {"experiment", "out_dir"},    {"environment", "process"},
    {"environment", "k"},         {"environment", "dt"},
    {"environment", "hamiltonian_scale"}, {"environment", "channel"},
    {"learner", "kind"},          {"learner", "inner"},
    {"learner", "blackbox"},      {"learner", "meta"},
    {"learner", "alpha"},
    {"learner", "eta"},           {"learner", "eta_scale"},
    {"learner", "rftl_rate"},
    {"learner", "channels"}};

const KeyInfo* FindKey(const std::string& key) {
  for (const auto& info : kKeys) {
    if (key == info.key) return &info;
  }
  return nullptr;
}

std::vector<std::string> SplitList(const std::string& value) {
  std::vector<std::string> out;
  std::stringstream in(value);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = Trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

bool IsBuiltinChannel(const std::string& spec) {
  if (spec == "random_unitary" || spec == "identity") return true;
  for (const char* prefix : {"depolarizing:", "amplitude_damping:", "bit_flip:"}) {
    if (spec.rfind(prefix, 0) == 0) return true;
  }
  return false;
}

void CheckChannelSpec(const std::string& key, const std::string& spec, bool family) {
  if (family && (spec == "true" || spec == "decoy")) return;
  const auto colon = spec.find(':');
  if (IsBuiltinChannel(spec)) {
    if (colon != std::string::npos) {
      const double p = ParseDouble(key, spec.substr(colon + 1));
      if (p < 0.0 || p > 1.0) Bad(key, spec, "channel parameter must lie in [0, 1]");
    }
    return;
  }
  if (!std::filesystem::is_regular_file(spec)) Bad(key, spec, "channel file does not exist");
}

}  // namespace

std::string to_string(ProcessKind kind) { return EnumName(kind, kProcesses); }
std::string to_string(LearnerKind kind) { return EnumName(kind, kLearners); }
std::string to_string(BlackBoxKind kind) { return EnumName(kind, kBlackBoxes); }
std::string to_string(MetaKind kind) { return EnumName(kind, kMetas); }
std::string to_string(RftlRate rate) { return EnumName(rate, kRates); }
std::string to_string(RatioMode mode) { return EnumName(mode, kRatioModes); }
std::string to_string(LossKind kind) { return EnumName(kind, kLosses); }

LearnerKind parse_learner_kind(const std::string& text) {
  return ParseEnum("kind", text, kLearners);
}

void set_config_value(ExperimentConfig& cfg, const std::string& dotted,
                      const std::string& raw) {
  std::string key = dotted;
  std::string section;
  if (const auto dot = dotted.find('.'); dot != std::string::npos) {
    section = dotted.substr(0, dot);
    key = dotted.substr(dot + 1);
  }
  const KeyInfo* info = FindKey(key);
  if (info == nullptr || (!section.empty() && section != info->section)) {
    throw ConfigError("config: unknown key '" + dotted + "'");
  }
  const std::string value = Trim(raw);
  if (key == "n_qubits") {
    cfg.n_qubits = ParseSmallInt(key, value);
  } else if (key == "horizon") {
    cfg.horizon = ParseSmallInt(key, value);
  } else if (key == "seed") {
    cfg.seed = ParseU64(key, value);
  } else if (key == "trials") {
    cfg.trials = ParseSmallInt(key, value);
  } else if (key == "loss") {
    cfg.loss = ParseEnum(key, value, kLosses);
  } else if (key == "epsilon") {
    cfg.epsilon = ParseDouble(key, value);
  } else if (key == "noisy_feedback") {
    cfg.noisy_feedback = ParseBool(key, value);
  } else if (key == "ratio_mode") {
    cfg.ratio_mode = ParseEnum(key, value, kRatioModes);
  } else if (key == "out_dir") {
    if (value.empty()) Bad(key, value, "must not be empty");
    cfg.out_dir = value;
  } else if (key == "process") {
    cfg.process = ParseEnum(key, value, kProcesses);
  } else if (key == "k") {
    cfg.k = ParseSmallInt(key, value);
  } else if (key == "dt") {
    cfg.dt = ParseDouble(key, value);
  } else if (key == "hamiltonian_scale") {
    cfg.hamiltonian_scale = ParseDouble(key, value);
  } else if (key == "channel") {
    cfg.channel = value;
  } else if (key == "kind") {
    cfg.learner = ParseEnum(key, value, kLearners);
  } else if (key == "inner") {
    cfg.inner = ParseEnum(key, value, kLearners);
  } else if (key == "blackbox") {
    cfg.blackbox = ParseEnum(key, value, kBlackBoxes);
  } else if (key == "meta") {
    cfg.meta = ParseEnum(key, value, kMetas);
  } else if (key == "alpha") {
    cfg.alpha = ParseAuto(key, value);
  } else if (key == "eta") {
    cfg.eta = ParseAuto(key, value);
  } else if (key == "eta_scale") {
    cfg.eta_scale = ParseDouble(key, value);
  } else if (key == "rftl_rate") {
    cfg.rftl_rate = ParseEnum(key, value, kRates);
  } else if (key == "channels") {
    cfg.channels = SplitList(value);
  }
}

void validate(const ExperimentConfig& cfg) {
  auto fail = [](const std::string& what) { throw ConfigError("config: " + what); };
  if (cfg.horizon < 2) fail("horizon must be >= 2");
  if (cfg.n_qubits < 1 || cfg.n_qubits > 6) fail("n_qubits must lie in [1, 6]");
  if (cfg.trials < 1) fail("trials must be >= 1");
  if (!(cfg.epsilon > 0.0)) fail("epsilon must be > 0");
  if (cfg.k < 0) fail("k must be >= 0");
  if (cfg.process == ProcessKind::kKShift && cfg.k > cfg.horizon - 1) {
    fail("k = " + std::to_string(cfg.k) + " exceeds the T - 1 = " +
         std::to_string(cfg.horizon - 1) + " available change steps");
  }
  if (cfg.process == ProcessKind::kHamiltonian && !(cfg.dt > 0.0)) fail("dt must be > 0");
  if (cfg.alpha && !(*cfg.alpha > 0.0)) fail("alpha must be > 0 or auto");
  if (cfg.eta && !(*cfg.eta > 0.0)) fail("eta must be > 0 or auto");
  if (!(cfg.eta_scale > 0.0)) fail("eta_scale must be > 0");
  if (cfg.inner == LearnerKind::kLazy) fail("inner learner of lazy cannot be lazy");
  if (cfg.process == ProcessKind::kChannel) CheckChannelSpec("channel", cfg.channel, false);
  const bool family = cfg.learner == LearnerKind::kChannelFamily ||
                      (cfg.learner == LearnerKind::kLazy &&
                       cfg.inner == LearnerKind::kChannelFamily);
  if (family) {
    if (cfg.channels.empty()) fail("channels must name at least one channel");
    for (const auto& spec : cfg.channels) {
      if (spec == "true" && cfg.process != ProcessKind::kChannel) {
        fail("channels: 'true' requires process = channel");
      }
      CheckChannelSpec("channels", spec, true);
    }
  }
}

ExperimentConfig parse_config(const std::string& text) {
  ExperimentConfig cfg;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = Trim(line);
    if (line.empty()) continue;
    const std::string where = "config line " + std::to_string(line_no) + ": ";
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(where + "malformed section header");
      section = Trim(line.substr(1, line.size() - 2));
      if (section != "experiment" && section != "environment" && section != "learner") {
        throw ConfigError(where + "unknown section [" + section + "]");
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(where + "expected key = value");
    if (section.empty()) throw ConfigError(where + "key outside of any section");
    const std::string key = Trim(line.substr(0, eq));
    try {
      set_config_value(cfg, section + "." + key, line.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError(where + e.what());
    }
  }
  validate(cfg);
  return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string emit_config(const ExperimentConfig& cfg) {
  auto opt = [](const std::optional<double>& v) { return v ? FormatDouble(*v) : "auto"; };
  std::string channels;
  for (const auto& c : cfg.channels) channels += (channels.empty() ? "" : ",") + c;
  std::ostringstream out;
  out << "[experiment]\n"
      << "n_qubits = " << cfg.n_qubits << "\n"
      << "horizon = " << cfg.horizon << "\n"
      << "seed = " << cfg.seed << "\n"
      << "trials = " << cfg.trials << "\n"
      << "loss = " << to_string(cfg.loss) << "\n"
      << "epsilon = " << FormatDouble(cfg.epsilon) << "\n"
      << "noisy_feedback = " << (cfg.noisy_feedback ? "true" : "false") << "\n"
      << "ratio_mode = " << to_string(cfg.ratio_mode) << "\n"
      << "out_dir = " << cfg.out_dir << "\n"
      << "\n[environment]\n"
      << "process = " << to_string(cfg.process) << "\n"
      << "k = " << cfg.k << "\n"
      << "dt = " << FormatDouble(cfg.dt) << "\n"
      << "hamiltonian_scale = " << FormatDouble(cfg.hamiltonian_scale) << "\n"
      << "channel = " << cfg.channel << "\n"
      << "\n[learner]\n"
      << "kind = " << to_string(cfg.learner) << "\n"
      << "inner = " << to_string(cfg.inner) << "\n"
      << "blackbox = " << to_string(cfg.blackbox) << "\n"
      << "meta = " << to_string(cfg.meta) << "\n"
      << "alpha = " << opt(cfg.alpha) << "\n"
      << "eta = " << opt(cfg.eta) << "\n"
      << "eta_scale = " << FormatDouble(cfg.eta_scale) << "\n"
      << "rftl_rate = " << to_string(cfg.rftl_rate) << "\n"
      << "channels = " << channels << "\n";
  return out.str();
}

}  // namespace qtrack

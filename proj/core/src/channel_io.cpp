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

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>
#include "qtrack/error.hpp"
#include "qtrack/quantum.hpp"

namespace qtrack {

QuantumChannel parse_channel_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("channel file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("kraus") || !doc["kraus"].is_array()) {
    throw ConfigError("channel file: expected an object with a \"kraus\" array");
  }
  if (doc["kraus"].empty()) throw ConfigError("channel file: no Kraus operators");
  std::vector<ComplexMatrix> ops;
  for (const auto& op : doc["kraus"]) {
    if (!op.is_array() || op.empty()) {
      throw ConfigError("channel file: each Kraus operator must be a list of rows");
    }
    const std::size_t rows = op.size();
    const std::size_t cols = op[0].size();
    std::vector<Complex> entries;
    entries.reserve(rows * cols);
    for (const auto& row : op) {
      if (!row.is_array() || row.size() != cols) {
        throw ConfigError("channel file: ragged Kraus operator");
      }
      for (const auto& z : row) {
        if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
          throw ConfigError("channel file: entries must be [re, im] pairs");
        }
        entries.emplace_back(z[0].get<double>(), z[1].get<double>());
      }
    }
    ops.emplace_back(rows, cols, std::move(entries));
  }
  return QuantumChannel(std::move(ops));
}

std::string channel_to_json(const QuantumChannel& phi) {
  nlohmann::json ops = nlohmann::json::array();
  for (const ComplexMatrix& k : phi.kraus_ops()) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < k.rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t c = 0; c < k.cols(); ++c) {
        row.push_back({k(r, c).real(), k(r, c).imag()});
      }
      rows.push_back(std::move(row));
    }
    ops.push_back(std::move(rows));
  }
  return nlohmann::json{{"kraus", std::move(ops)}}.dump(1);
}

QuantumChannel load_channel(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open channel file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_channel_json(buf.str());
}

void save_channel(const QuantumChannel& phi, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write channel file '" + path + "'");
  out << channel_to_json(phi) << '\n';
}

}  // namespace qtrack

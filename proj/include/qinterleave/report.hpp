// Copyright 2026 The qinterleave Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "qinterleave/pauli.hpp"

namespace qinterleave {

/// Result of one CLI command. Each entry of `items` carries an "ok" flag and
/// the verdict is pass iff all of them are ok. `lines` is the human-readable
/// body used in text mode.
struct Report {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  nlohmann::json items = nlohmann::json::array();
  std::vector<std::string> lines;
  double timing_ms = 0;

  void add_item(nlohmann::json item, bool ok) {
    item["ok"] = ok;
    items.push_back(std::move(item));
  }

  bool pass() const {
    for (const auto& item : items) {
      if (!item.at("ok").get<bool>()) return false;
    }
    return true;
  }

  std::string verdict() const { return pass() ? "pass" : "fail"; }

  nlohmann::json to_json() const {
    return {{"command", command},
            {"parameters", parameters},
            {"items", items},
            {"verdict", verdict()},
            {"timing_ms", timing_ms}};
  }

  /// Text output leaves out timing so that it is byte-reproducible.
  std::string to_text() const {
    std::string out;
    for (const std::string& line : lines) out += line + '\n';
    out += "verdict: " + verdict() + '\n';
    return out;
  }
};

/// Positions as a JSON array, shifted by `base` (0 or 1).
inline nlohmann::json positions_json(const std::vector<std::size_t>& positions, std::size_t base) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t p : positions) out.push_back(p + base);
  return out;
}

inline std::string join_positions(const std::vector<std::size_t>& positions, std::size_t base) {
  std::string out;
  for (std::size_t p : positions) {
    if (!out.empty()) out += ' ';
    out += std::to_string(p + base);
  }
  return out.empty() ? "-" : out;
}

/// Qubits touched by `p`, ascending.
inline std::vector<std::size_t> pauli_support(const PauliString& p) {
  return support(BinaryVector(p.size(), p.x_bits() | p.z_bits()));
}

}  // namespace qinterleave

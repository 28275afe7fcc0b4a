// Copyright 2026 The lindest Authors
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

#ifndef LINDEST_SCENARIO_IO_HPP
#define LINDEST_SCENARIO_IO_HPP

#include <json.hpp>

#include <optional>
#include <string>

#include "lindest/types.hpp"

namespace lindest {

inline constexpr const char* kToolVersion = "0.1.0";

/// Raised on malformed scenario input; the CLI maps it to exit code 2.
struct ScenarioError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Scenario {
  JumpModel model;
  enum class StateKind { none, pure, mixed, optimize } state_kind = StateKind::none;
  PureState pure;
  MixedState mixed;
  std::optional<ClassicalInstance> classical;
  nlohmann::json raw;
};

Scenario parse_scenario(const nlohmann::json& j);
Scenario load_scenario(const std::string& path);

/// FNV-1a over the canonical (sorted-key) serialization.
std::string scenario_hash(const nlohmann::json& j);

struct ResultRecord {
  std::string command;
  std::string scenario_hash;
  nlohmann::json values;
  nlohmann::json state;        // may be null
  nlohmann::json certificate;  // may be null
  std::uint64_t seed = 0;
  std::string tool_version = kToolVersion;
};

nlohmann::json to_json(const ResultRecord& record);
ResultRecord record_from_json(const nlohmann::json& j);

nlohmann::json state_to_json(const MixedState& rho);

}  // namespace lindest

#endif  // LINDEST_SCENARIO_IO_HPP

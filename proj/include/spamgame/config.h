// Copyright 2026 The spamgame Authors.
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

// Run configuration: JSON schema, presets and the config hash used in output
// file names.

#ifndef SPAMGAME_CONFIG_H_
#define SPAMGAME_CONFIG_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "spamgame/attacks.h"
#include "spamgame/dataset.h"
#include "spamgame/game.h"

namespace spamgame {

struct EvalConfig {
  // "matrix", "curve", "deployment" or "sweep".
  std::string mode = "matrix";
  // Curve thresholds in percent, descending.
  std::vector<double> thresholds;
  // "ensemble" (trained weights) or a detector name.
  std::string curve_defender = "ensemble";
  int trials = 10;
  std::string axis = "TopK";
  std::vector<std::string> values;
  // Path of the strategy file written by train.
  std::string strategy;
};

struct RunConfig {
  // Exactly one of dataset / generator is used; dataset wins when set.
  std::string dataset;
  GeneratorConfig generator;
  ResourceConfig resources;
  GameConfig game;
  EvalConfig eval;
  std::uint64_t seed = 0;
  std::string out = "out";
};

// Named presets: "desk" and "yelpchi-scale".
RunConfig Preset(std::string_view name);
std::vector<std::string> PresetNames();

// Overlays `j` on `base`. Unknown keys and out-of-range values throw
// ConfigError.
RunConfig RunConfigFromJson(const nlohmann::json& j, const RunConfig& base = {});
nlohmann::json ToJson(const RunConfig& config);

nlohmann::json ToJson(const GameConfig& config);
GameConfig GameConfigFromJson(const nlohmann::json& j, const GameConfig& base = {});
nlohmann::json ToJson(const ResourceConfig& config);
ResourceConfig ResourceConfigFromJson(const nlohmann::json& j,
                                      const ResourceConfig& base = {});

// Applies the run seed to the generator and the game.
void ApplySeed(RunConfig& config, std::uint64_t seed);

// Range checks across all blocks; throws ConfigError.
void ValidateRunConfig(const RunConfig& config);

// 64-bit FNV-1a of the compact JSON dump, as 16 hex digits.
std::string ConfigHash(const nlohmann::json& j);

}  // namespace spamgame

#endif  // SPAMGAME_CONFIG_H_

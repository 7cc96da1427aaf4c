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

// Command-line front end: generate | train | eval.
//
// Exit codes: 0 success, 1 configuration error, 2 runtime error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "spamgame/config.h"
#include "spamgame/dataset.h"
#include "spamgame/eval.h"
#include "spamgame/game.h"

namespace fs = std::filesystem;
using nlohmann::json;

namespace spamgame {
namespace {

struct Options {
  std::string config_path;
  std::string preset = "desk";
  std::optional<std::uint64_t> seed;
  std::string out;
  std::string strategy;
};

RunConfig LoadConfig(const Options& opt) {
  RunConfig config = Preset(opt.preset);
  if (!opt.config_path.empty()) {
    std::ifstream in(opt.config_path);
    if (!in) throw ConfigError("cannot open config " + opt.config_path);
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw ConfigError("config is not valid JSON: " + std::string(e.what()));
    }
    config = RunConfigFromJson(j, config);
  }
  if (opt.seed) ApplySeed(config, *opt.seed);
  if (!opt.out.empty()) config.out = opt.out;
  if (!opt.strategy.empty()) config.eval.strategy = opt.strategy;
  if (!config.dataset.empty() && !fs::exists(config.dataset)) {
    throw ConfigError("dataset not found: " + config.dataset);
  }
  if (!config.eval.strategy.empty() && !fs::exists(config.eval.strategy)) {
    throw ConfigError("strategy file not found: " + config.eval.strategy);
  }
  ValidateRunConfig(config);
  return config;
}

std::string Stem(const RunConfig& config) {
  return ConfigHash(ToJson(config)) + "_s" + std::to_string(config.seed);
}

void WriteManifest(const RunConfig& config, const std::string& command,
                   const std::string& preset) {
  json manifest = {{"command", command},
                   {"preset", preset},
                   {"config", ToJson(config)},
                   {"config_hash", ConfigHash(ToJson(config))},
                   {"seed", config.seed},
                   {"version", SPAMGAME_VERSION}};
  std::ofstream(fs::path(config.out) / "manifest.json") << manifest.dump(2) << '\n';
}

ReviewGraph LoadGraph(const RunConfig& config) {
  if (!config.dataset.empty()) {
    std::ifstream in(config.dataset);
    return IngestDataset(in);
  }
  try {
    return GenerateSynthetic(config.generator);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

AttackResources Resources(const ReviewGraph& graph, const RunConfig& config,
                          std::span<const AccountId> exclude = {}) {
  return SelectResources(graph, config.resources, config.game.econ.elite_threshold,
                         config.game.detector.prior, exclude);
}

int Generate(const RunConfig& config, const std::string& preset) {
  ReviewGraph graph = LoadGraph(config);
  fs::create_directories(config.out);
  const fs::path path = fs::path(config.out) / ("dataset_" + Stem(config) + ".tsv");
  std::ofstream out(path);
  WriteDataset(graph, out);
  WriteManifest(config, "generate", preset);
  std::cout << "wrote " << graph.num_reviews() << " reviews to " << path.string() << '\n';
  return 0;
}

int TrainCommand(const RunConfig& config, const std::string& preset) {
  ReviewGraph graph = LoadGraph(config);
  AttackResources resources = Resources(graph, config);
  fs::create_directories(config.out);
  WriteManifest(config, "train", preset);
  std::ofstream traces(fs::path(config.out) / "traces.ndjson");
  TrainResult result = Train(graph, resources, config.game, [&](const EpisodeTrace& t) {
    traces << ToJson(t, config.game).dump() << '\n';
    std::cerr << "episode " << t.t << " objective " << t.objective << " loss " << t.loss
              << '\n';
  });
  json strategy = StrategyJson(result, config.game);
  std::ofstream(fs::path(config.out) / "strategy.json") << strategy.dump(2) << '\n';
  std::cout << strategy.dump() << '\n';
  return 0;
}

struct Strategy {
  std::vector<double> p;
  std::vector<double> q;
};

Strategy ReadStrategy(const RunConfig& config) {
  std::ifstream in(config.eval.strategy);
  json j;
  try {
    j = json::parse(in);
    Strategy s{j.at("p").get<std::vector<double>>(), j.at("q").get<std::vector<double>>()};
    if (s.p.size() != config.game.attacks.size() ||
        s.q.size() != config.game.detectors.size()) {
      throw ConfigError("strategy file does not match the configured attacks/detectors");
    }
    return s;
  } catch (const json::exception& e) {
    throw ConfigError("bad strategy file: " + std::string(e.what()));
  }
}

int EvalCommand(const RunConfig& config, const std::string& preset) {
  const EvalConfig& ev = config.eval;
  const bool needs_strategy =
      ev.mode == "deployment" || (ev.mode == "curve" && ev.curve_defender == "ensemble");
  if (needs_strategy && ev.strategy.empty()) {
    throw ConfigError("eval " + ev.mode + " needs --strategy");
  }
  std::optional<Strategy> strategy;
  if (!ev.strategy.empty()) strategy = ReadStrategy(config);

  ReviewGraph graph = LoadGraph(config);
  AttackResources resources = Resources(graph, config);
  fs::create_directories(config.out);
  WriteManifest(config, "eval", preset);
  const fs::path base = fs::path(config.out);
  const std::string stem = Stem(config);

  if (ev.mode == "matrix") {
    WorstCaseMatrix m = ComputeWorstCaseMatrix(graph, resources, config.game, config.seed);
    std::ofstream out(base / ("matrix_" + stem + ".csv"));
    WriteMatrixCsv(m, out);
    json summary = {{"best_worst_case", m.BestWorstCase()}};
    if (strategy) {
      summary["trained"] = EvaluateDefender(graph, resources, config.game, strategy->p,
                                            strategy->q, 1, config.seed);
    }
    std::ofstream(base / ("matrix_" + stem + ".json")) << summary.dump(2) << '\n';
    std::cout << summary.dump() << '\n';
  } else if (ev.mode == "curve") {
    std::vector<double> p = strategy ? strategy->p : InitialP(config.game);
    std::vector<double> q;
    if (ev.curve_defender == "ensemble") {
      q = strategy->q;
    } else {
      DetectorKind kind = ParseDetector(ev.curve_defender);
      q.assign(config.game.detectors.size(), 0.0);
      for (std::size_t l = 0; l < q.size(); ++l) {
        if (config.game.detectors[l] == kind) q[l] = 1.0;
      }
    }
    auto curve = PeRecallCurve(graph, resources, config.game, p, q, ev.thresholds,
                               config.seed);
    std::ofstream out(base / ("curve_" + stem + ".csv"));
    WriteCurveCsv(curve, out);
    std::cout << "wrote " << curve.size() << " curve points\n";
  } else if (ev.mode == "deployment") {
    AttackResources fresh = Resources(graph, config, resources.elite_controlled);
    fresh.targets = resources.targets;
    auto defenders = DeploymentDefenders(strategy->q, config.game.detectors);
    auto rows = DeploymentTest(graph, fresh, config.game, defenders, ev.trials, config.seed);
    std::ofstream out(base / ("deployment_" + stem + ".csv"));
    WriteDeploymentCsv(rows, out);
    for (const auto& r : rows) {
      std::cout << r.name << " mean " << r.mean << " stdev " << r.stdev << '\n';
    }
  } else {
    SweepAxis axis = ParseSweepAxis(ev.axis);
    auto rows = SensitivitySweep(axis, ev.values, graph, config.resources, config.game);
    json out = json::array();
    for (const auto& r : rows) out.push_back(ToJson(r));
    std::ofstream(base / ("sweep_" + stem + ".json")) << out.dump(2) << '\n';
    std::cout << "wrote " << rows.size() << " sweep rows\n";
  }
  return 0;
}

}  // namespace
}  // namespace spamgame

int main(int argc, char** argv) {
  using namespace spamgame;
  CLI::App app{"Spam campaign / detector ensemble game simulator"};
  app.require_subcommand(1);
  Options opt;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", opt.config_path, "JSON run configuration");
    cmd->add_option("--preset", opt.preset, "desk | yelpchi-scale")
        ->check(CLI::IsMember(PresetNames()));
    cmd->add_option("--seed", opt.seed, "run seed (graph and game)");
    cmd->add_option("--out", opt.out, "output directory");
  };
  CLI::App* gen = app.add_subcommand("generate", "write a synthetic dataset");
  CLI::App* train = app.add_subcommand("train", "train (p*, q*)");
  CLI::App* eval = app.add_subcommand("eval", "run an evaluation");
  add_common(gen);
  add_common(train);
  add_common(eval);
  eval->add_option("--strategy", opt.strategy, "strategy file written by train");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    RunConfig config = LoadConfig(opt);
    if (*gen) return Generate(config, opt.preset);
    if (*train) return TrainCommand(config, opt.preset);
    return EvalCommand(config, opt.preset);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

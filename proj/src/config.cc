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

#include "spamgame/config.h"

#include <set>
#include <sstream>
#include <stdexcept>

#include "spamgame/eval.h"

namespace spamgame {
namespace {

// Reads fields of one JSON object and rejects keys nobody asked for.
class Reader {
 public:
  Reader(const nlohmann::json& j, std::string block) : j_(j), block_(std::move(block)) {
    if (!j_.is_object()) throw ConfigError(block_ + " must be a JSON object");
  }

  template <typename T>
  void Get(const std::string& key, T& out) {
    known_.insert(key);
    if (!j_.contains(key)) return;
    try {
      out = j_.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(block_ + "." + key + ": " + e.what());
    }
  }

  const nlohmann::json* Child(const std::string& key) {
    known_.insert(key);
    return j_.contains(key) ? &j_.at(key) : nullptr;
  }

  void Finish() const {
    for (const auto& [key, value] : j_.items()) {
      if (!known_.contains(key)) throw ConfigError("unknown field " + block_ + "." + key);
    }
  }

 private:
  const nlohmann::json& j_;
  std::string block_;
  std::set<std::string> known_;
};

std::string ModeName(EconMode mode) {
  return mode == EconMode::kPromotion ? "promotion" : "demotion";
}

EconMode ParseMode(const std::string& s) {
  if (s == "promotion") return EconMode::kPromotion;
  if (s == "demotion") return EconMode::kDemotion;
  throw ConfigError("econ.mode must be promotion or demotion, got " + s);
}

template <typename Fn>
auto Wrap(Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
}

}  // namespace

nlohmann::json ToJson(const GameConfig& c) {
  std::vector<std::string> attacks, detectors;
  for (AttackKind k : c.attacks) attacks.emplace_back(AttackName(k));
  for (DetectorKind k : c.detectors) detectors.emplace_back(DetectorName(k));
  const DetectorConfig& d = c.detector;
  return {{"episodes", c.episodes},
          {"eta", c.eta},
          {"epsilon", c.epsilon},
          {"q_learning_rate", c.q_learning_rate},
          {"q_steps", c.q_steps},
          {"top_k_percent", c.top_k_percent},
          {"early_stop", c.early_stop},
          {"tolerance", c.tolerance},
          {"patience", c.patience},
          {"attacks", attacks},
          {"detectors", detectors},
          {"p0", c.p0},
          {"q0", c.q0},
          {"cross_target_updates", c.cross_target_updates},
          {"econ",
           {{"beta0", c.econ.beta0},
            {"beta1", c.econ.beta1},
            {"alpha", c.econ.alpha},
            {"elite_threshold", c.econ.elite_threshold},
            {"mode", ModeName(c.econ.mode)}}},
          {"detector",
           {{"burst_window_days", d.prior.burst_window_days},
            {"linbp_max_iterations", d.linbp.max_iterations},
            {"linbp_tolerance", d.linbp.tolerance},
            {"speagle_max_iterations", d.speagle.bp.max_iterations},
            {"speagle_tolerance", d.speagle.bp.tolerance},
            {"speagle_damping", d.speagle.bp.damping},
            {"speagle_disagreement", d.speagle.disagreement},
            {"fbox_tau_percent", d.fbox.tau_percent},
            {"fbox_rank_k", d.fbox.rank_k},
            {"fraudar_max_blocks", d.fraudar.max_blocks},
            {"parallel", d.parallel}}}};
}

GameConfig GameConfigFromJson(const nlohmann::json& j, const GameConfig& base) {
  GameConfig c = base;
  Reader r(j, "game");
  r.Get("episodes", c.episodes);
  r.Get("eta", c.eta);
  r.Get("epsilon", c.epsilon);
  r.Get("q_learning_rate", c.q_learning_rate);
  r.Get("q_steps", c.q_steps);
  r.Get("top_k_percent", c.top_k_percent);
  r.Get("early_stop", c.early_stop);
  r.Get("tolerance", c.tolerance);
  r.Get("patience", c.patience);
  r.Get("p0", c.p0);
  r.Get("q0", c.q0);
  r.Get("cross_target_updates", c.cross_target_updates);
  std::vector<std::string> names;
  if (r.Child("attacks")) {
    names.clear();
    r.Get("attacks", names);
    c.attacks.clear();
    for (const auto& n : names) c.attacks.push_back(Wrap([&] { return ParseAttack(n); }));
  }
  if (r.Child("detectors")) {
    names.clear();
    r.Get("detectors", names);
    c.detectors.clear();
    for (const auto& n : names) {
      c.detectors.push_back(Wrap([&] { return ParseDetector(n); }));
    }
  }
  if (const nlohmann::json* e = r.Child("econ")) {
    Reader er(*e, "game.econ");
    er.Get("beta0", c.econ.beta0);
    er.Get("beta1", c.econ.beta1);
    er.Get("alpha", c.econ.alpha);
    er.Get("elite_threshold", c.econ.elite_threshold);
    std::string mode = ModeName(c.econ.mode);
    er.Get("mode", mode);
    c.econ.mode = ParseMode(mode);
    er.Finish();
  }
  if (const nlohmann::json* d = r.Child("detector")) {
    Reader dr(*d, "game.detector");
    DetectorConfig& dc = c.detector;
    dr.Get("burst_window_days", dc.prior.burst_window_days);
    dr.Get("linbp_max_iterations", dc.linbp.max_iterations);
    dr.Get("linbp_tolerance", dc.linbp.tolerance);
    dr.Get("speagle_max_iterations", dc.speagle.bp.max_iterations);
    dr.Get("speagle_tolerance", dc.speagle.bp.tolerance);
    dr.Get("speagle_damping", dc.speagle.bp.damping);
    dr.Get("speagle_disagreement", dc.speagle.disagreement);
    dr.Get("fbox_tau_percent", dc.fbox.tau_percent);
    dr.Get("fbox_rank_k", dc.fbox.rank_k);
    dr.Get("fraudar_max_blocks", dc.fraudar.max_blocks);
    dr.Get("parallel", dc.parallel);
    dr.Finish();
  }
  r.Finish();
  Wrap([&] { Validate(c); return 0; });
  return c;
}

nlohmann::json ToJson(const ResourceConfig& c) {
  return {{"n_elite", c.n_elite},
          {"n_targets", c.n_targets},
          {"spams_per_target", c.spams_per_target},
          {"singleton_pool", c.singleton_pool},
          {"camouflage", CamouflageName(c.camouflage)}};
}

ResourceConfig ResourceConfigFromJson(const nlohmann::json& j, const ResourceConfig& base) {
  ResourceConfig c = base;
  Reader r(j, "resources");
  r.Get("n_elite", c.n_elite);
  r.Get("n_targets", c.n_targets);
  r.Get("spams_per_target", c.spams_per_target);
  r.Get("singleton_pool", c.singleton_pool);
  std::string camo(CamouflageName(c.camouflage));
  r.Get("camouflage", camo);
  c.camouflage = Wrap([&] { return ParseCamouflage(camo); });
  r.Finish();
  if (c.n_elite < 1 || c.n_targets < 1 || c.spams_per_target < 1 || c.singleton_pool < 0) {
    throw ConfigError("resources: counts must be positive");
  }
  return c;
}

nlohmann::json ToJson(const RunConfig& c) {
  return {{"dataset", c.dataset},
          {"generator", ToJson(c.generator)},
          {"resources", ToJson(c.resources)},
          {"game", ToJson(c.game)},
          {"eval",
           {{"mode", c.eval.mode},
            {"thresholds", c.eval.thresholds},
            {"curve_defender", c.eval.curve_defender},
            {"trials", c.eval.trials},
            {"axis", c.eval.axis},
            {"values", c.eval.values},
            {"strategy", c.eval.strategy}}},
          {"seed", c.seed},
          {"out", c.out}};
}

RunConfig RunConfigFromJson(const nlohmann::json& j, const RunConfig& base) {
  RunConfig c = base;
  Reader r(j, "config");
  r.Get("dataset", c.dataset);
  r.Get("seed", c.seed);
  r.Get("out", c.out);
  if (const nlohmann::json* g = r.Child("generator")) {
    nlohmann::json merged = ToJson(c.generator);
    merged.merge_patch(*g);
    c.generator = GeneratorConfigFromJson(merged);
  }
  if (const nlohmann::json* res = r.Child("resources")) {
    c.resources = ResourceConfigFromJson(*res, c.resources);
  }
  if (const nlohmann::json* g = r.Child("game")) c.game = GameConfigFromJson(*g, c.game);
  if (const nlohmann::json* e = r.Child("eval")) {
    Reader er(*e, "eval");
    er.Get("mode", c.eval.mode);
    er.Get("thresholds", c.eval.thresholds);
    er.Get("curve_defender", c.eval.curve_defender);
    er.Get("trials", c.eval.trials);
    er.Get("axis", c.eval.axis);
    er.Get("values", c.eval.values);
    er.Get("strategy", c.eval.strategy);
    er.Finish();
  }
  r.Finish();
  ApplySeed(c, c.seed);
  ValidateRunConfig(c);
  return c;
}

void ApplySeed(RunConfig& config, std::uint64_t seed) {
  config.seed = seed;
  config.generator.seed = seed;
  config.game.seed = seed;
}

void ValidateRunConfig(const RunConfig& c) {
  static const std::set<std::string> kModes = {"matrix", "curve", "deployment", "sweep"};
  if (!kModes.contains(c.eval.mode)) throw ConfigError("eval.mode: unknown " + c.eval.mode);
  if (c.eval.trials < 1) throw ConfigError("eval.trials must be >= 1");
  for (std::size_t i = 1; i < c.eval.thresholds.size(); ++i) {
    if (c.eval.thresholds[i] > c.eval.thresholds[i - 1]) {
      throw ConfigError("eval.thresholds must be descending");
    }
  }
  for (double t : c.eval.thresholds) {
    if (!(t >= 0.0 && t <= 100.0)) throw ConfigError("eval.thresholds must be in [0,100]");
  }
  Wrap([&] { ParseSweepAxis(c.eval.axis); return 0; });
  if (c.eval.curve_defender != "ensemble") {
    Wrap([&] { return ParseDetector(c.eval.curve_defender); });
  }
  Wrap([&] { Validate(c.game); return 0; });
  if (c.out.empty()) throw ConfigError("out must not be empty");
}

RunConfig Preset(std::string_view name) {
  RunConfig c;
  if (name == "desk") {
    c.generator.n_accounts = 5000;
    c.generator.n_products = 200;
    c.generator.n_reviews = 50000;
    c.generator.elite_fraction = 0.06;
    c.generator.regular_degree_exponent = 0.5;
    c.resources = ResourceConfig{100, 30, 15, 450, Camouflage::kWeak};
  } else if (name == "yelpchi-scale") {
    c.generator.n_accounts = 38063;
    c.generator.n_products = 201;
    c.generator.n_reviews = 67395;
    c.generator.elite_fraction = 0.014;
    c.resources = ResourceConfig{100, 30, 15, 450, Camouflage::kWeak};
  } else {
    throw ConfigError("unknown preset: " + std::string(name));
  }
  c.eval.thresholds = {100, 95, 90, 85, 80, 75, 70, 65, 60, 55,
                       50,  45, 40, 35, 30, 25, 20, 15, 10, 0};
  return c;
}

std::vector<std::string> PresetNames() { return {"desk", "yelpchi-scale"}; }

std::string ConfigHash(const nlohmann::json& j) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : j.dump()) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << h;
  return out.str();
}

}  // namespace spamgame

#include "sbpg/harness/config.hpp"

#include <cmath>
#include <fstream>

#include "sbpg/core/errors.hpp"

namespace sbpg::harness {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

void apply_learner_fields(LearnerConfig& c, const json& j) {
  if (j.contains("alpha")) c.alpha = j.at("alpha").get<double>();
  if (j.contains("beta")) c.beta = j.at("beta").get<double>();
  if (j.contains("ou_enabled")) c.ou_enabled = j.at("ou_enabled").get<bool>();
  if (j.contains("ou")) {
    const auto& o = j.at("ou");
    if (o.contains("theta")) c.ou.theta = o.at("theta").get<double>();
    if (o.contains("mu")) c.ou.mu = o.at("mu").get<double>();
    if (o.contains("sigma")) c.ou.sigma = o.at("sigma").get<double>();
    if (o.contains("clip")) c.ou.clip = o.at("clip").get<double>();
  }
  if (j.contains("epsilon_eq")) c.epsilon_eq = j.at("epsilon_eq").get<double>();
  if (j.contains("stack_depth")) c.stack_depth = j.at("stack_depth").get<std::size_t>();
  if (j.contains("gradient_clip")) c.gradient_clip = j.at("gradient_clip").get<double>();
  if (j.contains("explore_start")) c.explore_start = j.at("explore_start").get<double>();
  if (j.contains("explore_end")) c.explore_end = j.at("explore_end").get<double>();
}

LearnerConfig resolve_learner(const json& block, const ConfigOverrides& o) {
  LearnerVariant variant = LearnerVariant::best_response;
  if (block.contains("variant")) variant = parse_variant(block.at("variant").get<std::string>());
  if (o.variant) variant = *o.variant;
  std::size_t kickoff = block.value("kickoff_episodes", std::size_t{0});
  if (o.kickoff) kickoff = *o.kickoff;

  LearnerConfig c = preset(variant, kickoff);
  apply_learner_fields(c, block);
  if (variant == LearnerVariant::best_response) c.kickoff_episodes = 0;
  return c;
}

}  // namespace

std::size_t ExperimentConfig::steps_per_episode() const {
  return static_cast<std::size_t>(std::llround(episode_duration / cycle_time));
}

void ExperimentConfig::validate() const {
  plant.validate();
  learner.validate();
  if (episodes == 0) throw ConfigError("episodes must be > 0");
  if (!(cycle_time > 0.0) || !(episode_duration > 0.0))
    throw ConfigError("episode_duration and cycle_time must be > 0");
  const double steps = episode_duration / cycle_time;
  if (std::abs(steps - std::round(steps)) > 1e-9 * steps || std::round(steps) < 1.0)
    throw ConfigError("episode_duration must be a whole multiple of cycle_time");
  if (grid_resolution < 2) throw ConfigError("grid_resolution must be >= 2");
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw ConfigError("gamma must be >= 0");
  if (players.size() != plant.players())
    throw ConfigError("one learner configuration per player required");
  for (const auto& p : players) {
    p.validate();
    if (p.kickoff_episodes > episodes) throw ConfigError("kick-off episodes exceed the episode budget");
  }
}

json read_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("file not found: " + path.string());
  try {
    json j;
    in >> j;
    return j;
  } catch (const json::exception& e) {
    throw ConfigError(path.string() + ": " + e.what());
  }
}

ExperimentConfig resolve_experiment(const json& raw, const fs::path& base_dir,
                                    const ConfigOverrides& overrides) {
  try {
    ExperimentConfig c;
    const auto& p = raw.at("plant");
    if (p.is_string()) {
      fs::path plant_path = p.get<std::string>();
      if (plant_path.is_relative()) plant_path = base_dir / plant_path;
      c.plant = plant::load_plant_spec(plant_path.string());
    } else {
      c.plant = plant::plant_spec_from_json(p);
    }

    const json learner_block = raw.value("learner", json::object());
    c.learner = resolve_learner(learner_block, overrides);

    c.episodes = raw.value("episodes", c.episodes);
    c.episode_duration = raw.value("episode_duration", c.episode_duration);
    c.cycle_time = raw.value("cycle_time", c.plant.dt);
    c.grid_resolution = raw.value("grid_resolution", c.grid_resolution);
    c.gamma = raw.value("gamma", c.gamma);
    c.seed = raw.value("seed", c.seed);
    c.output_dir = raw.value("output_dir", c.output_dir);
    c.record_wall_clock = raw.value("record_wall_clock", c.record_wall_clock);
    if (overrides.episodes) c.episodes = *overrides.episodes;
    if (overrides.seed) c.seed = *overrides.seed;
    if (overrides.output_dir) c.output_dir = *overrides.output_dir;

    c.player_overrides = raw.value("player_overrides", json::object());
    c.players.assign(c.plant.players(), c.learner);
    for (const auto& [key, block] : c.player_overrides.items()) {
      std::size_t idx = 0;
      try {
        idx = std::stoul(key);
      } catch (const std::logic_error&) {
        throw ConfigError("player_overrides key '" + key + "' is not a player index");
      }
      if (idx == 0 || idx > c.players.size())
        throw ConfigError("player_overrides key '" + key + "' out of range (players are 1-based)");
      if (block.contains("variant") || block.contains("kickoff_episodes"))
        throw ConfigError("player_overrides may only tune hyperparameters, not variant or kick-off");
      apply_learner_fields(c.players[idx - 1], block);
    }
    c.validate();
    return c;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("experiment config: ") + e.what());
  }
}

ExperimentConfig load_experiment(const fs::path& path, const ConfigOverrides& overrides) {
  return resolve_experiment(read_json_file(path), path.parent_path(), overrides);
}

json to_json(const LearnerConfig& l) {
  return {{"variant", std::string(to_string(l.variant))},
          {"alpha", l.alpha},
          {"beta", l.beta},
          {"kickoff_episodes", l.kickoff_episodes},
          {"ou_enabled", l.ou_enabled},
          {"ou", {{"theta", l.ou.theta}, {"mu", l.ou.mu}, {"sigma", l.ou.sigma}, {"clip", l.ou.clip}}},
          {"epsilon_eq", l.epsilon_eq},
          {"stack_depth", l.stack_depth},
          {"gradient_clip", l.gradient_clip},
          {"explore_start", l.explore_start},
          {"explore_end", l.explore_end}};
}

json to_json(const ExperimentConfig& c) {
  return {{"plant", plant::to_json(c.plant)},
          {"learner", to_json(c.learner)},
          {"player_overrides", c.player_overrides},
          {"episodes", c.episodes},
          {"episode_duration", c.episode_duration},
          {"cycle_time", c.cycle_time},
          {"grid_resolution", c.grid_resolution},
          {"gamma", c.gamma},
          {"seed", c.seed},
          {"output_dir", c.output_dir},
          {"record_wall_clock", c.record_wall_clock}};
}

}  // namespace sbpg::harness

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sbpg/learn/learner.hpp"
#include "sbpg/plant/plant_spec.hpp"

namespace sbpg::harness {

/// Fully resolved experiment.
struct ExperimentConfig {
  plant::PlantSpec plant;
  LearnerConfig learner;                 ///< shared by all players
  std::vector<LearnerConfig> players;    ///< per-player resolved (overrides applied)
  nlohmann::json player_overrides = nlohmann::json::object();
  std::size_t episodes = 20;
  double episode_duration = 10000.0;     ///< seconds
  double cycle_time = 10.0;              ///< seconds
  std::size_t grid_resolution = 40;
  double gamma = 1e-3;
  std::uint64_t seed = 1;
  std::string output_dir = "runs/default";
  bool record_wall_clock = false;

  std::size_t steps_per_episode() const;
  std::size_t training_interactions() const { return episodes * steps_per_episode(); }
  void validate() const;
};

/// Command-line overrides applied on top of a config file.
struct ConfigOverrides {
  std::optional<LearnerVariant> variant;
  std::optional<std::size_t> kickoff;
  std::optional<std::size_t> episodes;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> output_dir;
};

/// Resolves a raw experiment document. `base_dir` anchors a relative plant
/// path. Learner fields absent from the document take the preset of the
/// chosen variant.
ExperimentConfig resolve_experiment(const nlohmann::json& raw,
                                    const std::filesystem::path& base_dir,
                                    const ConfigOverrides& overrides = {});

ExperimentConfig load_experiment(const std::filesystem::path& path,
                                 const ConfigOverrides& overrides = {});

nlohmann::json read_json_file(const std::filesystem::path& path);

/// Self-contained snapshot (plant inlined, learner fields explicit) that
/// resolves back to the same experiment.
nlohmann::json to_json(const ExperimentConfig& config);

nlohmann::json to_json(const LearnerConfig& learner);

}  // namespace sbpg::harness

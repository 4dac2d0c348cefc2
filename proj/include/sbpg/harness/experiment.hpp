#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "sbpg/game/grid.hpp"
#include "sbpg/game/maps.hpp"
#include "sbpg/harness/config.hpp"
#include "sbpg/harness/environment.hpp"
#include "sbpg/harness/metrics.hpp"

namespace sbpg::harness {

/// Final performance maps of all players on a shared grid.
struct TrainedPolicies {
  std::shared_ptr<const SupportGrid> grid;
  std::vector<PolicyTable> tables;
  double gamma = 0.0;
};

struct TrainingResult {
  TrainedPolicies policies;
  std::vector<EpisodeMetrics> episodes;
  std::size_t steps_per_episode = 0;
  double max_mass_residual_l = 0.0;
};

/// Optional per-step hook: (episode, step, actions). Used by tests to record
/// action traces.
using StepObserver =
    std::function<void(std::size_t, std::size_t, std::span<const ActionValue>)>;

/// Trains one learner per player on `env` following each player's schedule.
/// Every control step all players observe the pre-step state, act, and learn
/// from their own utility.
TrainingResult run_training(const ExperimentConfig& config, Environment& env,
                            const StepObserver& observer = {});

/// Plant experiment built from config.plant.
TrainingResult run_training(const ExperimentConfig& config);

/// One pure exploitation episode: interpolated actions, no noise, no
/// updates. Throws PolicyNotReady if any player's map is empty.
EpisodeMetrics run_test(const ExperimentConfig& config, const TrainedPolicies& policies,
                        Environment& env, const StepObserver& observer = {});

EpisodeMetrics run_test(const ExperimentConfig& config, const TrainedPolicies& policies);

/// Everything a finished train+test run produces.
struct RunArtifacts {
  ExperimentConfig config;
  TrainingResult training;
  EpisodeMetrics test;
  std::string method_label() const;
};

RunArtifacts run_experiment(const ExperimentConfig& config);

}  // namespace sbpg::harness

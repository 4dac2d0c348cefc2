#pragma once

#include <cstddef>

namespace sbpg {

enum class EpisodePhase {
  random_kickoff,  ///< uniform random actions seeding the sample stacks
  learning,        ///< method-specific exploration mixed with exploitation
};

/// Episode budget with optional kick-off episodes. After the kick-off the
/// exploration rate decays linearly from `explore_start` (first learning
/// episode) to `explore_end` (final training episode).
struct TrainingSchedule {
  std::size_t total_episodes = 20;
  std::size_t kickoff_episodes = 0;
  double explore_start = 1.0;
  double explore_end = 0.0;

  void validate() const;

  EpisodePhase phase(std::size_t episode) const;

  /// Probability that a player explores on a control step of this training
  /// episode. 1 during kick-off.
  double exploration_rate(std::size_t episode) const;
};

}  // namespace sbpg

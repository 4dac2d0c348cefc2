#include "sbpg/learn/schedule.hpp"

#include "sbpg/core/errors.hpp"

namespace sbpg {

void TrainingSchedule::validate() const {
  if (total_episodes == 0) throw ConfigError("episode budget must be positive");
  if (kickoff_episodes > total_episodes)
    throw ConfigError("kick-off episodes exceed the episode budget");
  if (!(explore_start >= 0.0 && explore_start <= 1.0 && explore_end >= 0.0 &&
        explore_end <= explore_start))
    throw ConfigError("exploration rates must satisfy 0 <= end <= start <= 1");
}

EpisodePhase TrainingSchedule::phase(std::size_t episode) const {
  if (episode >= total_episodes) throw ConfigError("episode index beyond the training budget");
  return episode < kickoff_episodes ? EpisodePhase::random_kickoff : EpisodePhase::learning;
}

double TrainingSchedule::exploration_rate(std::size_t episode) const {
  if (phase(episode) == EpisodePhase::random_kickoff) return 1.0;
  const std::size_t first = kickoff_episodes;
  const std::size_t last = total_episodes - 1;
  if (last == first) return explore_start;
  const double t = static_cast<double>(episode - first) / static_cast<double>(last - first);
  return explore_start + t * (explore_end - explore_start);
}

}  // namespace sbpg

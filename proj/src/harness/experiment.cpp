#include "sbpg/harness/experiment.hpp"

#include <chrono>

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "sbpg/core/errors.hpp"
#include "sbpg/game/interpolation.hpp"
#include "sbpg/harness/seeding.hpp"
#include "sbpg/learn/schedule.hpp"

namespace sbpg::harness {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

TrainingSchedule schedule_for(const ExperimentConfig& config, const LearnerConfig& learner) {
  TrainingSchedule s;
  s.total_episodes = config.episodes;
  s.kickoff_episodes = learner.kickoff_episodes;
  s.explore_start = learner.explore_start;
  s.explore_end = learner.explore_end;
  s.validate();
  return s;
}

}  // namespace

TrainingResult run_training(const ExperimentConfig& config, Environment& env,
                            const StepObserver& observer) {
  config.learner.validate();
  if (config.players.size() != env.players())
    throw ConfigError("learner count does not match the environment's players");

  auto grid = std::make_shared<const SupportGrid>(config.grid_resolution, env.state_dimension());
  const std::size_t n = env.players();
  const std::size_t steps = config.steps_per_episode();

  std::vector<PlayerLearner> learners;
  std::vector<TrainingSchedule> schedules;
  learners.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    learners.emplace_back(config.players[i], *grid, config.gamma, derive_seed(config.seed, i + 1));
    schedules.push_back(schedule_for(config, config.players[i]));
  }

  TrainingResult result;
  result.steps_per_episode = steps;
  std::vector<StateVector> states(n);
  std::vector<ActionValue> actions(n);

  for (std::size_t e = 0; e < config.episodes; ++e) {
    const auto start = Clock::now();
    env.reset();
    for (auto& l : learners) l.begin_episode();

    std::vector<StepMode> base(n);
    std::vector<double> rates(n);
    for (std::size_t i = 0; i < n; ++i) {
      base[i] = schedules[i].phase(e) == EpisodePhase::random_kickoff ? StepMode::kickoff
                                                                      : StepMode::explore;
      rates[i] = schedules[i].exploration_rate(e);
    }

    MetricsAccumulator acc;
    for (std::size_t t = 0; t < steps; ++t) {
      for (std::size_t i = 0; i < n; ++i) states[i] = env.observe(i);
      for (std::size_t i = 0; i < n; ++i) {
        StepMode mode = base[i];
        if (mode == StepMode::explore && !learners[i].draw_explore(rates[i]) &&
            (learners[i].best_response_map() ? learners[i].best_response_map()->visited_count()
                                             : learners[i].gradient_map()->visited_count()) > 0) {
          mode = StepMode::exploit;
        }
        actions[i] = learners[i].select(states[i], mode);
      }
      const StepReport report = env.step(actions);
      for (std::size_t i = 0; i < n; ++i) learners[i].observe(report.utilities[i]);
      acc.add(report);
      if (observer) observer(e, t, actions);
    }
    EpisodeMetrics m = acc.finish(env.cycle_time());
    if (config.record_wall_clock) m.wall_clock_s = seconds_since(start);
    result.max_mass_residual_l = std::max(result.max_mass_residual_l, acc.max_mass_residual());
    spdlog::info("episode {:>3}: overflow {:.4f} L/s  power {:.4f} kW  shortfall {:.4f} L/s  potential {:.4f}",
                 e, m.overflow_lps, m.power_kws, m.demand_shortfall_lps, m.potential);
    result.episodes.push_back(m);
  }

  result.policies.grid = grid;
  result.policies.gamma = config.gamma;
  for (const auto& l : learners) result.policies.tables.push_back(l.policy());
  return result;
}

TrainingResult run_training(const ExperimentConfig& config) {
  PlantEnvironment env(config.plant, config.cycle_time);
  return run_training(config, env);
}

EpisodeMetrics run_test(const ExperimentConfig& config, const TrainedPolicies& policies,
                        Environment& env, const StepObserver& observer) {
  const std::size_t n = env.players();
  if (policies.tables.size() != n) throw ConfigError("one performance map per player required");
  for (std::size_t i = 0; i < n; ++i) {
    if (policies.tables[i].empty())
      throw PolicyNotReady(fmt::format("player {} has an empty performance map", i + 1));
  }
  const auto start = Clock::now();
  env.reset();
  std::vector<ActionValue> actions(n);
  MetricsAccumulator acc;
  const std::size_t steps = config.steps_per_episode();
  for (std::size_t t = 0; t < steps; ++t) {
    for (std::size_t i = 0; i < n; ++i)
      actions[i] = interpolate_action(policies.tables[i], env.observe(i), policies.gamma);
    acc.add(env.step(actions));
    if (observer) observer(0, t, actions);
  }
  EpisodeMetrics m = acc.finish(env.cycle_time());
  if (config.record_wall_clock) m.wall_clock_s = seconds_since(start);
  return m;
}

EpisodeMetrics run_test(const ExperimentConfig& config, const TrainedPolicies& policies) {
  PlantEnvironment env(config.plant, config.cycle_time);
  return run_test(config, policies, env);
}

std::string RunArtifacts::method_label() const {
  return std::string(to_string(config.learner.variant));
}

RunArtifacts run_experiment(const ExperimentConfig& config) {
  RunArtifacts run{config, run_training(config), {}};
  run.test = run_test(config, run.training.policies);
  return run;
}

}  // namespace sbpg::harness

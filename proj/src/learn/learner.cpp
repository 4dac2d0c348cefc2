#include "sbpg/learn/learner.hpp"

#include <cmath>
#include <string>

#include "sbpg/core/errors.hpp"
#include "sbpg/game/interpolation.hpp"

namespace sbpg {

std::string_view to_string(LearnerVariant v) {
  switch (v) {
    case LearnerVariant::best_response: return "best-response";
    case LearnerVariant::basic: return "grad1";
    case LearnerVariant::momentum: return "grad2";
    case LearnerVariant::polynomial: return "grad3";
  }
  return "unknown";
}

LearnerVariant parse_variant(std::string_view name) {
  if (name == "best-response") return LearnerVariant::best_response;
  if (name == "grad1") return LearnerVariant::basic;
  if (name == "grad2") return LearnerVariant::momentum;
  if (name == "grad3") return LearnerVariant::polynomial;
  throw ConfigError("unknown learner '" + std::string(name) +
                    "' (expected best-response|grad1|grad2|grad3)");
}

void LearnerConfig::validate() const {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw ConfigError("alpha must be > 0");
  if (!(beta >= 0.0 && beta < 1.0)) throw ConfigError("beta must be in [0,1)");
  if (!(epsilon_eq >= 0.0)) throw ConfigError("epsilon_eq must be >= 0");
  if (stack_depth < 2) throw ConfigError("stack_depth must be >= 2");
  if (!(gradient_clip > 0.0)) throw ConfigError("gradient_clip must be > 0");
  if (!(explore_start >= 0.0 && explore_start <= 1.0 && explore_end >= 0.0 &&
        explore_end <= explore_start))
    throw ConfigError("exploration rates must satisfy 0 <= end <= start <= 1");
  ou.validate();
}

LearnerConfig preset(LearnerVariant variant, std::size_t kickoff_episodes) {
  LearnerConfig c;
  c.variant = variant;
  c.kickoff_episodes = kickoff_episodes;
  switch (variant) {
    case LearnerVariant::best_response:
      c.kickoff_episodes = 0;
      break;
    case LearnerVariant::basic:
      c.alpha = 1.0;
      c.ou_enabled = kickoff_episodes == 0;
      break;
    case LearnerVariant::momentum:
      c.alpha = 0.25;
      c.beta = 0.6;
      break;
    case LearnerVariant::polynomial:
      c.alpha = 0.5;
      break;
  }
  return c;
}

ActionValue explore_random(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  return ActionValue::clamped(unit(rng));
}

PlayerLearner::PlayerLearner(const LearnerConfig& config, const SupportGrid& grid, double gamma,
                             std::uint64_t seed)
    : config_(config), grid_(&grid), gamma_(gamma), rng_(seed), noise_(config.ou) {
  config_.validate();
  if (!(gamma >= 0.0)) throw ConfigError("gamma must be >= 0");
  if (config_.variant == LearnerVariant::best_response) {
    br_.emplace(grid);
  } else {
    grad_.emplace(grid, config_.stack_depth);
    if (config_.variant == LearnerVariant::momentum) momentum_.emplace(grid.cell_count(), config_.beta);
  }
}

void PlayerLearner::begin_episode() {
  noise_.reset();
  pending_.reset();
}

bool PlayerLearner::draw_explore(double rate) {
  if (rate >= 1.0) return true;
  if (rate <= 0.0) return false;
  return unit_(rng_) < rate;
}

double PlayerLearner::estimate_gradient(CellIndex cell) {
  const auto stack = grad_->samples(cell);
  if (stack.size() < 2) return 0.0;
  double raw = 0.0;
  if (config_.variant == LearnerVariant::polynomial) {
    raw = gradient_polynomial(stack, config_.epsilon_eq);
  } else {
    const auto& prev = stack[stack.size() - 2];
    const auto& curr = stack[stack.size() - 1];
    raw = gradient_basic(prev.action, prev.utility, curr.action, curr.utility, config_.epsilon_eq);
  }
  raw = clamp_gradient(raw, config_.gradient_clip);
  if (momentum_) return momentum_->apply(cell, raw);
  return raw;
}

ActionValue PlayerLearner::select(const StateVector& state, StepMode mode) {
  const CellIndex cell = grid_->locate(state);
  ActionValue action;
  switch (mode) {
    case StepMode::kickoff:
      action = explore_random(rng_);
      break;
    case StepMode::explore:
      if (br_) {
        action = explore_random(rng_);
      } else {
        const double grad = estimate_gradient(cell);
        const double noise = config_.ou_enabled ? noise_.step(rng_) : 0.0;
        action = gradient_action_update(grad_->latest(cell).action, grad, config_.alpha, noise);
      }
      break;
    case StepMode::exploit:
      action = interpolate_action(cached_policy(), state, gamma_);
      break;
  }
  pending_ = Pending{cell, action.value(), mode};
  return action;
}

void PlayerLearner::observe(double utility) {
  if (!pending_) return;
  const Pending p = *pending_;
  pending_.reset();
  if (p.mode == StepMode::exploit) return;

  const auto action = ActionValue::clamped(p.action);
  bool changed = false;
  if (br_) {
    changed = br_->update(p.cell, action, utility);
  } else if (p.mode == StepMode::kickoff) {
    changed = grad_->seed(p.cell, action, utility);
  } else {
    changed = grad_->push(p.cell, action, utility);
  }
  if (changed) policy_cache_.reset();
}

const PolicyTable& PlayerLearner::cached_policy() {
  if (!policy_cache_) policy_cache_.emplace(policy());
  return *policy_cache_;
}

PolicyTable PlayerLearner::policy() const { return br_ ? br_->policy() : grad_->policy(); }

}  // namespace sbpg

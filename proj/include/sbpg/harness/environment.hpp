#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "sbpg/game/reference_game.hpp"
#include "sbpg/game/state.hpp"
#include "sbpg/plant/plant.hpp"

namespace sbpg::harness {

/// Result of one joint control step as seen by the harness.
struct StepReport {
  std::vector<double> utilities;
  double overflow_l = 0.0;
  double power_kw = 0.0;
  double shortfall_l = 0.0;
  double mass_residual_l = 0.0;
};

/// Multi-player environment stepped with simultaneous actions.
class Environment {
 public:
  virtual ~Environment() = default;
  virtual std::size_t players() const = 0;
  virtual std::size_t state_dimension() const = 0;
  virtual double cycle_time() const = 0;
  virtual void reset() = 0;
  virtual StateVector observe(std::size_t player) const = 0;
  virtual StepReport step(std::span<const ActionValue> actions) = 0;
};

class PlantEnvironment final : public Environment {
 public:
  PlantEnvironment(plant::PlantSpec spec, double cycle_time);

  std::size_t players() const override { return plant_.players(); }
  std::size_t state_dimension() const override { return 2; }
  double cycle_time() const override { return cycle_time_; }
  void reset() override { plant_.reset(); }
  StateVector observe(std::size_t player) const override { return plant_.observe(player); }
  StepReport step(std::span<const ActionValue> actions) override;

  const plant::Plant& plant() const { return plant_; }

 private:
  plant::Plant plant_;
  double cycle_time_;
};

/// Closed-form game on a scalar shared state; every player observes (s).
class ReferenceEnvironment final : public Environment {
 public:
  ReferenceEnvironment(ReferenceGame game, double initial_state, double cycle_time = 1.0);

  std::size_t players() const override { return game_.players(); }
  std::size_t state_dimension() const override { return 1; }
  double cycle_time() const override { return cycle_time_; }
  void reset() override { state_ = initial_; }
  StateVector observe(std::size_t) const override { return StateVector{state_}; }
  StepReport step(std::span<const ActionValue> actions) override;

  double state() const { return state_; }

 private:
  ReferenceGame game_;
  double initial_;
  double state_;
  double cycle_time_;
};

}  // namespace sbpg::harness

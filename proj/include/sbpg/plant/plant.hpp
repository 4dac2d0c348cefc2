#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "sbpg/game/state.hpp"
#include "sbpg/plant/plant_spec.hpp"

namespace sbpg::plant {

struct StepOutcome {
  std::vector<double> moved;        ///< liters per actuator
  std::vector<double> power;        ///< kW per actuator
  std::vector<double> overflow;     ///< liters lost per buffer
  double source_inflow = 0.0;       ///< liters taken from the infinite source
  double demand_requested = 0.0;    ///< liters
  double demand_drawn = 0.0;        ///< liters
  double demand_fulfilled = 1.0;    ///< V_D in [0,1]

  double total_overflow() const;
  double total_power() const;
  double shortfall() const { return std::max(0.0, demand_requested - demand_drawn); }
};

/// Continuous-flow bulk-good chain. Actuators are processed upstream to
/// downstream within a step. In last_buffer mode the demand sink then draws
/// from the last buffer; in last_actuator mode the last actuator delivers into
/// it, up to the requested volume, and any surplus stays in its source buffer.
class Plant {
 public:
  explicit Plant(PlantSpec spec);

  void reset();

  /// Advances the plant by dt seconds under the given actions (one per
  /// actuator, each in [0,1]).
  StepOutcome step(std::span<const ActionValue> actions, double dt);

  /// (predecessor fill, successor fill) of player i; the infinite source
  /// reads as full and the demand sink as empty.
  StateVector observe(std::size_t player) const;

  const PlantSpec& spec() const { return spec_; }
  std::span<const double> levels() const { return levels_; }
  void set_levels(std::span<const double> levels);
  std::size_t players() const { return spec_.players(); }

 private:
  PlantSpec spec_;
  std::vector<double> levels_;
};

/// Power drawn by one actuator at the given action: 0 at rest, otherwise
/// idle + (max - idle) * action^exponent.
double actuator_power(const ActuatorSpec& actuator, double action);

}  // namespace sbpg::plant

#include "sbpg/plant/plant.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sbpg/core/errors.hpp"

namespace sbpg::plant {

double StepOutcome::total_overflow() const {
  return std::accumulate(overflow.begin(), overflow.end(), 0.0);
}

double StepOutcome::total_power() const { return std::accumulate(power.begin(), power.end(), 0.0); }

double actuator_power(const ActuatorSpec& actuator, double action) {
  if (action <= 0.0) return 0.0;
  const double shape =
      actuator.power_exponent == 1.0 ? action : std::pow(action, actuator.power_exponent);
  return actuator.power_idle + (actuator.power_max - actuator.power_idle) * shape;
}

Plant::Plant(PlantSpec spec) : spec_(std::move(spec)) {
  spec_.validate();
  reset();
}

void Plant::reset() {
  levels_.resize(spec_.buffers.size());
  for (std::size_t b = 0; b < levels_.size(); ++b)
    levels_[b] = spec_.buffers[b].initial_fill * spec_.buffers[b].capacity;
}

void Plant::set_levels(std::span<const double> levels) {
  if (levels.size() != levels_.size()) throw ConfigError("level vector size mismatch");
  for (std::size_t b = 0; b < levels.size(); ++b) {
    if (!(levels[b] >= 0.0 && levels[b] <= spec_.buffers[b].capacity))
      throw ConfigError("buffer level outside [0, capacity]");
  }
  levels_.assign(levels.begin(), levels.end());
}

StepOutcome Plant::step(std::span<const ActionValue> actions, double dt) {
  if (actions.size() != spec_.actuators.size())
    throw ConfigError("expected one action per actuator");
  if (!(dt > 0.0)) throw ConfigError("dt must be > 0");

  StepOutcome out;
  out.moved.assign(actions.size(), 0.0);
  out.power.assign(actions.size(), 0.0);
  out.overflow.assign(levels_.size(), 0.0);
  out.demand_requested = spec_.demand_rate * dt;

  for (std::size_t i = 0; i < actions.size(); ++i) {
    const auto& act = spec_.actuators[i];
    const double a = actions[i].value();
    const double request = a * act.flow_max * dt;

    double moved = request;
    // the demand sink takes at most the requested volume per step
    if (!spec_.sink_buffer(i)) moved = std::min(moved, out.demand_requested - out.demand_drawn);
    if (const auto src = spec_.source_buffer(i)) {
      moved = std::min(moved, levels_[*src]);
      levels_[*src] -= moved;
    } else {
      out.source_inflow += moved;
    }
    if (const auto dst = spec_.sink_buffer(i)) {
      levels_[*dst] += moved;
      const double cap = spec_.buffers[*dst].capacity;
      if (levels_[*dst] > cap) {
        out.overflow[*dst] = levels_[*dst] - cap;
        levels_[*dst] = cap;
      }
    } else {
      out.demand_drawn += moved;
    }
    out.moved[i] = moved;
    out.power[i] = actuator_power(act, a);
  }

  if (spec_.demand_mode == DemandMode::last_buffer) {
    out.demand_drawn = std::min(out.demand_requested, levels_.back());
    levels_.back() -= out.demand_drawn;
  }
  out.demand_fulfilled = std::min(1.0, out.demand_drawn / out.demand_requested);
  return out;
}

StateVector Plant::observe(std::size_t player) const {
  if (player >= players()) throw ConfigError("player index out of range");
  auto fill = [&](std::size_t b) {
    return std::clamp(levels_[b] / spec_.buffers[b].capacity, 0.0, 1.0);
  };
  // the infinite source reads as full, the demand sink as empty
  const auto src = spec_.source_buffer(player);
  const auto dst = spec_.sink_buffer(player);
  return StateVector{src ? fill(*src) : 1.0, dst ? fill(*dst) : 0.0};
}

}  // namespace sbpg::plant

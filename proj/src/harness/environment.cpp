#include "sbpg/harness/environment.hpp"

#include <numeric>

#include "sbpg/core/errors.hpp"
#include "sbpg/plant/utility.hpp"

namespace sbpg::harness {

PlantEnvironment::PlantEnvironment(plant::PlantSpec spec, double cycle_time)
    : plant_(std::move(spec)), cycle_time_(cycle_time) {
  if (!(cycle_time > 0.0)) throw ConfigError("cycle_time must be > 0");
}

StepReport PlantEnvironment::step(std::span<const ActionValue> actions) {
  const std::vector<double> before(plant_.levels().begin(), plant_.levels().end());
  const auto outcome = plant_.step(actions, cycle_time_);
  const auto after = plant_.levels();

  StepReport r;
  r.utilities = plant::player_utilities(plant_.spec(), after, outcome);
  r.overflow_l = outcome.total_overflow();
  r.power_kw = outcome.total_power();
  r.shortfall_l = outcome.shortfall();
  double delta = 0.0;
  for (std::size_t b = 0; b < before.size(); ++b) delta += after[b] - before[b];
  r.mass_residual_l = delta + outcome.demand_drawn + r.overflow_l - outcome.source_inflow;
  return r;
}

ReferenceEnvironment::ReferenceEnvironment(ReferenceGame game, double initial_state,
                                           double cycle_time)
    : game_(std::move(game)), initial_(initial_state), state_(initial_state),
      cycle_time_(cycle_time) {
  if (!(initial_state >= 0.0 && initial_state <= 1.0))
    throw ConfigError("reference state must be in [0,1]");
}

StepReport ReferenceEnvironment::step(std::span<const ActionValue> actions) {
  if (actions.size() != game_.players()) throw ConfigError("expected one action per player");
  std::vector<double> a(actions.begin(), actions.end());
  StepReport r;
  r.utilities.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.utilities[i] = game_.utility(i, a, state_);
  state_ = game_.transition(a, state_);
  return r;
}

}  // namespace sbpg::harness

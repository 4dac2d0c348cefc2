#include "sbpg/plant/utility.hpp"

#include <algorithm>
#include <numeric>

#include "sbpg/core/errors.hpp"

namespace sbpg::plant {

double overflow_penalty(double level, double capacity, double upper) {
  return std::max(0.0, (level - upper * capacity) / ((1.0 - upper) * capacity));
}

double starvation_penalty(double level, double capacity, double lower) {
  return std::max(0.0, (lower * capacity - level) / (lower * capacity));
}

double utility(const UtilityTerms& t, const UtilityWeights& w) {
  double u = 1.0 / (1.0 + w.alpha_l * t.pred_penalty);
  if (t.is_last) {
    const double denom = 1.0 - w.alpha_d * t.demand_fulfilled;
    if (!(denom > 0.0)) throw ConfigError("alpha_d * V_D must stay below 1");
    u += 1.0 / denom;
  } else {
    u += 1.0 / (1.0 + w.alpha_l * t.succ_penalty);
  }
  u += 1.0 / (1.0 + w.alpha_p * t.power);
  return u;
}

namespace {

double source_penalty(PenaltyMode mode, double level, const BufferSpec& b) {
  switch (mode) {
    case PenaltyMode::relief: return overflow_penalty(level, b.capacity, b.upper);
    case PenaltyMode::fault: return starvation_penalty(level, b.capacity, b.lower);
    case PenaltyMode::band: break;
  }
  return overflow_penalty(level, b.capacity, b.upper) + starvation_penalty(level, b.capacity, b.lower);
}

double sink_penalty(PenaltyMode mode, double level, const BufferSpec& b) {
  switch (mode) {
    case PenaltyMode::relief: return starvation_penalty(level, b.capacity, b.lower);
    case PenaltyMode::fault: return overflow_penalty(level, b.capacity, b.upper);
    case PenaltyMode::band: break;
  }
  return overflow_penalty(level, b.capacity, b.upper) + starvation_penalty(level, b.capacity, b.lower);
}

}  // namespace

UtilityTerms utility_terms(const PlantSpec& spec, std::size_t player,
                           std::span<const double> post_levels, const StepOutcome& outcome) {
  UtilityTerms t;
  t.is_last = player + 1 == spec.players();
  if (const auto src = spec.source_buffer(player)) {
    t.pred_penalty = source_penalty(spec.penalty_mode, post_levels[*src], spec.buffers[*src]);
  }
  if (const auto dst = spec.sink_buffer(player); dst && !t.is_last) {
    t.succ_penalty = sink_penalty(spec.penalty_mode, post_levels[*dst], spec.buffers[*dst]);
  }
  t.demand_fulfilled = outcome.demand_fulfilled;
  t.power = outcome.power[player];
  return t;
}

std::vector<double> player_utilities(const PlantSpec& spec, std::span<const double> post_levels,
                                     const StepOutcome& outcome) {
  std::vector<double> u(spec.players());
  for (std::size_t i = 0; i < u.size(); ++i)
    u[i] = utility(utility_terms(spec, i, post_levels, outcome), spec.weights);
  return u;
}

double potential_value(std::span<const double> utilities) {
  return std::accumulate(utilities.begin(), utilities.end(), 0.0);
}

}  // namespace sbpg::plant

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sbpg/plant/plant.hpp"
#include "sbpg/plant/plant_spec.hpp"

namespace sbpg::plant {

/// 0 up to the upper threshold, rising linearly to 1 at capacity.
double overflow_penalty(double level, double capacity, double upper);

/// 0 above the lower threshold, rising linearly to 1 when empty.
double starvation_penalty(double level, double capacity, double lower);

/// Inputs of one player's utility for one step.
struct UtilityTerms {
  double pred_penalty = 0.0;   ///< L_pre, >= 0, on the buffer the player draws from
  double succ_penalty = 0.0;   ///< L_succ, >= 0, on the buffer it feeds (unused for the last player)
  double demand_fulfilled = 1.0;
  double power = 0.0;          ///< kW
  bool is_last = false;
};

/// 1/(1+a_l L_pre) + [!last] 1/(1+a_l L_succ) + [last] 1/(1-a_d V_D) + 1/(1+a_p P)
double utility(const UtilityTerms& terms, const UtilityWeights& weights);

/// Utility terms of player i from the post-step levels and the outcome. The
/// plant's penalty mode decides which level violations count.
UtilityTerms utility_terms(const PlantSpec& spec, std::size_t player,
                           std::span<const double> post_levels, const StepOutcome& outcome);

std::vector<double> player_utilities(const PlantSpec& spec, std::span<const double> post_levels,
                                     const StepOutcome& outcome);

/// Global objective: sum of the players' utilities.
double potential_value(std::span<const double> utilities);

}  // namespace sbpg::plant

#pragma once

#include <vector>

#include "sbpg/game/maps.hpp"
#include "sbpg/game/state.hpp"

namespace sbpg {

/// Normalized inverse-squared-distance weights of every entry of `table`
/// for the query state: w_k = 1 / (D_k^2 + gamma), divided by their sum.
/// With gamma == 0 and the state exactly on a support vector, that entry
/// gets weight 1 and all others 0.
std::vector<double> interpolation_weights(const PolicyTable& table, const StateVector& state,
                                          double gamma);

/// Global interpolation of the table's representative actions, clamped to
/// [0,1]. Throws PolicyNotReady on an empty table.
ActionValue interpolate_action(const PolicyTable& table, const StateVector& state, double gamma);

}  // namespace sbpg

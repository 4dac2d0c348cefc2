#include "sbpg/game/interpolation.hpp"

#include <algorithm>
#include <stdexcept>

#include "sbpg/core/errors.hpp"

namespace sbpg {

namespace {

double squared_distance(std::span<const double> a, const StateVector& s) {
  double d2 = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    const double diff = s[j] - a[j];
    d2 += diff * diff;
  }
  return d2;
}

void check(const PolicyTable& table, const StateVector& state, double gamma) {
  if (table.empty()) throw PolicyNotReady("performance map has no visited cell");
  if (state.dimension() != table.grid().dimension())
    throw ConfigError("state dimension does not match performance map");
  if (!(gamma >= 0.0)) throw ConfigError("interpolation gamma must be >= 0");
}

}  // namespace

std::vector<double> interpolation_weights(const PolicyTable& table, const StateVector& state,
                                          double gamma) {
  check(table, state, gamma);
  std::vector<double> w(table.size(), 0.0);
  double total = 0.0;
  for (std::size_t k = 0; k < table.size(); ++k) {
    const double d2 = squared_distance(table.coordinates(k), state);
    if (gamma == 0.0 && d2 == 0.0) {
      std::fill(w.begin(), w.end(), 0.0);
      w[k] = 1.0;
      return w;
    }
    w[k] = 1.0 / (d2 + gamma);
    total += w[k];
  }
  for (double& x : w) x /= total;
  return w;
}

ActionValue interpolate_action(const PolicyTable& table, const StateVector& state, double gamma) {
  check(table, state, gamma);
  double weight_sum = 0.0;
  double weighted = 0.0;
  for (std::size_t k = 0; k < table.size(); ++k) {
    const double d2 = squared_distance(table.coordinates(k), state);
    if (gamma == 0.0 && d2 == 0.0) return ActionValue::clamped(table.action(k));
    const double w = 1.0 / (d2 + gamma);
    weight_sum += w;
    weighted += w * table.action(k);
  }
  return ActionValue::clamped(weighted / weight_sum);
}

}  // namespace sbpg

#include "sbpg/learn/estimators.hpp"

#include <algorithm>
#include <cmath>

#include "sbpg/core/errors.hpp"

namespace sbpg {

double gradient_basic(double a_prev, double u_prev, double a_curr, double u_curr,
                      double epsilon_eq) {
  const double da = a_curr - a_prev;
  const double du = u_curr - u_prev;
  if (std::abs(da) > epsilon_eq) return du / da;
  return du;
}

double newton_top_divided_difference(std::span<const double> x, std::span<const double> y) {
  std::vector<double> table(y.begin(), y.end());
  const std::size_t n = table.size();
  for (std::size_t order = 1; order < n; ++order) {
    for (std::size_t i = n - 1; i >= order; --i) {
      table[i] = (table[i] - table[i - 1]) / (x[i] - x[i - order]);
    }
  }
  return table.back();
}

double gradient_polynomial(std::span<const Sample> stack, double epsilon_eq) {
  if (stack.size() < 2) return 0.0;

  // newest first, skip anything that repeats an already kept action
  std::vector<Sample> kept;
  kept.reserve(stack.size());
  for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
    const bool duplicate = std::any_of(kept.begin(), kept.end(), [&](const Sample& k) {
      return std::abs(k.action - it->action) <= epsilon_eq;
    });
    if (!duplicate) kept.push_back(*it);
  }
  if (kept.size() < 2) {
    const auto& last = stack[stack.size() - 1];
    const auto& prev = stack[stack.size() - 2];
    return last.utility - prev.utility;
  }
  std::reverse(kept.begin(), kept.end());

  std::vector<double> x(kept.size());
  std::vector<double> y(kept.size());
  for (std::size_t k = 0; k < kept.size(); ++k) {
    x[k] = kept[k].action;
    y[k] = kept[k].utility;
  }
  return newton_top_divided_difference(x, y);
}

double clamp_gradient(double grad, double bound) {
  if (std::isnan(grad)) return 0.0;
  return std::clamp(grad, -bound, bound);
}

ActionValue gradient_action_update(double a_curr, double grad, double alpha, double noise) {
  return ActionValue::clamped(a_curr + alpha * grad + noise);
}

MomentumEstimator::MomentumEstimator(std::size_t cells, double beta)
    : beta_(beta), prev_(cells, 0.0) {
  if (!(beta >= 0.0 && beta < 1.0)) throw ConfigError("momentum beta must be in [0,1)");
}

double MomentumEstimator::apply(CellIndex cell, double raw_grad) {
  double& prev = prev_.at(cell);
  prev = beta_ * prev + (1.0 - beta_) * raw_grad;
  return prev;
}

}  // namespace sbpg

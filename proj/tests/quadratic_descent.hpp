#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "sbpg/game/grid.hpp"
#include "sbpg/game/maps.hpp"
#include "sbpg/game/reference_game.hpp"
#include "sbpg/learn/estimators.hpp"

namespace sbpg::testing {

struct DescentRun {
  std::optional<std::size_t> iterations;  // first iteration within tolerance
  std::vector<double> actions;
};

// Noise-free secant ascent on the single-player quadratic game, one map cell,
// starting from the pseudo-sample. Momentum is applied when `beta` is set.
inline DescentRun quadratic_descent(double target, double alpha, std::optional<double> beta,
                                    std::size_t max_iterations = 200, double tolerance = 1e-3) {
  const ReferenceGame game = make_quadratic_reference_game(target);
  const SupportGrid grid(2, 1);
  GradientMap map(grid, 8);
  std::optional<MomentumEstimator> momentum;
  if (beta) momentum.emplace(grid.cell_count(), *beta);

  DescentRun run;
  for (std::size_t k = 0; k < max_iterations; ++k) {
    const auto stack = map.samples(0);
    double g = 0.0;
    if (stack.size() >= 2) {
      const auto& p = stack[stack.size() - 2];
      const auto& c = stack.back();
      g = gradient_basic(p.action, p.utility, c.action, c.utility, 1e-8);
    }
    g = clamp_gradient(g, 1e3);
    if (momentum) g = momentum->apply(0, g);
    const ActionValue a = gradient_action_update(stack.back().action, g, alpha, 0.0);
    const double x = a.value();
    map.push(0, a, game.utility(0, std::span<const double>(&x, 1), 0.0));
    run.actions.push_back(x);
    if (std::abs(x - target) <= tolerance) {
      run.iterations = k + 1;
      break;
    }
  }
  return run;
}

}  // namespace sbpg::testing

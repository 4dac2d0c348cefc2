#include "sbpg/game/verify.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace sbpg {

double potential_residual(const ReferenceGame& game, std::size_t player,
                          std::span<const double> actions, double deviation, double state) {
  std::vector<double> deviated(actions.begin(), actions.end());
  deviated[player] = deviation;
  const double du = game.utility(player, actions, state) - game.utility(player, deviated, state);
  const double dphi = game.potential(actions, state) - game.potential(deviated, state);
  return std::abs(du - dphi);
}

VerificationReport verify_potential_condition(const ReferenceGame& game, std::size_t samples,
                                              double tolerance, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> pick(0, game.players() - 1);
  std::vector<double> a(game.players());

  VerificationReport report;
  report.samples = samples;
  for (std::size_t n = 0; n < samples; ++n) {
    for (double& x : a) x = unit(rng);
    const std::size_t i = pick(rng);
    const double deviation = unit(rng);
    const double s = unit(rng);
    const double r = potential_residual(game, i, a, deviation, s);
    report.max_residual = std::max(report.max_residual, r);
    if (!(r <= tolerance)) ++report.violations;
  }
  report.passed = report.violations == 0;
  return report;
}

VerificationReport verify_state_transition_condition(const ReferenceGame& game,
                                                     std::size_t samples, double tolerance,
                                                     std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> a(game.players());

  VerificationReport report;
  report.samples = samples;
  for (std::size_t n = 0; n < samples; ++n) {
    for (double& x : a) x = unit(rng);
    const double s = unit(rng);
    const double next = game.transition(a, s);
    const double decrease = game.potential(a, s) - game.potential(a, next);
    report.max_residual = std::max(report.max_residual, decrease);
    if (!(decrease <= tolerance)) ++report.violations;
  }
  report.passed = report.violations == 0;
  return report;
}

}  // namespace sbpg

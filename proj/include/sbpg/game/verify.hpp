#pragma once

#include <cstddef>
#include <random>
#include <span>

#include "sbpg/game/reference_game.hpp"

namespace sbpg {

struct VerificationReport {
  bool passed = true;
  std::size_t samples = 0;
  std::size_t violations = 0;
  /// Potential condition: largest |du_i - dphi|. Transition condition:
  /// largest potential decrease phi(a,s) - phi(a,s'), 0 if none.
  double max_residual = 0.0;
};

/// |[u_i(a,s) - u_i(a'_i,a_-i,s)] - [phi(a,s) - phi(a'_i,a_-i,s)]| for the
/// unilateral deviation of player i to `deviation`.
double potential_residual(const ReferenceGame& game, std::size_t player,
                          std::span<const double> actions, double deviation, double state);

/// Samples random (i, a, a'_i, s) and checks the exact-potential condition.
VerificationReport verify_potential_condition(const ReferenceGame& game, std::size_t samples,
                                              double tolerance, std::mt19937_64& rng);

/// Samples random (a, s) and checks phi(a, s') >= phi(a, s) - tolerance for
/// s' produced by the game's transition rule.
VerificationReport verify_state_transition_condition(const ReferenceGame& game,
                                                     std::size_t samples, double tolerance,
                                                     std::mt19937_64& rng);

}  // namespace sbpg

#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace sbpg {

/// Closed-form N-player game on a scalar shared state s in [0,1]:
///
///   target_i(s) = offset_i + coupling * s
///   phi(a, s)   = baseline - sum_i (a_i - target_i(s))^2
///   u_i(a, s)   = phi(a, s) + perturbation(i, a, s)
///
/// With no perturbation every player's utility is the potential itself, so
/// unilateral deviations change u_i and phi by exactly the same amount.
class ReferenceGame {
 public:
  enum class Transition {
    identity,     ///< s' = s
    improving,    ///< s moves a fraction `rate` toward the potential-maximizing state
    adversarial,  ///< s moves a fraction `rate` away from it
  };

  using Perturbation = std::function<double(std::size_t, std::span<const double>, double)>;

  ReferenceGame(std::vector<double> offsets, double coupling, Transition transition,
                double rate = 0.5, double baseline = 0.0);

  std::size_t players() const { return offsets_.size(); }
  double coupling() const { return coupling_; }
  Transition transition_kind() const { return transition_; }

  double target(std::size_t i, double s) const { return offsets_[i] + coupling_ * s; }
  double potential(std::span<const double> actions, double s) const;
  double utility(std::size_t i, std::span<const double> actions, double s) const;

  /// Next state under the configured rule, always inside [0,1].
  double transition(std::span<const double> actions, double s) const;

  /// State that maximizes phi(a, .) over the reals; equal to the joint-action
  /// mean when offsets sum to zero and coupling is 1. Undefined for coupling 0.
  double best_state(std::span<const double> actions) const;

  void set_perturbation(Perturbation p) { perturbation_ = std::move(p); }

 private:
  std::vector<double> offsets_;
  double coupling_;
  Transition transition_;
  double rate_;
  double baseline_;
  Perturbation perturbation_;
};

/// Exact-potential game with zero-sum offsets and unit coupling, so the
/// improving transition nudges the state toward the joint-action mean.
ReferenceGame make_exact_reference_game(std::size_t players);

/// Single-player game with a fixed optimum `target` independent of state.
/// The baseline keeps utilities positive on [0,1], as plant utilities are.
ReferenceGame make_quadratic_reference_game(double target, double baseline = 1.0);

}  // namespace sbpg

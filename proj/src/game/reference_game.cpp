#include "sbpg/game/reference_game.hpp"

#include <algorithm>

#include "sbpg/core/errors.hpp"

namespace sbpg {

ReferenceGame::ReferenceGame(std::vector<double> offsets, double coupling, Transition transition,
                             double rate, double baseline)
    : offsets_(std::move(offsets)),
      coupling_(coupling),
      transition_(transition),
      rate_(rate),
      baseline_(baseline) {
  if (offsets_.empty()) throw ConfigError("reference game needs at least one player");
  if (!(rate_ > 0.0 && rate_ <= 1.0)) throw ConfigError("transition rate must be in (0,1]");
}

double ReferenceGame::potential(std::span<const double> actions, double s) const {
  double phi = baseline_;
  for (std::size_t i = 0; i < offsets_.size(); ++i) {
    const double d = actions[i] - target(i, s);
    phi -= d * d;
  }
  return phi;
}

double ReferenceGame::utility(std::size_t i, std::span<const double> actions, double s) const {
  double u = potential(actions, s);
  if (perturbation_) u += perturbation_(i, actions, s);
  return u;
}

double ReferenceGame::best_state(std::span<const double> actions) const {
  // d phi / ds = 2 c sum_i (a_i - b_i - c s) = 0
  double acc = 0.0;
  for (std::size_t i = 0; i < offsets_.size(); ++i) acc += actions[i] - offsets_[i];
  return acc / (static_cast<double>(offsets_.size()) * coupling_);
}

double ReferenceGame::transition(std::span<const double> actions, double s) const {
  if (transition_ == Transition::identity || coupling_ == 0.0) return s;
  const double toward = best_state(actions) - s;
  const double step = transition_ == Transition::improving ? rate_ * toward : -rate_ * toward;
  return std::clamp(s + step, 0.0, 1.0);
}

ReferenceGame make_exact_reference_game(std::size_t players) {
  std::vector<double> offsets(players, 0.0);
  // symmetric spread in [-0.2, 0.2], summing to zero
  for (std::size_t i = 0; i < players; ++i) {
    offsets[i] = players == 1 ? 0.0
                              : -0.2 + 0.4 * static_cast<double>(i) /
                                           static_cast<double>(players - 1);
  }
  return ReferenceGame(std::move(offsets), 1.0, ReferenceGame::Transition::improving);
}

ReferenceGame make_quadratic_reference_game(double target, double baseline) {
  return ReferenceGame({target}, 0.0, ReferenceGame::Transition::identity, 0.5, baseline);
}

}  // namespace sbpg

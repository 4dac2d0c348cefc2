#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "sbpg/game/grid.hpp"
#include "sbpg/game/maps.hpp"
#include "sbpg/game/state.hpp"
#include "sbpg/learn/estimators.hpp"
#include "sbpg/learn/ou_noise.hpp"

namespace sbpg {

enum class LearnerVariant {
  best_response,  ///< uniform random exploration, best (action, utility) per cell
  basic,          ///< gradient ascent on first divided differences
  momentum,       ///< ... with per-cell momentum smoothing
  polynomial,     ///< ... with the top-order divided difference of the cell stack
};

/// CLI / config spelling: best-response | grad1 | grad2 | grad3
std::string_view to_string(LearnerVariant v);
LearnerVariant parse_variant(std::string_view name);

struct LearnerConfig {
  LearnerVariant variant = LearnerVariant::best_response;
  double alpha = 1.0;
  double beta = 0.4;
  std::size_t kickoff_episodes = 0;
  bool ou_enabled = false;
  OuParams ou{};
  double epsilon_eq = 1e-8;
  std::size_t stack_depth = 8;
  double gradient_clip = 1e3;
  double explore_start = 1.0;
  double explore_end = 0.0;

  void validate() const;
};

/// Hyperparameters tuned for each variant on the plant: grad1 uses alpha 1
/// with OU noise only without kick-off; grad2 alpha 0.25 / beta 0.6; grad3
/// alpha 0.5. OU noise is off for grad2 and grad3.
LearnerConfig preset(LearnerVariant variant, std::size_t kickoff_episodes);

/// How a control step is played.
enum class StepMode {
  kickoff,  ///< uniform random action, sample appended to the cell stack
  explore,  ///< method-specific exploration; map updated with the outcome
  exploit,  ///< interpolate the performance map; no map update, no noise
};

/// Learning state owned by one player: its performance map, gradient
/// bookkeeping, OU noise and random stream.
class PlayerLearner {
 public:
  PlayerLearner(const LearnerConfig& config, const SupportGrid& grid, double gamma,
                std::uint64_t seed);

  /// Picks this step's action for the observed state. Exploit throws
  /// PolicyNotReady while the map is empty.
  ActionValue select(const StateVector& state, StepMode mode);

  /// Feeds back the utility resulting from the last selected action.
  void observe(double utility);

  /// Resets per-episode state (OU noise).
  void begin_episode();

  /// Bernoulli draw deciding explore vs exploit at the given rate.
  bool draw_explore(double rate);

  PolicyTable policy() const;
  const LearnerConfig& config() const { return config_; }
  const SupportGrid& grid() const { return *grid_; }
  double gamma() const { return gamma_; }

  const BestResponseMap* best_response_map() const { return br_ ? &*br_ : nullptr; }
  const GradientMap* gradient_map() const { return grad_ ? &*grad_ : nullptr; }
  const MomentumEstimator* momentum() const { return momentum_ ? &*momentum_ : nullptr; }

 private:
  double estimate_gradient(CellIndex cell);
  const PolicyTable& cached_policy();

  LearnerConfig config_;
  const SupportGrid* grid_;
  double gamma_;
  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> unit_{0.0, 1.0};
  OuNoise noise_;

  std::optional<BestResponseMap> br_;
  std::optional<GradientMap> grad_;
  std::optional<MomentumEstimator> momentum_;

  std::optional<PolicyTable> policy_cache_;

  struct Pending {
    CellIndex cell;
    double action;
    StepMode mode;
  };
  std::optional<Pending> pending_;
};

/// Uniform action in [0,1].
ActionValue explore_random(std::mt19937_64& rng);

}  // namespace sbpg

#pragma once

#include <limits>
#include <random>

namespace sbpg {

struct OuParams {
  double theta = 0.15;  ///< mean reversion per step, > 0
  double mu = 0.0;
  double sigma = 0.2;   ///< >= 0
  double clip = 0.3;    ///< symmetric bound on the state; infinity disables clipping

  void validate() const;
};

/// Discrete Ornstein-Uhlenbeck process
///   x <- clamp(x + theta (mu - x) + sigma g, -clip, clip),  g ~ N(0,1).
class OuNoise {
 public:
  explicit OuNoise(OuParams params = {}, double initial = 0.0);

  double step(std::mt19937_64& rng);
  void reset(double value = 0.0) { x_ = value; }

  double value() const { return x_; }
  const OuParams& params() const { return params_; }

  /// Closed-form stationary standard deviation of the continuous-time
  /// process, sigma / sqrt(2 theta).
  double stationary_stddev() const;

 private:
  OuParams params_;
  double x_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace sbpg

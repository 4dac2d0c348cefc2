#include "sbpg/learn/ou_noise.hpp"

#include <algorithm>
#include <cmath>

#include "sbpg/core/errors.hpp"

namespace sbpg {

void OuParams::validate() const {
  if (!(theta > 0.0)) throw ConfigError("OU theta must be > 0");
  if (!(sigma >= 0.0)) throw ConfigError("OU sigma must be >= 0");
  if (!(clip > 0.0)) throw ConfigError("OU clip must be > 0");
  if (!std::isfinite(mu)) throw ConfigError("OU mu must be finite");
}

OuNoise::OuNoise(OuParams params, double initial) : params_(params), x_(initial) {
  params_.validate();
}

double OuNoise::step(std::mt19937_64& rng) {
  double x = x_ + params_.theta * (params_.mu - x_);
  // sigma == 0 must not consume randomness so noiseless runs stay aligned
  if (params_.sigma > 0.0) x += params_.sigma * normal_(rng);
  x_ = std::clamp(x, -params_.clip, params_.clip);
  return x_;
}

double OuNoise::stationary_stddev() const { return params_.sigma / std::sqrt(2.0 * params_.theta); }

}  // namespace sbpg

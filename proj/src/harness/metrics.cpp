#include "sbpg/harness/metrics.hpp"

#include <cmath>
#include <numeric>

#include "sbpg/core/errors.hpp"
#include "sbpg/plant/utility.hpp"

namespace sbpg::harness {

void MetricsAccumulator::add(const StepReport& r) {
  ++steps_;
  overflow_ += r.overflow_l;
  power_ += r.power_kw;
  shortfall_ += r.shortfall_l;
  potential_ += plant::potential_value(r.utilities);
  max_mass_residual_ = std::max(max_mass_residual_, std::abs(r.mass_residual_l));
}

EpisodeMetrics MetricsAccumulator::finish(double cycle_time) const {
  EpisodeMetrics m;
  if (steps_ == 0) return m;
  const double n = static_cast<double>(steps_);
  const double seconds = n * cycle_time;
  m.overflow_lps = overflow_ / seconds;
  m.power_kws = power_ / n;
  m.demand_shortfall_lps = shortfall_ / seconds;
  m.potential = potential_ / n;
  return m;
}

std::size_t convergence_episode(std::span<const double> potentials, double fraction) {
  if (potentials.empty()) throw ConfigError("convergence needs a non-empty potential series");
  const double final_value = potentials.back();
  const double threshold = final_value - (1.0 - fraction) * std::abs(final_value);
  for (std::size_t e = 0; e < potentials.size(); ++e) {
    if (potentials[e] >= threshold) return e;
  }
  return potentials.size();
}

}  // namespace sbpg::harness

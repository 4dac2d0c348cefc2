#pragma once

#include <cstddef>
#include <span>

#include "sbpg/harness/environment.hpp"

namespace sbpg::harness {

/// Per-episode averages in the units of the comparison table.
struct EpisodeMetrics {
  double overflow_lps = 0.0;           ///< liters lost per simulated second
  double power_kws = 0.0;              ///< mean total power per control step, kW
  double demand_shortfall_lps = 0.0;   ///< unmet demand per simulated second
  double potential = 0.0;              ///< mean potential per control step
  double wall_clock_s = 0.0;

  bool operator==(const EpisodeMetrics&) const = default;
};

/// Accumulates StepReports into EpisodeMetrics.
class MetricsAccumulator {
 public:
  void add(const StepReport& r);
  EpisodeMetrics finish(double cycle_time) const;

  std::size_t steps() const { return steps_; }
  double max_mass_residual() const { return max_mass_residual_; }

 private:
  std::size_t steps_ = 0;
  double overflow_ = 0.0;
  double power_ = 0.0;
  double shortfall_ = 0.0;
  double potential_ = 0.0;
  double max_mass_residual_ = 0.0;
};

/// First episode whose mean potential is within (1 - fraction) * |final| of
/// the final training episode's potential (for positive potentials: reaches
/// fraction * final). Returns the series length if never reached.
std::size_t convergence_episode(std::span<const double> potentials, double fraction = 0.95);

}  // namespace sbpg::harness

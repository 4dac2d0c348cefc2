#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sbpg/harness/experiment.hpp"
#include "sbpg/harness/metrics.hpp"

namespace sbpg::harness {

/// One row of the comparison table: a finished run reduced to its test
/// metrics and its training cost.
struct RunSummary {
  std::string method;
  std::size_t kickoff_episodes = 0;
  std::size_t episodes = 0;
  std::size_t steps_per_episode = 0;
  double cycle_time = 0.0;
  std::vector<double> training_potentials;
  EpisodeMetrics test;

  std::size_t convergence_episode(double fraction = 0.95) const;
  /// Control steps spent until the convergence episode finished.
  std::size_t training_interactions(double fraction = 0.95) const;
  /// Same cost in simulated seconds.
  double training_seconds(double fraction = 0.95) const;
};

RunSummary summarize(const RunArtifacts& run);

struct ComparisonRow {
  RunSummary run;
  std::size_t training_interactions = 0;
  double training_seconds = 0.0;
  double interactions_ratio = 1.0;  ///< vs. the first row
  double power_delta = 0.0;         ///< relative change vs. the first row
};

struct ComparisonTable {
  std::vector<ComparisonRow> rows;
};

/// (value - reference) / reference
double relative_delta(double value, double reference);

/// First row is the benchmark. Throws ConfigError with fewer than two runs
/// when `require_pair` is set.
ComparisonTable compare_runs(const std::vector<RunSummary>& runs, double fraction = 0.95,
                             bool require_pair = true);

nlohmann::json to_json(const RunSummary& s);
RunSummary run_summary_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ComparisonTable& table);

/// Fixed-width text rendering of the comparison table.
void print_table(std::ostream& out, const ComparisonTable& table);

}  // namespace sbpg::harness

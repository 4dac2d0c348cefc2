#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "sbpg/harness/compare.hpp"
#include "sbpg/harness/experiment.hpp"

namespace sbpg::harness {

/// Layout of an exported run directory.
struct RunFiles {
  static constexpr const char* kMetrics = "metrics.csv";
  static constexpr const char* kComparison = "comparison.json";
  static constexpr const char* kConfig = "config.json";
  static constexpr const char* kMapsDir = "maps";

  static std::string map_file(std::size_t player);  ///< player_<i>.csv, 1-based
};

void write_metrics_csv(std::ostream& out, std::span<const EpisodeMetrics> episodes);

/// Writes metrics.csv, comparison.json, maps/player_<i>.csv and config.json.
/// Throws IoError if the directory cannot be created or written; the run
/// itself is untouched.
void export_results(const RunArtifacts& run, const std::filesystem::path& dir);

/// Reads the per-player maps of an exported run. `dir` may be the run
/// directory or its maps/ subdirectory.
TrainedPolicies load_policies(const std::filesystem::path& dir, const ExperimentConfig& config);

/// Reads the single-row summary of an exported run directory.
RunSummary load_run_summary(const std::filesystem::path& dir);

void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace sbpg::harness

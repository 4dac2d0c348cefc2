#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sbpg/harness/config.hpp"
#include "sbpg/harness/metrics.hpp"

namespace sbpg::harness {

/// Parameter grid: dotted paths into the experiment document mapped to the
/// candidate values, e.g. {"learner.alpha": [0.5, 1.0], "learner.beta": [0.4]}.
using ParameterGrid = nlohmann::json;

/// Cartesian product of the grid, keys in lexicographic order, the last key
/// varying fastest. Throws ConfigError on an empty grid or empty value list.
std::vector<nlohmann::json> expand_grid(const ParameterGrid& grid);

/// Sets a dotted path ("learner.ou.sigma") inside a document.
void set_dotted(nlohmann::json& doc, const std::string& path, const nlohmann::json& value);

struct SweepEntry {
  nlohmann::json parameters;
  EpisodeMetrics test;
  std::vector<EpisodeMetrics> training;
};

struct SweepResult {
  std::vector<SweepEntry> ranked;  ///< best test potential first
  const SweepEntry& best() const { return ranked.front(); }
};

/// Runs every grid point of the template (each with the template's seed) and
/// ranks by test potential; ties break on the parameters' serialized form.
/// Up to `jobs` experiments run concurrently.
SweepResult sweep(const nlohmann::json& template_doc, const std::filesystem::path& base_dir,
                  const ParameterGrid& grid, std::size_t jobs = 1,
                  const ConfigOverrides& overrides = {});

/// sweep.csv (one row per run, ranked) and sweep.json.
void export_sweep(const SweepResult& result, const std::filesystem::path& dir);

}  // namespace sbpg::harness

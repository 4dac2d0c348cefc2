#include "sbpg/harness/export.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "sbpg/core/errors.hpp"
#include "sbpg/game/map_io.hpp"
#include "sbpg/harness/config.hpp"

namespace sbpg::harness {

namespace fs = std::filesystem;

std::string RunFiles::map_file(std::size_t player) { return fmt::format("player_{}.csv", player); }

void write_metrics_csv(std::ostream& out, std::span<const EpisodeMetrics> episodes) {
  out << "episode,overflow_lps,power_kws,demand_shortfall_lps,potential,wall_clock_s\n";
  for (std::size_t e = 0; e < episodes.size(); ++e) {
    const auto& m = episodes[e];
    out << fmt::format("{},{},{},{},{},{}\n", e, m.overflow_lps, m.power_kws,
                       m.demand_shortfall_lps, m.potential, m.wall_clock_s);
  }
}

void write_text_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << content;
  if (!out) throw IoError("failed writing " + path.string());
}

void export_results(const RunArtifacts& run, const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir / RunFiles::kMapsDir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());

  std::ostringstream metrics;
  write_metrics_csv(metrics, run.training.episodes);
  write_text_file(dir / RunFiles::kMetrics, metrics.str());

  const auto table = compare_runs({summarize(run)}, 0.95, false);
  write_text_file(dir / RunFiles::kComparison, to_json(table).dump(2) + "\n");

  const auto& tables = run.training.policies.tables;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    std::ostringstream csv;
    write_policy_csv(csv, tables[i]);
    write_text_file(dir / RunFiles::kMapsDir / RunFiles::map_file(i + 1), csv.str());
  }

  write_text_file(dir / RunFiles::kConfig, to_json(run.config).dump(2) + "\n");
}

TrainedPolicies load_policies(const fs::path& dir, const ExperimentConfig& config) {
  fs::path maps = dir;
  if (fs::is_directory(dir / RunFiles::kMapsDir)) maps = dir / RunFiles::kMapsDir;
  TrainedPolicies p;
  p.grid = std::make_shared<const SupportGrid>(config.grid_resolution, 2);
  p.gamma = config.gamma;
  for (std::size_t i = 0; i < config.plant.players(); ++i) {
    p.tables.push_back(load_policy_csv((maps / RunFiles::map_file(i + 1)).string(), *p.grid));
  }
  return p;
}

RunSummary load_run_summary(const fs::path& dir) {
  const auto j = read_json_file(dir / RunFiles::kComparison);
  const auto& rows = j.at("rows");
  if (rows.empty()) throw ConfigError(dir.string() + ": comparison table has no rows");
  return run_summary_from_json(rows.at(0));
}

}  // namespace sbpg::harness

#include "sbpg/harness/compare.hpp"

#include <ostream>

#include <fmt/format.h>

#include "sbpg/core/errors.hpp"

namespace sbpg::harness {

using nlohmann::json;

std::size_t RunSummary::convergence_episode(double fraction) const {
  return harness::convergence_episode(training_potentials, fraction);
}

std::size_t RunSummary::training_interactions(double fraction) const {
  return (convergence_episode(fraction) + 1) * steps_per_episode;
}

double RunSummary::training_seconds(double fraction) const {
  return static_cast<double>(training_interactions(fraction)) * cycle_time;
}

RunSummary summarize(const RunArtifacts& run) {
  RunSummary s;
  s.method = run.method_label();
  s.kickoff_episodes = run.config.learner.kickoff_episodes;
  s.episodes = run.config.episodes;
  s.steps_per_episode = run.training.steps_per_episode;
  s.cycle_time = run.config.cycle_time;
  for (const auto& e : run.training.episodes) s.training_potentials.push_back(e.potential);
  s.test = run.test;
  return s;
}

double relative_delta(double value, double reference) {
  if (reference == 0.0) return 0.0;
  return (value - reference) / reference;
}

ComparisonTable compare_runs(const std::vector<RunSummary>& runs, double fraction,
                             bool require_pair) {
  if (runs.empty() || (require_pair && runs.size() < 2))
    throw ConfigError("comparison needs at least two runs");
  ComparisonTable table;
  const auto& bench = runs.front();
  const double bench_interactions = static_cast<double>(bench.training_interactions(fraction));
  for (const auto& r : runs) {
    ComparisonRow row;
    row.run = r;
    row.training_interactions = r.training_interactions(fraction);
    row.training_seconds = r.training_seconds(fraction);
    row.interactions_ratio = static_cast<double>(row.training_interactions) / bench_interactions;
    row.power_delta = relative_delta(r.test.power_kws, bench.test.power_kws);
    table.rows.push_back(std::move(row));
  }
  return table;
}

json to_json(const RunSummary& s) {
  return {{"method", s.method},
          {"kickoff_episodes", s.kickoff_episodes},
          {"episodes", s.episodes},
          {"steps_per_episode", s.steps_per_episode},
          {"cycle_time", s.cycle_time},
          {"training_potentials", s.training_potentials},
          {"test",
           {{"overflow_lps", s.test.overflow_lps},
            {"power_kws", s.test.power_kws},
            {"demand_shortfall_lps", s.test.demand_shortfall_lps},
            {"potential", s.test.potential},
            {"wall_clock_s", s.test.wall_clock_s}}}};
}

RunSummary run_summary_from_json(const json& j) {
  try {
    RunSummary s;
    s.method = j.at("method").get<std::string>();
    s.kickoff_episodes = j.at("kickoff_episodes").get<std::size_t>();
    s.episodes = j.at("episodes").get<std::size_t>();
    s.steps_per_episode = j.at("steps_per_episode").get<std::size_t>();
    s.cycle_time = j.at("cycle_time").get<double>();
    s.training_potentials = j.at("training_potentials").get<std::vector<double>>();
    const auto& t = j.at("test");
    s.test.overflow_lps = t.at("overflow_lps").get<double>();
    s.test.power_kws = t.at("power_kws").get<double>();
    s.test.demand_shortfall_lps = t.at("demand_shortfall_lps").get<double>();
    s.test.potential = t.at("potential").get<double>();
    s.test.wall_clock_s = t.value("wall_clock_s", 0.0);
    return s;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("run summary: ") + e.what());
  }
}

json to_json(const ComparisonTable& table) {
  json rows = json::array();
  for (const auto& r : table.rows) {
    json row = to_json(r.run);
    row["convergence_episode"] = r.run.convergence_episode();
    row["training_interactions"] = r.training_interactions;
    row["training_seconds"] = r.training_seconds;
    row["interactions_ratio"] = r.interactions_ratio;
    row["power_delta"] = r.power_delta;
    rows.push_back(std::move(row));
  }
  return {{"rows", rows}};
}

void print_table(std::ostream& out, const ComparisonTable& table) {
  out << fmt::format("{:<16} {:>4} {:>12} {:>14} {:>10} {:>10} {:>10} {:>10} {:>9}\n", "method",
                     "E_ko", "interactions", "train_time_s", "overflow", "power", "demand",
                     "potential", "dpower%");
  for (const auto& r : table.rows) {
    out << fmt::format("{:<16} {:>4} {:>12} {:>14.0f} {:>10.4f} {:>10.4f} {:>10.4f} {:>10.4f} {:>+9.2f}\n",
                       r.run.method, r.run.kickoff_episodes, r.training_interactions,
                       r.training_seconds, r.run.test.overflow_lps, r.run.test.power_kws,
                       r.run.test.demand_shortfall_lps, r.run.test.potential,
                       100.0 * r.power_delta);
  }
}

}  // namespace sbpg::harness

// sbpg: command-line harness for state-based potential game experiments.
//
//   sbpg train   --config PATH [--learner V] [--kickoff N] [--episodes N] [--seed N] [--out DIR]
//   sbpg test    --maps DIR --config PATH [--out FILE] [--trace FILE]
//   sbpg compare --runs DIR... [--out DIR]
//   sbpg sweep   --config PATH --grid PATH [--out DIR] [--jobs N]
//   sbpg verify  [--samples N] [--seed N] [--out FILE]
//
// Log verbosity: SBPG_LOG_LEVEL=trace|debug|info|warn|error|off (default warn).

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

#include "sbpg/core/errors.hpp"
#include "sbpg/core/log.hpp"
#include "sbpg/game/reference_game.hpp"
#include "sbpg/game/verify.hpp"
#include "sbpg/harness/compare.hpp"
#include "sbpg/harness/config.hpp"
#include "sbpg/harness/experiment.hpp"
#include "sbpg/harness/export.hpp"
#include "sbpg/harness/sweep.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace sbpg;
using namespace sbpg::harness;

namespace {

json metrics_json(const EpisodeMetrics& m) {
  return {{"overflow_lps", m.overflow_lps},
          {"power_kws", m.power_kws},
          {"demand_shortfall_lps", m.demand_shortfall_lps},
          {"potential", m.potential},
          {"wall_clock_s", m.wall_clock_s}};
}

int cmd_train(const std::string& config_path, const std::optional<std::string>& learner,
              const std::optional<std::size_t>& kickoff, const std::optional<std::size_t>& episodes,
              const std::optional<std::uint64_t>& seed, const std::optional<std::string>& out,
              bool wall_clock) {
  ConfigOverrides o;
  if (learner) o.variant = parse_variant(*learner);
  o.kickoff = kickoff;
  o.episodes = episodes;
  o.seed = seed;
  o.output_dir = out;
  auto config = load_experiment(config_path, o);
  config.record_wall_clock = config.record_wall_clock || wall_clock;

  const auto run = run_experiment(config);
  export_results(run, config.output_dir);
  print_table(std::cout, compare_runs({summarize(run)}, 0.95, false));
  return 0;
}

int cmd_test(const std::string& maps_dir, const std::string& config_path,
             const std::optional<std::string>& out, const std::optional<std::string>& trace) {
  const auto config = load_experiment(config_path);
  const auto policies = load_policies(maps_dir, config);
  PlantEnvironment env(config.plant, config.cycle_time);
  std::ostringstream rows;
  StepObserver observer;
  if (trace) {
    rows << "step";
    for (const auto& b : config.plant.buffers) rows << ",level_" << b.name;
    for (const auto& a : config.plant.actuators) rows << ",action_" << a.name;
    rows << '\n';
    observer = [&](std::size_t, std::size_t t, std::span<const ActionValue> actions) {
      rows << t;
      for (double l : env.plant().levels()) rows << fmt::format(",{}", l);
      for (const auto& a : actions) rows << fmt::format(",{}", a.value());
      rows << '\n';
    };
  }
  const auto m = run_test(config, policies, env, observer);
  if (trace) write_text_file(*trace, rows.str());
  const std::string text = metrics_json(m).dump(2) + "\n";
  std::cout << text;
  if (out) write_text_file(*out, text);
  return 0;
}

int cmd_compare(const std::vector<std::string>& runs, const std::optional<std::string>& out) {
  std::vector<RunSummary> summaries;
  for (const auto& dir : runs) summaries.push_back(load_run_summary(dir));
  const auto table = compare_runs(summaries);
  std::ostringstream text;
  print_table(text, table);
  std::cout << text.str();
  if (out) {
    std::error_code ec;
    fs::create_directories(*out, ec);
    if (ec) throw IoError("cannot create " + *out + ": " + ec.message());
    write_text_file(fs::path(*out) / "comparison.json", to_json(table).dump(2) + "\n");
    write_text_file(fs::path(*out) / "comparison.txt", text.str());
  }
  return 0;
}

int cmd_sweep(const std::string& config_path, const std::string& grid_path,
              const std::optional<std::string>& out, std::size_t jobs) {
  const json doc = read_json_file(config_path);
  const json grid = read_json_file(grid_path);
  const auto result = sweep(doc, fs::path(config_path).parent_path(), grid, jobs);
  const std::string dir =
      out ? *out : (fs::path(doc.value("output_dir", std::string("runs/default"))) / "sweep").string();
  export_sweep(result, dir);
  for (std::size_t k = 0; k < result.ranked.size(); ++k) {
    const auto& e = result.ranked[k];
    std::cout << fmt::format("{:>3}  potential {:.4f}  power {:.4f}  {}\n", k + 1, e.test.potential,
                             e.test.power_kws, e.parameters.dump());
  }
  return 0;
}

int cmd_verify(std::size_t samples, std::uint64_t seed, const std::optional<std::string>& out) {
  const auto game = make_exact_reference_game(5);
  std::mt19937_64 rng(seed);
  const auto potential = verify_potential_condition(game, samples, 1e-9, rng);
  const auto transition = verify_state_transition_condition(game, samples, 1e-12, rng);
  const json report = {
      {"potential_condition",
       {{"passed", potential.passed}, {"samples", potential.samples},
        {"violations", potential.violations}, {"max_residual", potential.max_residual}}},
      {"state_transition_condition",
       {{"passed", transition.passed}, {"samples", transition.samples},
        {"violations", transition.violations}, {"max_decrease", transition.max_residual}}}};
  const std::string text = report.dump(2) + "\n";
  std::cout << text;
  if (out) write_text_file(*out, text);
  return potential.passed && transition.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  log::init_from_env();
  CLI::App app{"State-based potential game learning on a bulk-good production chain"};
  app.require_subcommand(1);

  std::string config_path, grid_path, maps_dir;
  std::optional<std::string> learner, out, trace;
  std::optional<std::size_t> kickoff, episodes;
  std::optional<std::uint64_t> seed;
  bool wall_clock = false;
  std::vector<std::string> runs;
  std::size_t jobs = 1;
  std::size_t samples = 10000;
  std::uint64_t verify_seed = 1;

  auto* train = app.add_subcommand("train", "train players, run the test episode, export results");
  train->add_option("--config", config_path, "experiment config (JSON)")->required()->check(CLI::ExistingFile);
  train->add_option("--learner", learner, "best-response|grad1|grad2|grad3");
  train->add_option("--kickoff", kickoff, "random kick-off episodes");
  train->add_option("--episodes", episodes, "training episodes");
  train->add_option("--seed", seed, "master seed");
  train->add_option("--out", out, "output directory");
  train->add_flag("--wall-clock", wall_clock, "record wall-clock seconds (breaks byte-identical exports)");

  auto* test = app.add_subcommand("test", "run one exploitation episode with exported maps");
  test->add_option("--maps", maps_dir, "run directory or its maps/ directory")->required();
  test->add_option("--config", config_path, "experiment config (JSON)")->required()->check(CLI::ExistingFile);
  test->add_option("--out", out, "also write the metrics to this file");
  test->add_option("--trace", trace, "write per-step levels and actions (CSV)");

  auto* compare = app.add_subcommand("compare", "compare exported runs; the first is the benchmark");
  compare->add_option("--runs", runs, "run directories")->required()->expected(1, -1);
  compare->add_option("--out", out, "write comparison.json/.txt here");

  auto* sweep_cmd = app.add_subcommand("sweep", "grid search over experiment parameters");
  sweep_cmd->add_option("--config", config_path, "experiment config template (JSON)")->required()->check(CLI::ExistingFile);
  sweep_cmd->add_option("--grid", grid_path, "parameter grid (JSON)")->required()->check(CLI::ExistingFile);
  sweep_cmd->add_option("--out", out, "output directory");
  sweep_cmd->add_option("--jobs", jobs, "concurrent experiments")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "check the potential-game conditions on the reference game");
  verify->add_option("--samples", samples, "random samples per condition");
  verify->add_option("--seed", verify_seed, "sampling seed");
  verify->add_option("--out", out, "also write the report to this file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*train) return cmd_train(config_path, learner, kickoff, episodes, seed, out, wall_clock);
    if (*test) return cmd_test(maps_dir, config_path, out, trace);
    if (*compare) return cmd_compare(runs, out);
    if (*sweep_cmd) return cmd_sweep(config_path, grid_path, out, jobs);
    if (*verify) return cmd_verify(samples, verify_seed, out);
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}

#include "sbpg/harness/sweep.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include <fmt/format.h>

#include "sbpg/core/errors.hpp"
#include "sbpg/harness/experiment.hpp"
#include "sbpg/harness/export.hpp"

namespace sbpg::harness {

using nlohmann::json;

std::vector<json> expand_grid(const ParameterGrid& grid) {
  if (!grid.is_object() || grid.empty()) throw ConfigError("parameter grid is empty");
  std::vector<json> points{json::object()};
  // json objects iterate in key order
  for (const auto& [key, values] : grid.items()) {
    if (!values.is_array() || values.empty())
      throw ConfigError("grid entry '" + key + "' needs a non-empty list of values");
    std::vector<json> next;
    for (const auto& p : points) {
      for (const auto& v : values) {
        json q = p;
        q[key] = v;
        next.push_back(std::move(q));
      }
    }
    points = std::move(next);
  }
  return points;
}

void set_dotted(json& doc, const std::string& path, const json& value) {
  json* node = &doc;
  std::size_t start = 0;
  while (true) {
    const auto dot = path.find('.', start);
    const std::string key = path.substr(start, dot - start);
    if (key.empty()) throw ConfigError("malformed parameter path '" + path + "'");
    if (dot == std::string::npos) {
      (*node)[key] = value;
      return;
    }
    if (!node->contains(key) || !(*node)[key].is_object()) (*node)[key] = json::object();
    node = &(*node)[key];
    start = dot + 1;
  }
}

SweepResult sweep(const json& template_doc, const std::filesystem::path& base_dir,
                  const ParameterGrid& grid, std::size_t jobs, const ConfigOverrides& overrides) {
  const auto points = expand_grid(grid);
  std::vector<ExperimentConfig> configs;
  for (const auto& p : points) {
    json doc = template_doc;
    for (const auto& [key, value] : p.items()) set_dotted(doc, key, value);
    configs.push_back(resolve_experiment(doc, base_dir, overrides));
  }

  std::vector<SweepEntry> entries(points.size());
  auto run_one = [&](std::size_t k) {
    const auto run = run_experiment(configs[k]);
    entries[k] = SweepEntry{points[k], run.test, run.training.episodes};
  };
  jobs = std::max<std::size_t>(1, jobs);
  for (std::size_t begin = 0; begin < points.size(); begin += jobs) {
    std::vector<std::future<void>> batch;
    for (std::size_t k = begin; k < std::min(points.size(), begin + jobs); ++k)
      batch.push_back(std::async(jobs == 1 ? std::launch::deferred : std::launch::async, run_one, k));
    for (auto& f : batch) f.get();
  }

  std::stable_sort(entries.begin(), entries.end(), [](const SweepEntry& a, const SweepEntry& b) {
    if (a.test.potential != b.test.potential) return a.test.potential > b.test.potential;
    return a.parameters.dump() < b.parameters.dump();
  });
  return SweepResult{std::move(entries)};
}

void export_sweep(const SweepResult& result, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());

  std::ostringstream csv;
  csv << "rank,parameters,overflow_lps,power_kws,demand_shortfall_lps,potential\n";
  json all = json::array();
  for (std::size_t k = 0; k < result.ranked.size(); ++k) {
    const auto& e = result.ranked[k];
    std::string params = e.parameters.dump();
    std::string quoted;
    for (char c : params) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
    csv << fmt::format("{},\"{}\",{},{},{},{}\n", k + 1, quoted, e.test.overflow_lps,
                       e.test.power_kws, e.test.demand_shortfall_lps, e.test.potential);
    json potentials = json::array();
    for (const auto& m : e.training) potentials.push_back(m.potential);
    all.push_back({{"rank", k + 1},
                   {"parameters", e.parameters},
                   {"test",
                    {{"overflow_lps", e.test.overflow_lps},
                     {"power_kws", e.test.power_kws},
                     {"demand_shortfall_lps", e.test.demand_shortfall_lps},
                     {"potential", e.test.potential}}},
                   {"training_potentials", potentials}});
  }
  write_text_file(dir / "sweep.csv", csv.str());
  write_text_file(dir / "sweep.json", json{{"runs", all}}.dump(2) + "\n");
}

}  // namespace sbpg::harness

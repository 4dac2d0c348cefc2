#include "sbpg/game/map_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include <fmt/format.h>

#include "sbpg/core/errors.hpp"

namespace sbpg {

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  return out;
}

std::string header(std::size_t d) {
  std::string h = "cell";
  for (std::size_t j = 0; j < d; ++j) h += fmt::format(",idx_{}", j);
  for (std::size_t j = 0; j < d; ++j) h += fmt::format(",coord_{}", j);
  h += ",action,utility,depth";
  return h;
}

}  // namespace

void write_policy_csv(std::ostream& out, const PolicyTable& table) {
  const auto& grid = table.grid();
  const std::size_t d = grid.dimension();
  out << header(d) << '\n';
  for (std::size_t k = 0; k < table.size(); ++k) {
    std::string row = fmt::format("{}", table.cell(k));
    for (std::size_t idx : grid.multi_index(table.cell(k))) row += fmt::format(",{}", idx);
    for (double c : table.coordinates(k)) row += fmt::format(",{}", c);
    row += fmt::format(",{},{},{}", table.action(k), table.utility(k), table.depth(k));
    out << row << '\n';
  }
}

void save_policy_csv(const std::string& path, const PolicyTable& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  write_policy_csv(out, table);
  if (!out) throw IoError("failed writing " + path);
}

PolicyTable read_policy_csv(std::istream& in, const SupportGrid& grid) {
  const std::size_t d = grid.dimension();
  std::string line;
  if (!std::getline(in, line)) throw ConfigError("map file is empty");
  if (line != header(d)) throw ConfigError("map header does not match grid dimension");

  PolicyTable table(grid);
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    const auto f = split(line);
    if (f.size() != 2 * d + 4) throw ConfigError(fmt::format("map row {}: wrong field count", row));
    try {
      const CellIndex cell = std::stoull(f[0]);
      std::vector<std::size_t> idx(d);
      for (std::size_t j = 0; j < d; ++j) idx[j] = std::stoull(f[1 + j]);
      if (grid.flat_index(idx) != cell)
        throw ConfigError(fmt::format("map row {}: cell index inconsistent", row));
      const auto coords = grid.coordinates(cell);
      for (std::size_t j = 0; j < d; ++j) {
        if (std::abs(std::stod(f[1 + d + j]) - coords[j]) > 1e-12)
          throw ConfigError(fmt::format("map row {}: coordinates do not match grid", row));
      }
      const double action = std::stod(f[1 + 2 * d]);
      const double utility = std::stod(f[2 + 2 * d]);
      const std::size_t depth = std::stoull(f[3 + 2 * d]);
      if (!std::isfinite(action) || action < 0.0 || action > 1.0)
        throw ConfigError(fmt::format("map row {}: action outside [0,1]", row));
      table.add(cell, action, utility, depth);
    } catch (const std::logic_error&) {
      throw ConfigError(fmt::format("map row {}: unparsable field", row));
    }
  }
  return table;
}

PolicyTable load_policy_csv(const std::string& path, const SupportGrid& grid) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return read_policy_csv(in, grid);
}

}  // namespace sbpg

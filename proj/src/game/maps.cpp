#include "sbpg/game/maps.hpp"

#include <cmath>

#include <spdlog/spdlog.h>

#include "sbpg/core/errors.hpp"

namespace sbpg {

void PolicyTable::add(CellIndex cell, double action, double utility, std::size_t depth) {
  if (cell >= grid_->cell_count()) throw ConfigError("policy cell out of range");
  cells_.push_back(cell);
  actions_.push_back(action);
  utilities_.push_back(utility);
  depths_.push_back(depth);
}

BestResponseMap::BestResponseMap(const SupportGrid& grid)
    : grid_(&grid), cells_(grid.cell_count()) {}

bool BestResponseMap::update(CellIndex cell, ActionValue action, double utility) {
  auto& c = cells_.at(cell);
  if (!std::isfinite(utility)) {
    spdlog::warn("best-response map: rejected non-finite utility at cell {}", cell);
    return false;
  }
  if (!(utility > c.utility)) return false;
  if (!c.visited) {
    c.visited = true;
    visited_.push_back(cell);
  }
  c.utility = utility;
  c.action = action.value();
  return true;
}

PolicyTable BestResponseMap::policy() const {
  PolicyTable table(*grid_);
  for (CellIndex c : visited_) table.add(c, cells_[c].action, cells_[c].utility, 1);
  return table;
}

GradientMap::GradientMap(const SupportGrid& grid, std::size_t depth)
    : grid_(&grid),
      depth_(depth),
      stacks_(grid.cell_count(), std::vector<Sample>{Sample{}}),
      visited_flag_(grid.cell_count(), 0) {
  if (depth < 2) throw ConfigError("gradient map stack depth must be >= 2");
}

bool GradientMap::push(CellIndex cell, ActionValue action, double utility) {
  return append(cell, action, utility, false);
}

bool GradientMap::seed(CellIndex cell, ActionValue action, double utility) {
  return append(cell, action, utility, true);
}

bool GradientMap::append(CellIndex cell, ActionValue action, double utility, bool drop_pseudo) {
  auto& stack = stacks_.at(cell);
  if (!std::isfinite(utility)) {
    spdlog::warn("gradient map: rejected non-finite sample at cell {}", cell);
    return false;
  }
  if (!visited_flag_[cell]) {
    if (drop_pseudo) stack.clear();
    visited_flag_[cell] = 1;
    visited_.push_back(cell);
  }
  stack.push_back(Sample{action.value(), utility});
  if (stack.size() > depth_) stack.erase(stack.begin());
  return true;
}

PolicyTable GradientMap::policy() const {
  PolicyTable table(*grid_);
  for (CellIndex c : visited_) {
    const auto& s = stacks_[c];
    table.add(c, s.back().action, s.back().utility, s.size());
  }
  return table;
}

}  // namespace sbpg

#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "sbpg/game/grid.hpp"
#include "sbpg/game/state.hpp"

namespace sbpg {

/// One (action, utility) observation.
struct Sample {
  double action = 0.0;
  double utility = 0.0;
  bool operator==(const Sample&) const = default;
};

/// Visited cells of a performance map reduced to one representative
/// (action, utility) each. This is what exploitation interpolates over and
/// what the map export writes.
class PolicyTable {
 public:
  explicit PolicyTable(const SupportGrid& grid) : grid_(&grid) {}

  void add(CellIndex cell, double action, double utility, std::size_t depth);

  const SupportGrid& grid() const { return *grid_; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }

  CellIndex cell(std::size_t k) const { return cells_[k]; }
  double action(std::size_t k) const { return actions_[k]; }
  double utility(std::size_t k) const { return utilities_[k]; }
  std::size_t depth(std::size_t k) const { return depths_[k]; }
  std::span<const double> coordinates(std::size_t k) const { return grid_->coordinates(cells_[k]); }

 private:
  const SupportGrid* grid_;
  std::vector<CellIndex> cells_;
  std::vector<double> actions_;
  std::vector<double> utilities_;
  std::vector<std::size_t> depths_;
};

struct BestResponseCell {
  double action = 0.0;
  double utility = -std::numeric_limits<double>::infinity();
  bool visited = false;
};

/// Per-cell best explored (action, utility). A cell is only overwritten by a
/// strictly better utility.
class BestResponseMap {
 public:
  explicit BestResponseMap(const SupportGrid& grid);

  /// Returns true when the cell was overwritten. Non-finite utilities are
  /// rejected with a warning.
  bool update(CellIndex cell, ActionValue action, double utility);

  const BestResponseCell& cell(CellIndex c) const { return cells_.at(c); }
  const SupportGrid& grid() const { return *grid_; }
  std::size_t visited_count() const { return visited_.size(); }

  /// Visited cells in first-visit order.
  std::span<const CellIndex> visited_cells() const { return visited_; }

  PolicyTable policy() const;

 private:
  const SupportGrid* grid_;
  std::vector<BestResponseCell> cells_;
  std::vector<CellIndex> visited_;
};

/// Per-cell bounded stack of (action, utility) samples. An untouched cell
/// holds exactly the pseudo-sample (0, 0); once the stack exceeds `depth`
/// entries the oldest entry is dropped.
class GradientMap {
 public:
  GradientMap(const SupportGrid& grid, std::size_t depth);

  /// Appends a sample. Non-finite inputs are rejected with a warning and
  /// false is returned.
  bool push(CellIndex cell, ActionValue action, double utility);

  /// Kick-off variant of push: on a cell that still holds only the
  /// pseudo-sample the pseudo-sample is discarded first.
  bool seed(CellIndex cell, ActionValue action, double utility);

  std::span<const Sample> samples(CellIndex cell) const { return stacks_.at(cell); }
  const Sample& latest(CellIndex cell) const { return stacks_.at(cell).back(); }
  bool visited(CellIndex cell) const { return visited_flag_.at(cell) != 0; }
  std::size_t max_depth() const { return depth_; }
  const SupportGrid& grid() const { return *grid_; }
  std::size_t visited_count() const { return visited_.size(); }
  std::span<const CellIndex> visited_cells() const { return visited_; }

  /// Representative of each visited cell is its latest stack entry.
  PolicyTable policy() const;

 private:
  bool append(CellIndex cell, ActionValue action, double utility, bool drop_pseudo);

  const SupportGrid* grid_;
  std::size_t depth_;
  std::vector<std::vector<Sample>> stacks_;
  std::vector<char> visited_flag_;
  std::vector<CellIndex> visited_;
};

}  // namespace sbpg

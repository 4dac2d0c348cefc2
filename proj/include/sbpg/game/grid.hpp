#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sbpg/game/state.hpp"

namespace sbpg {

using CellIndex = std::size_t;

/// Regular grid of support vectors over [0,1]^d with L points per dimension.
/// Cells are numbered row-major, the first dimension most significant.
class SupportGrid {
 public:
  SupportGrid(std::size_t resolution, std::size_t dimension);

  std::size_t resolution() const { return resolution_; }
  std::size_t dimension() const { return dimension_; }
  std::size_t cell_count() const { return cell_count_; }

  /// Support coordinate of grid index k along any dimension: k / (L - 1).
  double center(std::size_t k) const { return centers_[k]; }

  /// Nearest support vector; equidistant states resolve to the lower index.
  CellIndex locate(const StateVector& state) const;

  std::vector<std::size_t> multi_index(CellIndex cell) const;
  CellIndex flat_index(std::span<const std::size_t> index) const;

  /// Coordinates of the cell's support vector (d values).
  std::span<const double> coordinates(CellIndex cell) const {
    return {coords_.data() + cell * dimension_, dimension_};
  }

 private:
  std::size_t resolution_;
  std::size_t dimension_;
  std::size_t cell_count_;
  std::vector<double> centers_;
  std::vector<double> coords_;
};

}  // namespace sbpg

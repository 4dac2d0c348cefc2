#include "sbpg/game/grid.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "sbpg/core/errors.hpp"

namespace sbpg {

SupportGrid::SupportGrid(std::size_t resolution, std::size_t dimension)
    : resolution_(resolution), dimension_(dimension), cell_count_(1) {
  if (resolution < 2) throw ConfigError("grid resolution must be >= 2");
  if (dimension < 1) throw ConfigError("grid dimension must be >= 1");
  for (std::size_t j = 0; j < dimension; ++j) {
    if (cell_count_ > std::numeric_limits<std::size_t>::max() / resolution)
      throw ConfigError("grid too large");
    cell_count_ *= resolution;
  }
  if (cell_count_ > (std::size_t{1} << 24)) throw ConfigError("grid exceeds 2^24 cells");

  centers_.resize(resolution);
  const double step = static_cast<double>(resolution - 1);
  for (std::size_t k = 0; k < resolution; ++k) centers_[k] = static_cast<double>(k) / step;
  centers_.back() = 1.0;

  coords_.resize(cell_count_ * dimension_);
  for (CellIndex c = 0; c < cell_count_; ++c) {
    const auto idx = multi_index(c);
    for (std::size_t j = 0; j < dimension_; ++j) coords_[c * dimension_ + j] = centers_[idx[j]];
  }
}

CellIndex SupportGrid::locate(const StateVector& state) const {
  if (state.dimension() != dimension_) {
    throw ConfigError("state dimension " + std::to_string(state.dimension()) +
                      " does not match grid dimension " + std::to_string(dimension_));
  }
  // Euclidean distance separates over dimensions on a product grid, so the
  // nearest support vector is the per-dimension nearest center.
  CellIndex cell = 0;
  const double scale = static_cast<double>(resolution_ - 1);
  for (std::size_t j = 0; j < dimension_; ++j) {
    const double s = state[j];
    auto lo = static_cast<std::size_t>(std::floor(s * scale));
    if (lo >= resolution_ - 1) lo = resolution_ - 2;
    // floor() on a rounded product may land one cell off; settle on the bracket.
    while (lo > 0 && centers_[lo] > s) --lo;
    while (lo + 2 < resolution_ && centers_[lo + 1] <= s) ++lo;
    const double d_lo = s - centers_[lo];
    const double d_hi = centers_[lo + 1] - s;
    const std::size_t k = (d_hi * d_hi < d_lo * d_lo) ? lo + 1 : lo;
    cell = cell * resolution_ + k;
  }
  return cell;
}

std::vector<std::size_t> SupportGrid::multi_index(CellIndex cell) const {
  std::vector<std::size_t> idx(dimension_);
  for (std::size_t j = dimension_; j-- > 0;) {
    idx[j] = cell % resolution_;
    cell /= resolution_;
  }
  return idx;
}

CellIndex SupportGrid::flat_index(std::span<const std::size_t> index) const {
  if (index.size() != dimension_) throw ConfigError("cell index dimension mismatch");
  CellIndex cell = 0;
  for (std::size_t k : index) {
    if (k >= resolution_) throw ConfigError("cell index out of range");
    cell = cell * resolution_ + k;
  }
  return cell;
}

}  // namespace sbpg

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sbpg/game/maps.hpp"
#include "sbpg/game/state.hpp"

namespace sbpg {

/// Newton first divided difference between two consecutive samples. When the
/// actions agree within `epsilon_eq` the plain utility difference is returned
/// instead of dividing by (almost) zero.
double gradient_basic(double a_prev, double u_prev, double a_curr, double u_curr,
                      double epsilon_eq);

/// Top-order Newton divided difference u[a_0, ..., a_p] over a sample stack
/// (oldest first). Samples whose actions repeat within `epsilon_eq` are
/// collapsed to the newest one before the table is built. If fewer than two
/// distinct actions remain, falls back to the utility difference of the last
/// two raw samples.
double gradient_polynomial(std::span<const Sample> stack, double epsilon_eq);

/// Top entry of the divided-difference table for distinct nodes `x`.
double newton_top_divided_difference(std::span<const double> x, std::span<const double> y);

double clamp_gradient(double grad, double bound);

/// a' = clamp(a + alpha * grad + noise, 0, 1)
ActionValue gradient_action_update(double a_curr, double grad, double alpha, double noise);

/// Exponentially smoothed gradient kept per map cell:
///   g_p = beta * g_{p-1} + (1 - beta) * raw
class MomentumEstimator {
 public:
  MomentumEstimator(std::size_t cells, double beta);

  double apply(CellIndex cell, double raw_grad);
  double previous(CellIndex cell) const { return prev_.at(cell); }
  double beta() const { return beta_; }

 private:
  double beta_;
  std::vector<double> prev_;
};

}  // namespace sbpg

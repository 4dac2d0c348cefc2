#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace sbpg {

/// Normalized local state observed by one player, every component in [0,1].
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(std::vector<double> values) : values_(std::move(values)) { validate(); }
  StateVector(std::initializer_list<double> values) : values_(values) { validate(); }

  std::size_t dimension() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const { return values_; }

  bool operator==(const StateVector&) const = default;

 private:
  void validate() const {
    if (values_.empty()) throw std::invalid_argument("state vector must have dimension >= 1");
    for (double v : values_) {
      if (!std::isfinite(v) || v < 0.0 || v > 1.0)
        throw std::invalid_argument("state component outside [0,1]");
    }
  }

  std::vector<double> values_;
};

/// Normalized actuator command. Always finite and within [0,1].
class ActionValue {
 public:
  constexpr ActionValue() = default;

  /// Clamps into [0,1]; throws on NaN/inf.
  static ActionValue clamped(double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite action");
    return ActionValue(std::clamp(v, 0.0, 1.0));
  }

  constexpr double value() const { return value_; }
  constexpr operator double() const { return value_; }

 private:
  constexpr explicit ActionValue(double v) : value_(v) {}
  double value_ = 0.0;
};

}  // namespace sbpg

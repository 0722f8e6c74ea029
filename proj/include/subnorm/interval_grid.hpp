#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace subnorm {

// Ordered abscissae in (0, 1], always containing 1. The smallest point is the
// epsilon floor, which stands in for 0 (where generators are infinite).
class IntervalGrid {
 public:
  static constexpr double kDefaultEpsilonFloor = 1e-6;

  // Validates: strictly increasing, inside (0,1], contains 1.
  IntervalGrid(std::vector<double> points,
               double epsilon_floor = kDefaultEpsilonFloor);

  // n points: epsilon_floor followed by k/(n-1), k = 1..n-1.
  static IntervalGrid uniform(std::size_t n,
                              double epsilon_floor = kDefaultEpsilonFloor);

  // epsilon_floor, 1 and n-2 uniform random points in between.
  static IntervalGrid random(std::size_t n, std::uint64_t seed,
                             double epsilon_floor = kDefaultEpsilonFloor);

  std::span<const double> points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  double epsilon_floor() const { return epsilon_floor_; }

  // About n points picked evenly by index; keeps the first and last point.
  IntervalGrid coarsened(std::size_t n) const;

  // Grid points merged with the decades 10^-1, 10^-2, ... down to the
  // epsilon floor, sorted ascending.
  std::vector<double> with_tail() const;

 private:
  std::vector<double> points_;
  double epsilon_floor_;
};

}  // namespace subnorm

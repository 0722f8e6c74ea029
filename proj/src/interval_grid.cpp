#include "subnorm/interval_grid.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "subnorm/errors.hpp"

namespace subnorm {

IntervalGrid::IntervalGrid(std::vector<double> points, double epsilon_floor)
    : points_(std::move(points)), epsilon_floor_(epsilon_floor) {
  if (!(epsilon_floor_ > 0 && epsilon_floor_ < 1))
    throw ParameterError("grid: epsilon floor must lie in (0,1)");
  if (points_.empty() || points_.back() != 1.0)
    throw ParameterError("grid: must end at 1");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    double p = points_[i];
    if (!(p > 0 && p <= 1)) throw ParameterError("grid: point outside (0,1]");
    if (i > 0 && !(p > points_[i - 1]))
      throw ParameterError("grid: points must be strictly increasing");
  }
}

IntervalGrid IntervalGrid::uniform(std::size_t n, double epsilon_floor) {
  if (n < 2) throw ParameterError("grid: need at least 2 points");
  std::vector<double> pts{epsilon_floor};
  for (std::size_t k = 1; k < n; ++k) {
    double p = static_cast<double>(k) / static_cast<double>(n - 1);
    if (p > pts.back()) pts.push_back(p);
  }
  pts.back() = 1.0;
  return IntervalGrid(std::move(pts), epsilon_floor);
}

IntervalGrid IntervalGrid::random(std::size_t n, std::uint64_t seed,
                                  double epsilon_floor) {
  if (n < 2) throw ParameterError("grid: need at least 2 points");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(epsilon_floor, 1.0);
  std::vector<double> pts{epsilon_floor, 1.0};
  while (pts.size() < n) {
    double p = dist(rng);
    if (p > epsilon_floor && p < 1.0 &&
        std::find(pts.begin(), pts.end(), p) == pts.end())
      pts.push_back(p);
  }
  std::sort(pts.begin(), pts.end());
  return IntervalGrid(std::move(pts), epsilon_floor);
}

IntervalGrid IntervalGrid::coarsened(std::size_t n) const {
  if (n < 2 || n >= points_.size()) return *this;
  std::vector<double> pts;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t idx = k * (points_.size() - 1) / (n - 1);
    if (pts.empty() || points_[idx] > pts.back()) pts.push_back(points_[idx]);
  }
  return IntervalGrid(std::move(pts), epsilon_floor_);
}

std::vector<double> IntervalGrid::with_tail() const {
  std::vector<double> pts(points_.begin(), points_.end());
  for (int k = 1;; ++k) {
    double d = std::pow(10.0, -k);
    if (d < epsilon_floor_ * (1 - 1e-9)) break;
    pts.push_back(d);
  }
  std::sort(pts.begin(), pts.end());
  std::vector<double> out;
  for (double p : pts) {
    if (out.empty() || std::abs(p - out.back()) > 1e-15 * p) out.push_back(p);
  }
  return out;
}

}  // namespace subnorm

#pragma once

#include <string>
#include <string_view>

namespace subnorm {

struct ToleranceProfile {
  double abs_eval_tol = 1e-9;
  double inversion_tol = 1e-12;
  double verdict_margin = 1e-6;
  double derivative_step = 1e-6;

  // All strictly positive and inversion_tol < verdict_margin; throws
  // ParameterError otherwise.
  void validate() const;

  // verdict_margin scaled to the magnitude being compared (floor 1).
  double slack(double scale) const;

  // Applies "key=value,key=value" overrides on top of *this.
  ToleranceProfile with_overrides(std::string_view overrides) const;

  std::string to_string() const;
};

}  // namespace subnorm

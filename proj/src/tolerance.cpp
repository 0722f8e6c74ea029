#include "subnorm/tolerance.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

#include "subnorm/errors.hpp"

namespace subnorm {

void ToleranceProfile::validate() const {
  for (double v : {abs_eval_tol, inversion_tol, verdict_margin, derivative_step}) {
    if (!(v > 0) || !std::isfinite(v))
      throw ParameterError("tolerance: every field must be a positive number");
  }
  if (!(inversion_tol < verdict_margin))
    throw ParameterError("tolerance: inversion_tol must be below verdict_margin");
}

double ToleranceProfile::slack(double scale) const {
  return verdict_margin * std::max(1.0, std::abs(scale));
}

ToleranceProfile ToleranceProfile::with_overrides(std::string_view overrides) const {
  ToleranceProfile out = *this;
  while (!overrides.empty()) {
    auto comma = overrides.find(',');
    std::string_view item = overrides.substr(0, comma);
    overrides = comma == std::string_view::npos ? std::string_view{}
                                                : overrides.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos)
      throw ParseError("tolerance override without '=': " + std::string(item));
    std::string key(item.substr(0, eq));
    std::string text(item.substr(eq + 1));
    double value = 0;
    try {
      std::size_t used = 0;
      value = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
    } catch (const std::exception&) {
      throw ParseError("tolerance override: bad number '" + text + "'");
    }
    if (key == "abs_eval_tol") out.abs_eval_tol = value;
    else if (key == "inversion_tol") out.inversion_tol = value;
    else if (key == "verdict_margin") out.verdict_margin = value;
    else if (key == "derivative_step") out.derivative_step = value;
    else throw ParseError("tolerance override: unknown key '" + key + "'");
  }
  out.validate();
  return out;
}

std::string ToleranceProfile::to_string() const {
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "abs_eval_tol=%g,inversion_tol=%g,verdict_margin=%g,derivative_step=%g",
                abs_eval_tol, inversion_tol, verdict_margin, derivative_step);
  return buf;
}

}  // namespace subnorm
